#pragma once

#include <stdexcept>
#include <string>

namespace osculate {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Parameter outside the curve domain, or an invalid grid/spec.
class DomainError : public Error {
public:
  using Error::Error;
};

// Speed or frame collapses (|alpha'| ~ 0).
class DegenerateError : public Error {
public:
  using Error::Error;
};

// Curvature at or below kappa_min: the osculating circle does not exist.
class VanishingCurvature : public Error {
public:
  using Error::Error;
};

// Point of the surface where X_s x X_u vanishes.
class SingularPoint : public Error {
public:
  using Error::Error;
};

class StencilOutOfDomain : public Error {
public:
  using Error::Error;
};

class InsufficientGrid : public Error {
public:
  using Error::Error;
};

class MeshNotClosed : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

// Malformed user input (curve files, CLI values).
class ValidationError : public Error {
public:
  using Error::Error;
};

}  // namespace osculate
