#pragma once

#include "osculate/curve.hpp"

namespace osculate {

inline constexpr double kDefaultKappaMin = 1e-9;

/// Frenet apparatus of the generator at one parameter value.
///
/// r_s, r_ss and tau_s are derivatives with respect to arc length even when
/// the curve is evaluated in a non-arc-length parameter t; `speed` is
/// |alpha'(t)| and converts between the two.
struct FrenetData {
  double t = 0.0;
  Vec3 position = Vec3::Zero();
  Vec3 T = Vec3::UnitX();
  Vec3 N = Vec3::UnitY();
  Vec3 B = Vec3::UnitZ();
  double kappa = 1.0;
  double tau = 0.0;
  double r = 1.0;
  double r_s = 0.0;
  double r_ss = 0.0;
  double tau_s = 0.0;
  double speed = 1.0;
};

/// Throws VanishingCurvature when kappa <= kappa_min and DegenerateError when
/// the curve is not regular at t.
FrenetData frenet_at(const CurveSpec& spec, double t, double kappa_min = kDefaultKappaMin);

struct FrenetDerivativeResiduals {
  double r_s = 0.0;
  double r_ss = 0.0;
  double tau_s = 0.0;

  double max() const;
};

/// Compares the exact r_s, r_ss, tau_s against non-uniform central
/// differences of r and tau taken over numerically integrated arc length
/// between t - h, t, t + h. Throws DomainError if t +- h leaves the domain.
FrenetDerivativeResiduals frenet_derivative_check(const CurveSpec& spec, double t, double h);

}  // namespace osculate
