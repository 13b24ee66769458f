#pragma once

#include <numbers>
#include <vector>

#include "osculate/curve.hpp"

namespace osculate {

/// Sampling of the (s, u) parameter rectangle.
///
/// Without wrapping, both ends of a range are sampled. With wrap_s (wrap_u)
/// the range is treated as one full period: n samples are spaced by
/// length / n and the last sample connects back to the first.
struct GridSpec {
  double s_min = 0.0;
  double s_max = 1.0;
  int n_s = 50;
  double u_min = 1e-3;
  double u_max = 2.0 * std::numbers::pi - 1e-3;
  int n_u = 50;
  bool wrap_s = false;
  bool wrap_u = false;

  /// Throws DomainError on n < 2, empty ranges, or a wrap_u range that does
  /// not cover the full circle up to the generator guard.
  void validate() const;

  std::vector<double> s_values() const;
  std::vector<double> u_values() const;
  std::size_t size() const { return static_cast<std::size_t>(n_s) * static_cast<std::size_t>(n_u); }
};

/// s-range over which a curve can be sampled: its domain, shrunk to
/// [-4.5, 4.5] for the Salkowski built-in whose endpoints are singular.
Interval sampling_interval(const CurveSpec& spec);

/// n_s x n_u grid over sampling_interval() and u in [1e-3, 2 pi - 1e-3].
GridSpec default_grid(const CurveSpec& spec, int n_s = 50, int n_u = 50);

/// Grid used for oracle verification: keeps finite-difference stencils
/// inside the curve domain, and keeps u at least 0.25 away from the generator
/// line where K and H grow like 1/(1 - cos u).
GridSpec verification_grid(const CurveSpec& spec, int n_s = 50, int n_u = 50);

}  // namespace osculate
