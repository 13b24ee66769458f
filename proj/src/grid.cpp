#include "osculate/grid.hpp"

#include <cmath>
#include <string>

#include "osculate/curvature.hpp"
#include "osculate/errors.hpp"

namespace osculate {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<double> sample(double lo, double hi, int n, bool wrap, double period) {
  std::vector<double> v(static_cast<std::size_t>(n));
  const double step = wrap ? period / n : (hi - lo) / (n - 1);
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = lo + i * step;
  if (!wrap) v.back() = hi;
  return v;
}

}  // namespace

void GridSpec::validate() const {
  if (n_s < 2 || n_u < 2) {
    throw DomainError("grid needs n_s, n_u >= 2 (got " + std::to_string(n_s) + "x" + std::to_string(n_u) + ")");
  }
  if (!(s_min < s_max) || !(u_min < u_max)) throw DomainError("grid ranges must be nonempty");
  if (wrap_u) {
    const double span = u_max - u_min;
    if (span < kTwoPi - 2.0 * kDefaultUGuard - 1e-12 || span > kTwoPi + 1e-12) {
      throw DomainError("wrap_u needs a u-range covering the full circle");
    }
  }
}

std::vector<double> GridSpec::s_values() const { return sample(s_min, s_max, n_s, wrap_s, s_max - s_min); }

std::vector<double> GridSpec::u_values() const { return sample(u_min, u_max, n_u, wrap_u, kTwoPi); }

Interval sampling_interval(const CurveSpec& spec) {
  if (spec.kind == CurveKind::salkowski) {
    return {std::max(spec.domain.lo, -4.5), std::min(spec.domain.hi, 4.5)};
  }
  return spec.domain;
}

GridSpec default_grid(const CurveSpec& spec, int n_s, int n_u) {
  const Interval s = sampling_interval(spec);
  GridSpec g;
  g.s_min = s.lo;
  g.s_max = s.hi;
  g.n_s = n_s;
  g.n_u = n_u;
  return g;
}

GridSpec verification_grid(const CurveSpec& spec, int n_s, int n_u) {
  GridSpec g = default_grid(spec, n_s, n_u);
  const double inset = 0.02 * (g.s_max - g.s_min);
  g.s_min += inset;
  g.s_max -= inset;
  g.u_min = 0.25;
  g.u_max = kTwoPi - 0.25;
  return g;
}

}  // namespace osculate
