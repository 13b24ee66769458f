#include "osculate/frenet.hpp"

#include <algorithm>
#include <cmath>

#include "osculate/errors.hpp"
#include "osculate/taylor.hpp"

namespace osculate {
namespace {

// Expansion of a derivative of alpha around t, starting at derivative `first`.
template <int N>
TaylorVec3<N> derivative_jet(const CurveJet& j, int first) {
  const Vec3* d[] = {&j.x, &j.d1, &j.d2, &j.d3, &j.d4};
  TaylorVec3<N> out;
  Taylor<N>* comp[] = {&out.x, &out.y, &out.z};
  for (int i = 0; i < 3; ++i) {
    std::array<double, N + 1> vals{};
    for (int k = 0; k <= N; ++k) vals[k] = (*d[first + k])(i);
    *comp[i] = Taylor<N>::from_derivatives(vals);
  }
  return out;
}

}  // namespace

FrenetData frenet_at(const CurveSpec& spec, double t, double kappa_min) {
  const CurveJet jet = evaluate_jet(spec, t);
  const double v = jet.speed();
  if (!(v > 1e-12)) throw DegenerateError("frenet_at: alpha'(t) vanishes");

  const Vec3 c = jet.d1.cross(jet.d2);
  const double c_norm = c.norm();
  const double kappa = c_norm / (v * v * v);
  if (!(kappa > kappa_min)) {
    throw VanishingCurvature("frenet_at: curvature " + std::to_string(kappa) + " at t=" + std::to_string(t) +
                             " is below kappa_min; the osculating circle is undefined");
  }

  FrenetData fd;
  fd.t = t;
  fd.position = jet.x;
  fd.speed = v;
  fd.T = jet.d1 / v;
  fd.B = c / c_norm;
  fd.N = fd.B.cross(fd.T);
  fd.kappa = kappa;
  fd.r = 1.0 / kappa;
  fd.tau = c.dot(jet.d3) / (c_norm * c_norm);

  // r(t) = |a'|^3 / |a' x a''| to second order and tau(t) = det / |a' x a''|^2
  // to first order, both in t.
  {
    const auto a1 = derivative_jet<2>(jet, 1);
    const auto a2 = derivative_jet<2>(jet, 2);
    const auto cc = cross(a1, a2);
    const Taylor<2> v2 = dot(a1, a1);
    const Taylor<2> radius = v2 * sqrt(v2) / sqrt(dot(cc, cc));
    const auto rs = arc_length_rescale(jet, radius.value(), radius.derivative(1), radius.derivative(2));
    fd.r_s = rs.f_s;
    fd.r_ss = rs.f_ss;
  }
  {
    const auto a1 = derivative_jet<1>(jet, 1);
    const auto a2 = derivative_jet<1>(jet, 2);
    const auto a3 = derivative_jet<1>(jet, 3);
    const auto cc = cross(a1, a2);
    const Taylor<1> torsion = dot(cc, a3) / dot(cc, cc);
    fd.tau_s = torsion.derivative(1) / v;
  }
  return fd;
}

double FrenetDerivativeResiduals::max() const { return std::max({r_s, r_ss, tau_s}); }

FrenetDerivativeResiduals frenet_derivative_check(const CurveSpec& spec, double t, double h) {
  if (!(h > 0.0)) throw DomainError("frenet_derivative_check: step must be positive");
  const double lo = t - h;
  const double hi = t + h;
  if (!spec.domain.contains(lo) || !spec.domain.contains(hi)) {
    throw DomainError("frenet_derivative_check: t +- h leaves the curve domain");
  }
  const FrenetData m = frenet_at(spec, lo);
  const FrenetData c = frenet_at(spec, t);
  const FrenetData p = frenet_at(spec, hi);
  const double back = arc_length(spec, lo, t, 1);
  const double fwd = arc_length(spec, t, hi, 1);

  // Three-point formulas on the non-uniform arc-length stencil {-back, 0, fwd}.
  auto first = [&](double fm, double f0, double fp) {
    return (back * back * fp - fwd * fwd * fm + (fwd * fwd - back * back) * f0) / (back * fwd * (back + fwd));
  };
  auto second = [&](double fm, double f0, double fp) {
    return 2.0 * (fp / (fwd * (back + fwd)) - f0 / (back * fwd) + fm / (back * (back + fwd)));
  };

  FrenetDerivativeResiduals res;
  res.r_s = std::abs(c.r_s - first(m.r, c.r, p.r));
  res.r_ss = std::abs(c.r_ss - second(m.r, c.r, p.r));
  res.tau_s = std::abs(c.tau_s - first(m.tau, c.tau, p.tau));
  return res;
}

}  // namespace osculate
