#include "osculate/curve.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "osculate/errors.hpp"
#include "osculate/taylor.hpp"

namespace osculate {
namespace {

constexpr double kClosedTolerance = 1e-9;

// Closed forms for the built-in curves, generic over double or Taylor<N>.
template <class S>
std::array<S, 3> helix_position(double radius, double pitch, const S& t) {
  using std::cos, std::sin;
  const double c = std::hypot(radius, pitch);
  const S a = t / c;
  return {radius * cos(a), radius * sin(a), (pitch / c) * t};
}

template <class S>
std::array<S, 3> cubic_position(const S& t) {
  return {t, t * t / 2.0, t * t * t / 3.0};
}

template <class S>
std::array<S, 3> torus_loop_position(const S& t) {
  using std::cos, std::sin;
  const S ring = 4.0 + cos(2.0 * t);
  return {cos(t) * ring, sin(t) * ring, sin(2.0 * t)};
}

template <class S>
std::array<S, 3> salkowski_position(const S& t) {
  using std::asin, std::cos, std::sin, std::sqrt;
  const double k = std::sqrt(26.0);
  const S phi = k * asin(t / 5.0);
  const S w = sqrt(25.0 - t * t);
  const S c = cos(phi);
  const S s = sin(phi);
  const S quad = 28.0 * t * t - 625.0;
  return {(78.0 * t * w * c + k * quad * s) / 2860.0,
          (-k * quad * c + 78.0 * t * w * s) / 2860.0,
          (25.0 - 2.0 * t * t) / (4.0 * k)};
}

template <class S>
std::array<S, 3> spherical_loop_position(const S& t) {
  using std::cos, std::sin;
  const S st = sin(t);
  return {st * cos(2.0 * t), st * sin(2.0 * t), cos(t)};
}

template <class S>
std::array<S, 3> builtin_position(const CurveSpec& spec, const S& t) {
  switch (spec.kind) {
    case CurveKind::helix:
      return helix_position(spec.params.at(0), spec.params.at(1), t);
    case CurveKind::cubic:
      return cubic_position(t);
    case CurveKind::torus_loop:
      return torus_loop_position(t);
    case CurveKind::salkowski:
      return salkowski_position(t);
    case CurveKind::spherical_loop:
      return spherical_loop_position(t);
    case CurveKind::polynomial:
      break;
  }
  throw ValidationError("builtin_position: not a closed-form built-in");
}

// Value and first four derivatives of sum_k c[k] t^k.
std::array<double, 5> polynomial_derivatives(const std::vector<double>& c, double t) {
  std::array<double, 5> out{};
  for (int m = 0; m < 5; ++m) {
    double acc = 0.0;
    for (std::size_t k = c.size(); k-- > static_cast<std::size_t>(m);) {
      double falling = 1.0;
      for (int j = 0; j < m; ++j) falling *= static_cast<double>(k - j);
      acc = acc * t + c[k] * falling;
    }
    out[m] = acc;
  }
  return out;
}

void check_parameter(const CurveSpec& spec, double t) {
  if (!std::isfinite(t) || !spec.domain.contains(t)) {
    throw DomainError("parameter " + std::to_string(t) + " outside curve domain [" +
                      std::to_string(spec.domain.lo) + ", " + std::to_string(spec.domain.hi) + "]");
  }
  if (spec.kind == CurveKind::salkowski && !(std::abs(t) < kSalkowskiHalfWidth)) {
    throw DomainError("salkowski curve is singular at |t| >= 5 (torsion t/sqrt(25 - t^2))");
  }
}

CurveJet jet_from_taylor(double t, const std::array<Taylor<4>, 3>& p) {
  CurveJet j;
  j.t = t;
  Vec3* slots[] = {&j.x, &j.d1, &j.d2, &j.d3, &j.d4};
  for (int k = 0; k <= 4; ++k) {
    for (int i = 0; i < 3; ++i) (*slots[k])(i) = p[i].derivative(k);
  }
  return j;
}

}  // namespace

std::string_view to_string(CurveKind kind) {
  switch (kind) {
    case CurveKind::helix:
      return "helix";
    case CurveKind::cubic:
      return "cubic";
    case CurveKind::torus_loop:
      return "torus_loop";
    case CurveKind::salkowski:
      return "salkowski";
    case CurveKind::spherical_loop:
      return "spherical_loop";
    case CurveKind::polynomial:
      return "polynomial";
  }
  return "unknown";
}

CurveKind curve_kind_from_string(std::string_view name) {
  for (CurveKind k : {CurveKind::helix, CurveKind::cubic, CurveKind::torus_loop, CurveKind::salkowski,
                      CurveKind::spherical_loop, CurveKind::polynomial}) {
    if (to_string(k) == name) return k;
  }
  throw ValidationError("unknown curve kind '" + std::string(name) + "'");
}

void CurveSpec::validate() const {
  if (!(domain.lo < domain.hi) || !std::isfinite(domain.lo) || !std::isfinite(domain.hi)) {
    throw ValidationError("curve domain must satisfy t_min < t_max");
  }
  if (kind == CurveKind::polynomial) {
    for (const auto& c : coeffs) {
      if (c.empty()) throw ValidationError("polynomial curve needs a nonempty coefficient list per coordinate");
    }
  }
  if (kind == CurveKind::helix) {
    if (params.size() != 2) throw ValidationError("helix needs params {radius, pitch}");
    if (!(params[0] > 0.0)) throw ValidationError("helix radius must be positive");
  }
  if (closed) {
    const CurveJet a = evaluate_jet(*this, domain.lo);
    const CurveJet b = evaluate_jet(*this, domain.hi);
    const double mismatch = std::max({(a.x - b.x).norm(), (a.d1 - b.d1).norm(), (a.d2 - b.d2).norm(),
                                      (a.d3 - b.d3).norm()});
    if (mismatch >= kClosedTolerance) {
      throw ValidationError("curve marked closed but endpoints differ by " + std::to_string(mismatch));
    }
  }
}

CurveSpec CurveSpec::helix(double radius, double pitch, Interval domain) {
  CurveSpec s;
  s.kind = CurveKind::helix;
  s.params = {radius, pitch};
  s.domain = domain;
  s.validate();
  return s;
}

CurveSpec CurveSpec::polynomial(std::array<std::vector<double>, 3> coeffs, Interval domain) {
  CurveSpec s;
  s.kind = CurveKind::polynomial;
  s.coeffs = std::move(coeffs);
  s.domain = domain;
  s.validate();
  return s;
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"helix", "cubic", "torus_loop", "salkowski",
                                                 "spherical_loop"};
  return names;
}

CurveSpec builtin_curve(std::string_view name) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  CurveSpec s;
  if (name == "helix") {
    // Two turns of (2 cos(s/sqrt5), 2 sin(s/sqrt5), s/sqrt5).
    return CurveSpec::helix(2.0, 1.0, {0.0, 2.0 * two_pi * std::sqrt(5.0)});
  }
  if (name == "cubic") {
    s.kind = CurveKind::cubic;
    s.domain = {-1.5, 1.5};
  } else if (name == "torus_loop") {
    s.kind = CurveKind::torus_loop;
    s.domain = {0.0, two_pi};
    s.closed = true;
  } else if (name == "salkowski") {
    s.kind = CurveKind::salkowski;
    s.domain = {-kSalkowskiHalfWidth, kSalkowskiHalfWidth};
  } else if (name == "spherical_loop") {
    s.kind = CurveKind::spherical_loop;
    s.domain = {0.0, two_pi};
    s.closed = true;
  } else {
    throw ValidationError("unknown built-in curve '" + std::string(name) + "'");
  }
  return s;
}

CurveJet evaluate_jet(const CurveSpec& spec, double t) {
  check_parameter(spec, t);
  if (spec.kind == CurveKind::polynomial) {
    CurveJet j;
    j.t = t;
    for (int i = 0; i < 3; ++i) {
      const auto d = polynomial_derivatives(spec.coeffs[i], t);
      j.x(i) = d[0];
      j.d1(i) = d[1];
      j.d2(i) = d[2];
      j.d3(i) = d[3];
      j.d4(i) = d[4];
    }
    return j;
  }
  return jet_from_taylor(t, builtin_position(spec, Taylor<4>::variable(t)));
}

Vec3 evaluate_point(const CurveSpec& spec, double t) {
  check_parameter(spec, t);
  if (spec.kind == CurveKind::polynomial) {
    Vec3 x;
    for (int i = 0; i < 3; ++i) {
      double acc = 0.0;
      for (std::size_t k = spec.coeffs[i].size(); k-- > 0;) acc = acc * t + spec.coeffs[i][k];
      x(i) = acc;
    }
    return x;
  }
  const auto p = builtin_position(spec, t);
  return {p[0], p[1], p[2]};
}

ArcLengthDerivatives arc_length_rescale(const CurveJet& jet, double /*f*/, double f_t, double f_tt,
                                        double min_speed) {
  const double v = jet.speed();
  if (!(v > min_speed)) throw DegenerateError("arc_length_rescale: curve speed vanishes");
  ArcLengthDerivatives out;
  out.f_s = f_t / v;
  out.f_ss = (f_tt - out.f_s * jet.d1.dot(jet.d2) / v) / (v * v);
  return out;
}

double arc_length(const CurveSpec& spec, double t0, double t1, int panels) {
  auto speed = [&](double t) { return evaluate_jet(spec, t).speed(); };
  double total = 0.0;
  const double step = (t1 - t0) / panels;
  for (int p = 0; p < panels; ++p) {
    const double a = t0 + p * step;
    const double b = (p + 1 == panels) ? t1 : a + step;
    total += boost::math::quadrature::gauss_kronrod<double, 15>::integrate(speed, a, b, 10, 1e-14);
  }
  return total;
}

}  // namespace osculate
