#include <cmath>
#include <numbers>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "doctest.h"

#include "osculate/curve.hpp"
#include "osculate/errors.hpp"
#include "osculate/frenet.hpp"

using namespace osculate;
using std::numbers::pi;

namespace {

void check_vec(const Vec3& a, const Vec3& b, double tol) {
  CHECK((a - b).norm() < tol);
}

// Curvature of the cubic (t, t^2/2, t^3/3) from its hand derivatives.
double cubic_kappa(double t) {
  const Vec3 d1(1.0, t, t * t);
  const Vec3 d2(0.0, 1.0, 2.0 * t);
  return d1.cross(d2).norm() / std::pow(d1.norm(), 3);
}

}  // namespace

TEST_CASE("helix jet at t = 0") {
  const CurveSpec h = builtin_curve("helix");
  const CurveJet j = evaluate_jet(h, 0.0);
  check_vec(j.x, Vec3(2, 0, 0), 1e-15);
  check_vec(j.d1, Vec3(0, 2 / std::sqrt(5.0), 1 / std::sqrt(5.0)), 1e-15);
}

TEST_CASE("cubic jet at t = 0") {
  const CurveJet j = evaluate_jet(builtin_curve("cubic"), 0.0);
  check_vec(j.x, Vec3::Zero(), 0.0 + 1e-300);
  check_vec(j.d1, Vec3(1, 0, 0), 1e-15);
  check_vec(j.d2, Vec3(0, 1, 0), 1e-15);
  check_vec(j.d3, Vec3(0, 0, 2), 1e-15);
  check_vec(j.d4, Vec3::Zero(), 1e-15);
}

TEST_CASE("polynomial straight line") {
  const CurveSpec line = CurveSpec::polynomial({{{0.0, 1.0}, {0.0}, {0.0}}}, {-2.0, 2.0});
  const CurveJet j = evaluate_jet(line, 1.0);
  check_vec(j.x, Vec3(1, 0, 0), 1e-15);
  check_vec(j.d1, Vec3(1, 0, 0), 1e-15);
  CHECK(j.d2.norm() == 0.0);
  CHECK(j.d3.norm() == 0.0);
  CHECK(j.d4.norm() == 0.0);
}

TEST_CASE("polynomial derivatives agree with the cubic built-in") {
  const CurveSpec poly = CurveSpec::polynomial({{{0, 1}, {0, 0, 0.5}, {0, 0, 0, 1.0 / 3.0}}}, {-1.5, 1.5});
  const CurveSpec cubic = builtin_curve("cubic");
  for (double t : {-1.2, -0.3, 0.0, 0.8, 1.4}) {
    const CurveJet a = evaluate_jet(poly, t);
    const CurveJet b = evaluate_jet(cubic, t);
    check_vec(a.x, b.x, 1e-14);
    check_vec(a.d1, b.d1, 1e-14);
    check_vec(a.d2, b.d2, 1e-14);
    check_vec(a.d3, b.d3, 1e-14);
    check_vec(a.d4, b.d4, 1e-14);
  }
}

TEST_CASE("built-in jets agree with finite differences of positions") {
  for (const auto& name : builtin_names()) {
    const CurveSpec spec = builtin_curve(name);
    const double t = spec.domain.lo + 0.37 * spec.domain.length();
    const double h = 1e-3;
    auto p = [&](double x) { return evaluate_point(spec, x); };
    const CurveJet j = evaluate_jet(spec, t);
    const Vec3 d1 = (p(t + h) - p(t - h)) / (2 * h);
    const Vec3 d2 = (p(t + h) - 2 * p(t) + p(t - h)) / (h * h);
    const Vec3 d3 = (p(t + 2 * h) - 2 * p(t + h) + 2 * p(t - h) - p(t - 2 * h)) / (2 * h * h * h);
    const Vec3 d4 = (p(t + 2 * h) - 4 * p(t + h) + 6 * p(t) - 4 * p(t - h) + p(t - 2 * h)) / std::pow(h, 4);
    INFO(name);
    CHECK((j.x - p(t)).norm() < 1e-14);
    CHECK((j.d1 - d1).norm() < 1e-5 * (1 + j.d1.norm()));
    CHECK((j.d2 - d2).norm() < 1e-5 * (1 + j.d2.norm()));
    CHECK((j.d3 - d3).norm() < 1e-4 * (1 + j.d3.norm()));
    CHECK((j.d4 - d4).norm() < 1e-2 * (1 + j.d4.norm()));
  }
}

TEST_CASE("unit speed of helix and salkowski") {
  const CurveSpec h = builtin_curve("helix");
  for (int i = 0; i <= 40; ++i) {
    const double t = h.domain.lo + h.domain.length() * i / 40.0;
    CHECK(std::abs(evaluate_jet(h, t).speed() - 1.0) < 1e-12);
  }
  const CurveSpec s = builtin_curve("salkowski");
  for (int i = 0; i <= 40; ++i) {
    const double t = -4.99 + 9.98 * i / 40.0;
    CHECK(std::abs(evaluate_jet(s, t).speed() - 1.0) < 1e-9);
  }
}

TEST_CASE("closed built-ins match at their endpoints") {
  for (const char* name : {"torus_loop", "spherical_loop"}) {
    const CurveSpec c = builtin_curve(name);
    REQUIRE(c.closed);
    const CurveJet a = evaluate_jet(c, c.domain.lo);
    const CurveJet b = evaluate_jet(c, c.domain.hi);
    CHECK((a.x - b.x).norm() < 1e-9);
    CHECK((a.d1 - b.d1).norm() < 1e-9);
    CHECK((a.d2 - b.d2).norm() < 1e-9);
    CHECK((a.d3 - b.d3).norm() < 1e-9);
  }
}

TEST_CASE("spherical loop lies on the unit sphere") {
  const CurveSpec c = builtin_curve("spherical_loop");
  for (int i = 0; i < 50; ++i) CHECK(std::abs(evaluate_point(c, 2 * pi * i / 50) .norm() - 1.0) < 1e-15);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(evaluate_jet(builtin_curve("helix"), -0.1), DomainError);
  CHECK_THROWS_AS(evaluate_jet(builtin_curve("cubic"), 1.6), DomainError);
  CHECK_THROWS_AS(evaluate_jet(builtin_curve("salkowski"), 5.0), DomainError);
  CHECK_THROWS_AS(evaluate_jet(builtin_curve("salkowski"), -5.0), DomainError);
  CHECK_NOTHROW(evaluate_jet(builtin_curve("salkowski"), 4.999));
  CHECK_THROWS_AS(builtin_curve("trefoil"), ValidationError);
}

TEST_CASE("spec validation") {
  CurveSpec bad = builtin_curve("cubic");
  bad.domain = {1.0, 1.0};
  CHECK_THROWS_AS(bad.validate(), ValidationError);

  CHECK_THROWS_AS(CurveSpec::polynomial({{{0, 1}, {}, {0}}}, {0, 1}), ValidationError);

  CurveSpec open_claimed_closed = builtin_curve("cubic");
  open_claimed_closed.closed = true;
  CHECK_THROWS_AS(open_claimed_closed.validate(), ValidationError);

  CHECK_THROWS_AS(CurveSpec::helix(-1.0, 1.0, {0, 1}), ValidationError);
}

TEST_CASE("kind names round trip") {
  for (CurveKind k : {CurveKind::helix, CurveKind::cubic, CurveKind::torus_loop, CurveKind::salkowski,
                      CurveKind::spherical_loop, CurveKind::polynomial}) {
    CHECK(curve_kind_from_string(to_string(k)) == k);
  }
}

TEST_CASE("arc_length_rescale identities") {
  CurveJet j;
  j.d1 = Vec3(1, 0, 0);
  j.d2 = Vec3(0, 3, 0);
  const auto a = arc_length_rescale(j, 0.0, 2.0, -5.0);
  CHECK(a.f_s == 2.0);
  CHECK(a.f_ss == -5.0);

  const CurveJet c0 = evaluate_jet(builtin_curve("cubic"), 0.0);
  const auto b = arc_length_rescale(c0, 1.0, 0.25, 0.75);
  CHECK(b.f_s == doctest::Approx(0.25));
  CHECK(b.f_ss == doctest::Approx(0.75));

  CurveJet stalled;
  CHECK_THROWS_AS(arc_length_rescale(stalled, 0.0, 1.0, 1.0), DegenerateError);
}

TEST_CASE("arc-length derivatives of r on the cubic match a numeric reparametrization") {
  // Oracle: s(t) by tanh-sinh quadrature of the hand-written speed, t(s) by
  // bisection, then centred differences of kappa(t(s)) in s.
  auto speed = [](double t) { return std::sqrt(1 + t * t + t * t * t * t); };
  boost::math::quadrature::tanh_sinh<double> integrator;
  auto s_of = [&](double t) { return t == 0.0 ? 0.0 : integrator.integrate(speed, 0.0, t); };
  auto t_of = [&](double s) {
    double lo = -1.5, hi = 1.5;
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (lo + hi);
      (s_of(mid) < s ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  };
  auto r_of_s = [&](double s) { return 1.0 / cubic_kappa(t_of(s)); };

  const double t1 = 1.0;
  const double s1 = s_of(t1);
  const double h = 1e-3;
  const double rp = r_of_s(s1 + h), r0 = r_of_s(s1), rm = r_of_s(s1 - h);
  const double rp2 = r_of_s(s1 + 2 * h), rm2 = r_of_s(s1 - 2 * h);
  const double d1 = (-rp2 + 8 * rp - 8 * rm + rm2) / (12 * h);
  const double d2 = (-rp2 + 16 * rp - 30 * r0 + 16 * rm - rm2) / (12 * h * h);

  const FrenetData fd = frenet_at(builtin_curve("cubic"), t1);
  CHECK(fd.r == doctest::Approx(r0).epsilon(1e-12));
  CHECK(std::abs(fd.r_s - d1) < 1e-6);
  CHECK(std::abs(fd.r_ss - d2) < 1e-6);

  // Same oracle against arc_length itself.
  CHECK(arc_length(builtin_curve("cubic"), 0.0, t1) == doctest::Approx(s1).epsilon(1e-13));
}

TEST_CASE("helix arc length equals parameter length") {
  const CurveSpec h = builtin_curve("helix");
  CHECK(arc_length(h, 1.0, 7.5) == doctest::Approx(6.5).epsilon(1e-13));
}
