#include <cmath>

#include "doctest.h"

#include "osculate/taylor.hpp"

using osculate::Taylor;

TEST_CASE("jet of a polynomial carries its derivatives") {
  const auto t = Taylor<4>::variable(1.5);
  const auto p = 3.0 * t * t * t - 2.0 * t + 7.0;
  CHECK(p.value() == doctest::Approx(3 * 3.375 - 3 + 7));
  CHECK(p.derivative(1) == doctest::Approx(9 * 2.25 - 2));
  CHECK(p.derivative(2) == doctest::Approx(18 * 1.5));
  CHECK(p.derivative(3) == doctest::Approx(18));
  CHECK(p.derivative(4) == doctest::Approx(0.0));
}

TEST_CASE("transcendental jets match hand derivatives") {
  const double x0 = 0.7;
  const auto x = Taylor<4>::variable(x0);
  const auto s = sin(x);
  const auto c = cos(x);
  CHECK(s.derivative(1) == doctest::Approx(std::cos(x0)));
  CHECK(s.derivative(2) == doctest::Approx(-std::sin(x0)));
  CHECK(s.derivative(3) == doctest::Approx(-std::cos(x0)));
  CHECK(c.derivative(4) == doctest::Approx(std::cos(x0)));

  const auto q = sqrt(1.0 + x * x);
  CHECK(q.derivative(1) == doctest::Approx(x0 / std::sqrt(1 + x0 * x0)));
  CHECK(q.derivative(2) == doctest::Approx(std::pow(1 + x0 * x0, -1.5)));

  const auto a = asin(x / 2.0);
  CHECK(a.derivative(1) == doctest::Approx(1.0 / std::sqrt(4 - x0 * x0)));
  CHECK(a.derivative(2) == doctest::Approx(x0 * std::pow(4 - x0 * x0, -1.5)));
}

TEST_CASE("quotient rule") {
  const double x0 = 0.3;
  const auto x = Taylor<3>::variable(x0);
  const auto f = 1.0 / (1.0 + x);
  for (int k = 0; k <= 3; ++k) {
    const double fact = std::tgamma(k + 1.0);
    CHECK(f.derivative(k) == doctest::Approx(std::pow(-1.0, k) * fact / std::pow(1 + x0, k + 1)));
  }
  const auto g = (x * x) / sin(x);
  const double h = 1e-3;
  auto gf = [](double y) { return y * y / std::sin(y); };
  CHECK(g.derivative(1) == doctest::Approx((gf(x0 + h) - gf(x0 - h)) / (2 * h)).epsilon(1e-6));
}

TEST_CASE("differentiate and truncate shift orders") {
  const auto x = Taylor<4>::variable(2.0);
  const auto p = x * x * x * x;
  const auto d = p.differentiate();
  CHECK(d.value() == doctest::Approx(32.0));
  CHECK(d.derivative(1) == doctest::Approx(48.0));
  CHECK(d.derivative(3) == doctest::Approx(24.0));
  const auto t = p.truncate<2>();
  CHECK(t.derivative(2) == doctest::Approx(48.0));
}
