#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace osculate {

/// Truncated Taylor expansion f(t0 + h) = sum_k c[k] h^k up to order N.
///
/// Arithmetic on these jets applies the product, quotient and chain rules
/// coefficient by coefficient, so derivatives of closed-form expressions come
/// out exact up to floating point rounding. Nothing here is a finite
/// difference.
template <int N>
class Taylor {
  static_assert(N >= 0);

public:
  static constexpr int order = N;

  constexpr Taylor() = default;
  constexpr Taylor(double value) { c_[0] = value; }  // NOLINT: implicit constant

  /// The independent variable expanded at t.
  static constexpr Taylor variable(double t) {
    Taylor x(t);
    if constexpr (N >= 1) x.c_[1] = 1.0;
    return x;
  }

  /// Build from derivative values f, f', f'', ...
  static constexpr Taylor from_derivatives(const std::array<double, N + 1>& d) {
    Taylor x;
    double fact = 1.0;
    for (int k = 0; k <= N; ++k) {
      if (k > 0) fact *= k;
      x.c_[k] = d[k] / fact;
    }
    return x;
  }

  constexpr double coeff(int k) const { return c_[k]; }
  constexpr double& coeff(int k) { return c_[k]; }
  constexpr double value() const { return c_[0]; }

  /// k-th derivative at the expansion point.
  constexpr double derivative(int k) const {
    double fact = 1.0;
    for (int i = 2; i <= k; ++i) fact *= i;
    return c_[k] * fact;
  }

  /// Expansion of f' (one order lower).
  constexpr Taylor<(N > 0 ? N - 1 : 0)> differentiate() const {
    Taylor<(N > 0 ? N - 1 : 0)> d;
    for (int k = 0; k < N; ++k) d.coeff(k) = (k + 1) * c_[k + 1];
    return d;
  }

  template <int M>
  constexpr Taylor<M> truncate() const {
    static_assert(M <= N);
    Taylor<M> t;
    for (int k = 0; k <= M; ++k) t.coeff(k) = c_[k];
    return t;
  }

  constexpr Taylor operator-() const {
    Taylor r;
    for (int k = 0; k <= N; ++k) r.c_[k] = -c_[k];
    return r;
  }
  constexpr Taylor& operator+=(const Taylor& o) {
    for (int k = 0; k <= N; ++k) c_[k] += o.c_[k];
    return *this;
  }
  constexpr Taylor& operator-=(const Taylor& o) {
    for (int k = 0; k <= N; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  constexpr Taylor& operator*=(double s) {
    for (int k = 0; k <= N; ++k) c_[k] *= s;
    return *this;
  }

  friend constexpr Taylor operator+(Taylor a, const Taylor& b) { return a += b; }
  friend constexpr Taylor operator-(Taylor a, const Taylor& b) { return a -= b; }
  friend constexpr Taylor operator*(Taylor a, double s) { return a *= s; }
  friend constexpr Taylor operator*(double s, Taylor a) { return a *= s; }
  friend constexpr Taylor operator/(Taylor a, double s) { return a *= (1.0 / s); }
  friend constexpr Taylor operator+(Taylor a, double s) {
    a.c_[0] += s;
    return a;
  }
  friend constexpr Taylor operator+(double s, Taylor a) { return a + s; }
  friend constexpr Taylor operator-(Taylor a, double s) {
    a.c_[0] -= s;
    return a;
  }
  friend constexpr Taylor operator-(double s, const Taylor& a) { return (-a) + s; }

  friend constexpr Taylor operator*(const Taylor& a, const Taylor& b) {
    Taylor r;
    for (int k = 0; k <= N; ++k) {
      double acc = 0.0;
      for (int j = 0; j <= k; ++j) acc += a.c_[j] * b.c_[k - j];
      r.c_[k] = acc;
    }
    return r;
  }

  friend constexpr Taylor operator/(const Taylor& a, const Taylor& b) {
    Taylor q;
    for (int k = 0; k <= N; ++k) {
      double acc = a.c_[k];
      for (int j = 1; j <= k; ++j) acc -= b.c_[j] * q.c_[k - j];
      q.c_[k] = acc / b.c_[0];
    }
    return q;
  }
  friend constexpr Taylor operator/(double s, const Taylor& b) { return Taylor(s) / b; }

private:
  std::array<double, N + 1> c_{};
};

template <int N>
Taylor<N> sqrt(const Taylor<N>& a) {
  Taylor<N> b;
  b.coeff(0) = std::sqrt(a.coeff(0));
  for (int k = 1; k <= N; ++k) {
    double acc = a.coeff(k);
    for (int j = 1; j < k; ++j) acc -= b.coeff(j) * b.coeff(k - j);
    b.coeff(k) = acc / (2.0 * b.coeff(0));
  }
  return b;
}

namespace detail {

// Coupled recurrences for sin/cos of a jet.
template <int N>
void sin_cos(const Taylor<N>& a, Taylor<N>& s, Taylor<N>& c) {
  s.coeff(0) = std::sin(a.coeff(0));
  c.coeff(0) = std::cos(a.coeff(0));
  for (int k = 1; k <= N; ++k) {
    double ds = 0.0;
    double dc = 0.0;
    for (int j = 1; j <= k; ++j) {
      ds += j * a.coeff(j) * c.coeff(k - j);
      dc -= j * a.coeff(j) * s.coeff(k - j);
    }
    s.coeff(k) = ds / k;
    c.coeff(k) = dc / k;
  }
}

}  // namespace detail

template <int N>
Taylor<N> sin(const Taylor<N>& a) {
  Taylor<N> s, c;
  detail::sin_cos(a, s, c);
  return s;
}

template <int N>
Taylor<N> cos(const Taylor<N>& a) {
  Taylor<N> s, c;
  detail::sin_cos(a, s, c);
  return c;
}

// asin(a)' = a' / sqrt(1 - a^2)
template <int N>
Taylor<N> asin(const Taylor<N>& a) {
  const Taylor<N> w = 1.0 / sqrt(1.0 - a * a);
  Taylor<N> y;
  y.coeff(0) = std::asin(a.coeff(0));
  for (int k = 1; k <= N; ++k) {
    double acc = 0.0;
    for (int j = 1; j <= k; ++j) acc += j * a.coeff(j) * w.coeff(k - j);
    y.coeff(k) = acc / k;
  }
  return y;
}

/// Three jets sharing an expansion point: a vector-valued function of t.
template <int N>
struct TaylorVec3 {
  Taylor<N> x, y, z;

  template <int M>
  TaylorVec3<M> truncate() const {
    return {x.template truncate<M>(), y.template truncate<M>(), z.template truncate<M>()};
  }
  TaylorVec3<(N > 0 ? N - 1 : 0)> differentiate() const {
    return {x.differentiate(), y.differentiate(), z.differentiate()};
  }
};

template <int N>
Taylor<N> dot(const TaylorVec3<N>& a, const TaylorVec3<N>& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

template <int N>
TaylorVec3<N> cross(const TaylorVec3<N>& a, const TaylorVec3<N>& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

}  // namespace osculate
