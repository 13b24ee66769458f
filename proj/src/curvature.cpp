#include "osculate/curvature.hpp"

#include <algorithm>
#include <cmath>

#include "osculate/errors.hpp"

namespace osculate {
namespace {

// 1 - cos u and sin^2(u/2) without cancellation near u = 0.
double half_sin_sq(double u) {
  const double h = std::sin(0.5 * u);
  return h * h;
}
double one_minus_cos(double u) { return 2.0 * half_sin_sq(u); }

void require_off_generator(double u, double u_guard) {
  if (generator_distance(u) < u_guard) {
    throw SingularPoint("u=" + std::to_string(u) + " lies within the generator-line guard");
  }
}

// sqrt(r^2 tau^2 + r'^2) is dimensionless; below this the parallel is singular.
constexpr double kScaleEps = 1e-9;

double require_scale(const FrenetData& fd) {
  const double q = normal_scale(fd);
  if (!(q > kScaleEps)) throw SingularPoint("r' = tau = 0: every point of this parallel is singular");
  return q;
}

}  // namespace

FirstForm first_form(const FrenetData& fd, double u) {
  const double r = fd.r;
  const double r1 = fd.r_s;
  const double tau = fd.tau;
  const double s2 = half_sin_sq(u);
  FirstForm I;
  I.E = 0.5 * (2.0 + 8.0 * r * r * tau * tau * s2 * s2 + 4.0 * r1 * std::sin(u) + 4.0 * r1 * r1 * one_minus_cos(u));
  I.F = r * (1.0 + r1 * std::sin(u));
  I.G = r * r;
  I.W = 2.0 * r * normal_scale(fd) * s2;
  return I;
}

FormDeterminants form_determinants(const FrenetData& fd, double u) {
  const double r = fd.r;
  const double r1 = fd.r_s;
  const double r2 = fd.r_ss;
  const double tau = fd.tau;
  const double tau1 = fd.tau_s;
  const double su = std::sin(u);
  const double cu = std::cos(u);
  const double s2 = half_sin_sq(u);
  FormDeterminants d;
  d.ss = r * s2 *
         (2.0 * tau * r1 * (su + 2.0 * one_minus_cos(u) * r1) - 4.0 * r * r * tau * tau * tau * cu * s2 +
          2.0 * r * (fd.kappa * tau * (1.0 + r1 * su) + one_minus_cos(u) * (r1 * tau1 - tau * r2)));
  d.su = 2.0 * r * r * tau * (1.0 + r1 * su) * s2;
  d.uu = r * r * r * tau * one_minus_cos(u);
  return d;
}

SecondForm second_form(const FrenetData& fd, double u, double eps_reg) {
  const double W = first_form(fd, u).W;
  if (!(W > eps_reg) || on_generator_line(u)) {
    throw SingularPoint("second_form: W=" + std::to_string(W) + " at a non-regular point");
  }
  const FormDeterminants d = form_determinants(fd, u);
  return {d.ss / W, d.su / W, d.uu / W};
}

FundamentalForms fundamental_forms(const FrenetData& fd, double u, double eps_reg) {
  const FirstForm I = first_form(fd, u);
  const SecondForm II = second_form(fd, u, eps_reg);
  return {I.E, I.F, I.G, II.e, II.f, II.g, I.W};
}

double sphere_condition(const FrenetData& fd) {
  return fd.r_ss * fd.tau - fd.r_s * fd.tau_s + fd.r * fd.tau * fd.tau * fd.tau;
}

double umbilic_discriminant(const FrenetData& fd, double u, double u_guard) {
  require_off_generator(u, u_guard);
  const double q = require_scale(fd);
  const double omc = one_minus_cos(u);
  const double c = sphere_condition(fd);
  const double q3 = q * q * q;
  return fd.r * fd.r * c * c / (4.0 * omc * omc * q3 * q3);
}

CurvatureSample curvatures(const FrenetData& fd, double u, double u_guard) {
  require_off_generator(u, u_guard);
  const double q = require_scale(fd);
  const double r = fd.r;
  const double r1 = fd.r_s;
  const double tau = fd.tau;
  const double cu = std::cos(u);
  const double omc = one_minus_cos(u);  // 1 - cos u
  const double q2 = q * q;
  const double tail = r * (tau * fd.r_ss - r1 * fd.tau_s);
  const double t3 = r * r * tau * tau * tau;

  CurvatureSample c;
  c.K = tau * (t3 * cu - r1 * r1 * tau * omc + tail) / (-omc * q2 * q2);
  c.H = -(t3 * (2.0 * cu - 1.0) - 2.0 * r1 * r1 * tau * omc + tail) / (2.0 * omc * q2 * q);
  c.umb = umbilic_discriminant(fd, u, u_guard);
  if (c.umb > 0.0) {
    const double big = c.H + std::copysign(std::sqrt(c.umb), c.H);
    const double small = c.K / big;
    c.k1 = std::max(big, small);
    c.k2 = std::min(big, small);
  } else {
    c.k1 = c.k2 = c.H;
  }
  c.kn_parallel = tau / q;
  c.kg_parallel = r1 / (r * q);
  return c;
}

GaussMean curvatures_from_forms(const FirstForm& I, const SecondForm& II) {
  const double det = I.E * I.G - I.F * I.F;
  return {(II.e * II.g - II.f * II.f) / det, (II.e * I.G - 2.0 * II.f * I.F + II.g * I.E) / (2.0 * det)};
}

GaussMean salkowski_curvatures(double r, double u, double u_guard) {
  require_off_generator(u, u_guard);
  if (!(r > 0.0)) throw DomainError("salkowski_curvatures: r must be positive");
  const double cu = std::cos(u);
  const double omc = one_minus_cos(u);
  return {-cu / (r * r * omc), -(2.0 * cu - 1.0) / (2.0 * r * omc)};
}

namespace alternates {

double e_coefficient_transcribed(const FrenetData& fd, double u) {
  const double r = fd.r;
  const double r1 = fd.r_s;
  const double r2 = fd.r_ss;
  const double tau = fd.tau;
  const double su = std::sin(u);
  const double cu = std::cos(u);
  const double q = normal_scale(fd);
  return (tau * r1 * (su - 2.0 * (cu - 1.0) * r1) - 2.0 * r * r * tau * tau * tau * cu * half_sin_sq(u) +
          tau * (1.0 + r1 * su) - r * (cu - 1.0) * (r2 - tau * r2)) /
         q;
}

double mean_curvature_r2_term(const FrenetData& fd, double u) {
  const double r = fd.r;
  const double tau = fd.tau;
  const double omc = one_minus_cos(u);
  const double q = normal_scale(fd);
  return -(r * r * tau * tau * tau * (2.0 * std::cos(u) - 1.0) - 2.0 * tau * r * r * omc +
           r * (tau * fd.r_ss - fd.tau_s * fd.r_s)) /
         (2.0 * omc * q * q * q);
}

double sphere_condition_r2(const FrenetData& fd) {
  return fd.r_ss * fd.tau - fd.r_s * fd.tau_s + fd.r * fd.r * fd.tau * fd.tau * fd.tau;
}

double umbilic_discriminant_r2(const FrenetData& fd, double u) {
  const double q = normal_scale(fd);
  const double omc = one_minus_cos(u);
  const double c = sphere_condition_r2(fd);
  const double q3 = q * q * q;
  return fd.r * fd.r * c * c / (4.0 * omc * omc * q3 * q3);
}

}  // namespace alternates

}  // namespace osculate
