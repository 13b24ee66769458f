#pragma once

#include "osculate/frenet.hpp"
#include "osculate/surface.hpp"

namespace osculate {

/// Default angular guard around the generator line u = 0 (mod 2 pi).
inline constexpr double kDefaultUGuard = 1e-3;

struct FirstForm {
  double E = 0.0;
  double F = 0.0;
  double G = 0.0;
  double W = 0.0;  // sqrt(EG - F^2)
};

struct SecondForm {
  double e = 0.0;
  double f = 0.0;
  double g = 0.0;
};

struct FundamentalForms {
  double E = 0.0, F = 0.0, G = 0.0;
  double e = 0.0, f = 0.0, g = 0.0;
  double W = 0.0;
};

struct CurvatureSample {
  double K = 0.0;
  double H = 0.0;
  double k1 = 0.0;  // k1 >= k2
  double k2 = 0.0;
  double umb = 0.0;  // H^2 - K
  double kn_parallel = 0.0;
  double kg_parallel = 0.0;
};

/// det(X_s, X_u, X_ss), det(X_s, X_u, X_su), det(X_s, X_u, X_uu) in closed form.
struct FormDeterminants {
  double ss = 0.0;
  double su = 0.0;
  double uu = 0.0;
};

FirstForm first_form(const FrenetData& fd, double u);
FormDeterminants form_determinants(const FrenetData& fd, double u);

/// e, f, g as determinant / W. Throws SingularPoint when W <= eps_reg.
SecondForm second_form(const FrenetData& fd, double u, double eps_reg = kDefaultRegularEps);

FundamentalForms fundamental_forms(const FrenetData& fd, double u, double eps_reg = kDefaultRegularEps);

/// r'' tau - r' tau' + r tau^3; vanishes exactly on spherical generators.
double sphere_condition(const FrenetData& fd);

/// Closed-form H^2 - K. Throws SingularPoint near the generator line.
double umbilic_discriminant(const FrenetData& fd, double u, double u_guard = kDefaultUGuard);

/// Closed-form K and H (and derived quantities) at (s, u).
///
/// Orientation follows unit_normal(). Throws SingularPoint when u is within
/// `u_guard` of the generator line or when r' = tau = 0 on the parallel.
CurvatureSample curvatures(const FrenetData& fd, double u, double u_guard = kDefaultUGuard);

struct GaussMean {
  double K = 0.0;
  double H = 0.0;
};

/// Shape-operator route: K = (eg - f^2)/(EG - F^2), H = (eG - 2fF + gE)/(2(EG - F^2)).
GaussMean curvatures_from_forms(const FirstForm& I, const SecondForm& II);

/// K and H for a generator of constant radius of curvature r.
GaussMean salkowski_curvatures(double r, double u, double u_guard = kDefaultUGuard);

/// Expressions that appear in alternative transcriptions of the closed forms.
/// They exist so that the verifier can show, against the numeric oracle, which
/// transcription is correct; nothing else should call them.
namespace alternates {

/// e with the last term written as r (1 - cos u)(r'' - tau r'').
double e_coefficient_transcribed(const FrenetData& fd, double u);

/// H with the middle numerator term 2 tau r^2 (cos u - 1) instead of 2 r'^2 tau (cos u - 1).
double mean_curvature_r2_term(const FrenetData& fd, double u);

/// Sphere condition written as r'' tau - r' tau' + r^2 tau^3.
double sphere_condition_r2(const FrenetData& fd);

/// H^2 - K built from sphere_condition_r2.
double umbilic_discriminant_r2(const FrenetData& fd, double u);

}  // namespace alternates

}  // namespace osculate
