#pragma once

#include <optional>
#include <string>
#include <vector>

#include "osculate/curve.hpp"
#include "osculate/frenet.hpp"
#include "osculate/grid.hpp"

namespace osculate {

struct ClassifyTolerances {
  double planar = 1e-9;          // max |tau|
  double sphere_fit = 1e-6;      // max ||X - c| - R| / max(1, R)
  double lemma_tau_skip = 1e-6;  // sphere-lemma samples need |tau| >= this
  double lemma_rs_skip = 1e-9;   // ... and |r'| >= this
  double salkowski = 1e-9;       // max |r'|
  double canal = 1e-9;           // max |r r' (1 - cos u)|
  double weingarten = 1e-6;      // normalized max |K_s H_u - K_u H_s|
  double weingarten_floor = 1e-10;
  double linear_weingarten = 1e-9;
  double constant = 1e-6;  // std / max(1, |mean|)
  double umbilic = 1e-6;
};

struct PlanarVerdict {
  bool verdict = false;
  double max_abs_tau = 0.0;
};

struct SphericalVerdict {
  bool verdict = false;
  double lemma_std = 0.0;               // std of r^2 + r'^2 / tau^2 over eligible samples
  double lemma_mean = 0.0;              // its mean, i.e. R^2
  std::size_t lemma_samples = 0;
  double max_abs_condition = 0.0;       // max |r'' tau - r' tau' + r tau^3|
  std::optional<double> fitted_radius;  // empty when the fit is degenerate
  Vec3 fitted_center = Vec3::Zero();
  double fit_residual = 0.0;            // max ||X - c| - R|
};

struct SalkowskiVerdict {
  bool verdict = false;
  double max_abs_r_s = 0.0;
};

struct CanalVerdict {
  bool verdict = false;
  double max_envelope_residual = 0.0;
};

struct WeingartenVerdict {
  bool verdict = false;
  double max_normalized_jacobian = 0.0;
  std::size_t samples = 0;
};

struct LinearWeingartenVerdict {
  bool evaluated = false;  // only when the generator has constant curvature
  bool verdict = false;
  double mean_r = 0.0;
  double a = 0.0, b = 0.0, c = 0.0;
  double discriminant = 0.0;  // a^2 - 4bc
  double max_residual = 0.0;  // max |a H + b K + c|
};

struct ConstancyVerdict {
  bool verdict = false;
  double mean = 0.0;
  double variance = 0.0;
};

struct TopologyVerdict {
  bool closed_mesh = false;
  int euler_characteristic = 0;
};

struct ClassificationReport {
  std::string curve;
  GridSpec grid;
  ClassifyTolerances tolerances;
  std::size_t regular_points = 0;
  PlanarVerdict planar_generator;
  SphericalVerdict spherical_generator;
  SalkowskiVerdict salkowski;
  CanalVerdict canal_envelope;
  WeingartenVerdict weingarten;
  LinearWeingartenVerdict linear_weingarten;
  ConstancyVerdict constant_K;
  ConstancyVerdict constant_H;
  double umbilic_fraction = 0.0;
  TopologyVerdict topology;
};

/// r r' (1 - cos u): the envelope condition of the sphere pencil centred on
/// alpha + r N, evaluated on the surface.
double envelope_residual(const FrenetData& fd, double u);

/// Runs every classification test over the regular points of `grid`.
///
/// Mean curvature is oriented consistently before it is used: the normal is
/// carried across columns by continuity (flipping where it jumps across a
/// singular parallel) and the global sign makes the parallels' normal
/// curvature nonnegative on average. Throws InsufficientGrid when fewer than
/// 5 x 5 regular points are available.
ClassificationReport classify(const CurveSpec& spec, const GridSpec& grid, const ClassifyTolerances& tol = {},
                              std::string curve_name = {});

}  // namespace osculate
