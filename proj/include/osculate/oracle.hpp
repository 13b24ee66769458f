#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "osculate/curve.hpp"
#include "osculate/grid.hpp"

namespace osculate {

/// Finite-difference settings. Step sizes must lie in (0, 1e-2).
struct OracleConfig {
  double h_s = 4e-3;
  double h_u = 8e-3;
  bool richardson = true;
  int levels = 4;  // Richardson table depth: steps h, 2h, ..., 2^(levels-1) h
  double tol_report = 1e-5;
  double eps_reg = 1e-9;

  void validate() const;
};

using SurfaceFn = std::function<Vec3(double, double)>;

struct ParamBox {
  Interval s;
  Interval u;
};

struct OracleForms {
  double E = 0.0, F = 0.0, G = 0.0;
  double e = 0.0, f = 0.0, g = 0.0;
  double K = 0.0, H = 0.0;
  Vec3 normal = Vec3::Zero();  // X_s x X_u / |X_s x X_u|
};

/// Differential geometry of an arbitrary surface from positions alone.
///
/// Central differences (three-point first/second derivatives, four-point mixed
/// derivative); with `richardson` the steps h, 2h, 4h, ... are combined in a
/// Richardson table that cancels the h^2, h^4, ... error terms. Throws StencilOutOfDomain when a stencil point leaves
/// `box` and SingularPoint when |X_s x X_u| < eps_reg.
OracleForms oracle_forms(const SurfaceFn& surface, double s, double u, const OracleConfig& cfg,
                         const std::optional<ParamBox>& box = std::nullopt);

/// Surface of osculating circles of `spec` as a position-only function of (t, u).
SurfaceFn osculating_surface(const CurveSpec& spec);

inline constexpr std::array<const char*, 8> kVerifiedQuantities = {"E", "F", "G", "e", "f", "g", "K", "H"};

struct QuantityStats {
  std::string name;
  double max_abs = 0.0;
  double max_rel = 0.0;  // |closed - oracle| / (1 + |oracle|)
  double mean_abs = 0.0;
  bool pass = false;
};

struct PointDelta {
  double s = 0.0;
  double u = 0.0;
  std::array<double, 8> rel{};  // order of kVerifiedQuantities
  double normal_dev = 0.0;      // |1 - |<n_closed, n_oracle>||
};

/// Which of two transcriptions of a closed-form term agrees with the oracle.
struct TermVerdict {
  std::string id;
  std::string canonical;
  std::string alternate;
  double canonical_max_rel = 0.0;
  double alternate_max_rel = 0.0;
  std::string verdict;  // canonical_confirmed | alternate_confirmed | indistinguishable | neither_matches
};

struct VerificationReport {
  std::string curve;
  GridSpec grid;
  OracleConfig config;
  std::vector<QuantityStats> quantities;
  double normal_max_dev = 0.0;
  bool normal_pass = false;
  std::size_t compared_points = 0;
  std::size_t skipped_points = 0;
  std::vector<PointDelta> points;
  std::vector<TermVerdict> verdicts;
  bool pass = false;

  const QuantityStats& stats(std::string_view name) const;
};

inline constexpr double kNormalAgreementTol = 1e-6;

/// Compares the closed forms against oracle_forms at every regular grid point.
/// Closed-form s-quantities are rescaled by the curve speed so that both sides
/// refer to the grid parameter t. Mismatches are data, never exceptions.
VerificationReport verify_surface(const CurveSpec& spec, const GridSpec& grid, const OracleConfig& cfg,
                                  std::string curve_name = {});

}  // namespace osculate
