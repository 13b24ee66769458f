#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace osculate {

using Vec3 = Eigen::Vector3d;

enum class CurveKind { helix, cubic, torus_loop, salkowski, spherical_loop, polynomial };

std::string_view to_string(CurveKind kind);
CurveKind curve_kind_from_string(std::string_view name);

struct Interval {
  double lo = 0.0;
  double hi = 1.0;

  bool contains(double t) const { return t >= lo && t <= hi; }
  double length() const { return hi - lo; }
};

/// A generator curve alpha(t).
///
/// `params` meaning depends on `kind`: helix takes {radius, pitch} and is
/// parametrized by arc length; polynomial uses `coeffs` (ascending powers,
/// one list per coordinate); the remaining built-ins take no parameters.
struct CurveSpec {
  CurveKind kind = CurveKind::helix;
  std::vector<double> params;
  std::array<std::vector<double>, 3> coeffs;
  Interval domain;
  bool closed = false;

  /// Throws ValidationError when an invariant does not hold (empty domain,
  /// missing coefficients, closed flag not backed by matching endpoints).
  void validate() const;

  static CurveSpec helix(double radius, double pitch, Interval domain);
  static CurveSpec polynomial(std::array<std::vector<double>, 3> coeffs, Interval domain);
};

/// Position and derivatives d1..d4 of alpha with respect to t.
struct CurveJet {
  double t = 0.0;
  Vec3 x = Vec3::Zero();
  Vec3 d1 = Vec3::Zero();
  Vec3 d2 = Vec3::Zero();
  Vec3 d3 = Vec3::Zero();
  Vec3 d4 = Vec3::Zero();

  double speed() const { return d1.norm(); }
};

/// Built-in catalog: helix, cubic, torus_loop, salkowski, spherical_loop.
CurveSpec builtin_curve(std::string_view name);
const std::vector<std::string>& builtin_names();

/// Half-width of the open interval on which the Salkowski built-in is defined.
inline constexpr double kSalkowskiHalfWidth = 5.0;

/// Exact derivatives up to order 4. Throws DomainError outside the domain
/// (and at the Salkowski endpoints |t| = 5, where torsion blows up).
CurveJet evaluate_jet(const CurveSpec& spec, double t);

/// Position only; cheaper than evaluate_jet.
Vec3 evaluate_point(const CurveSpec& spec, double t);

struct ArcLengthDerivatives {
  double f_s = 0.0;
  double f_ss = 0.0;
};

/// Converts t-derivatives of a scalar f along the curve to arc-length
/// derivatives using d/ds = (1/v) d/dt, v = |alpha'(t)|.
ArcLengthDerivatives arc_length_rescale(const CurveJet& jet, double f, double f_t, double f_tt,
                                        double min_speed = 1e-12);

/// Arc length between t0 and t1 (adaptive Gauss-Kronrod on `panels` subintervals).
double arc_length(const CurveSpec& spec, double t0, double t1, int panels = 8);

}  // namespace osculate
