#pragma once

#include <utility>
#include <vector>

#include "osculate/curve.hpp"
#include "osculate/frenet.hpp"

namespace osculate {

inline constexpr double kDefaultRegularEps = 1e-9;

/// Closed-form local data of X(s,u) = alpha + r (sin u T + (1 - cos u) N).
///
/// All s-derivatives are arc-length derivatives. For a generator evaluated
/// in a non-arc-length parameter t, multiply X_s by `speed` (and X_ss by
/// speed^2, X_su by speed) to get t-derivatives.
struct SurfaceJet {
  double s = 0.0;
  double u = 0.0;
  double speed = 1.0;
  Vec3 X = Vec3::Zero();
  Vec3 X_s = Vec3::Zero();
  Vec3 X_u = Vec3::Zero();
  Vec3 X_ss = Vec3::Zero();
  Vec3 X_su = Vec3::Zero();
  Vec3 X_uu = Vec3::Zero();
  Vec3 cross = Vec3::Zero();
  double area_elem = 0.0;
  Vec3 normal = Vec3::Zero();  // zero when singular
  bool regular = false;
};

/// True when u is a multiple of 2 pi up to rounding: the generator line.
bool on_generator_line(double u);

/// Distance from u to the nearest multiple of 2 pi.
double generator_distance(double u);

/// sqrt(r^2 tau^2 + r'^2): the scale shared by the normal and both forms.
double normal_scale(const FrenetData& fd);

Vec3 surface_point(const FrenetData& fd, const Vec3& x_alpha, double u);
inline Vec3 surface_point(const FrenetData& fd, double u) { return surface_point(fd, fd.position, u); }

/// Surface position at (t, u) straight from the curve spec.
Vec3 surface_point(const CurveSpec& spec, double t, double u);

SurfaceJet surface_jet(const FrenetData& fd, const Vec3& x_alpha, double u, double eps_reg = kDefaultRegularEps);
inline SurfaceJet surface_jet(const FrenetData& fd, double u, double eps_reg = kDefaultRegularEps) {
  return surface_jet(fd, fd.position, u, eps_reg);
}

/// Unit normal (-r tau sin u T + r tau cos u N + r' B) / sqrt(r^2 tau^2 + r'^2).
/// Defined wherever r^2 tau^2 + r'^2 > 0, including on the generator line.
Vec3 unit_normal(const FrenetData& fd, double u);

struct ParamPoint {
  double s = 0.0;
  double u = 0.0;
  friend bool operator==(const ParamPoint&, const ParamPoint&) = default;
};

/// Grid points that lie on the generator line (u = 0 mod 2 pi) or on a
/// parallel where |r'| and |tau| are both below `tol`.
std::vector<ParamPoint> singular_locus(const CurveSpec& spec, const std::vector<double>& s_grid,
                                       const std::vector<double>& u_grid, double tol = 1e-9);

}  // namespace osculate
