#include "osculate/surface.hpp"

#include <cmath>
#include <numbers>

namespace osculate {

double generator_distance(double u) {
  return std::abs(std::remainder(u, 2.0 * std::numbers::pi));
}

bool on_generator_line(double u) { return generator_distance(u) <= 1e-14 * std::max(1.0, std::abs(u)); }

double normal_scale(const FrenetData& fd) { return std::hypot(fd.r * fd.tau, fd.r_s); }

Vec3 surface_point(const FrenetData& fd, const Vec3& x_alpha, double u) {
  return x_alpha + fd.r * (std::sin(u) * fd.T + (1.0 - std::cos(u)) * fd.N);
}

Vec3 surface_point(const CurveSpec& spec, double t, double u) { return surface_point(frenet_at(spec, t), u); }

Vec3 unit_normal(const FrenetData& fd, double u) {
  const double q = normal_scale(fd);
  if (!(q > 0.0)) return Vec3::Zero();
  const double rt = fd.r * fd.tau;
  return (-rt * std::sin(u) * fd.T + rt * std::cos(u) * fd.N + fd.r_s * fd.B) / q;
}

SurfaceJet surface_jet(const FrenetData& fd, const Vec3& x_alpha, double u, double eps_reg) {
  const double su = std::sin(u);
  const double cu = std::cos(u);
  const double omc = 1.0 - cu;
  const double r = fd.r;
  const double r1 = fd.r_s;
  const double r2 = fd.r_ss;
  const double tau = fd.tau;
  const double tau1 = fd.tau_s;
  const Vec3& T = fd.T;
  const Vec3& N = fd.N;
  const Vec3& B = fd.B;

  SurfaceJet j;
  j.s = fd.t;
  j.u = u;
  j.speed = fd.speed;
  j.X = surface_point(fd, x_alpha, u);
  j.X_s = (r1 * su + cu) * T + (r1 * omc + su) * N + r * tau * omc * B;
  j.X_u = r * (cu * T + su * N);
  j.X_ss = (r2 * su - (r1 * omc + su) / r) * T + (r2 * omc - r * tau * tau * omc + (r1 * su + cu) / r) * N +
           (r * tau1 * omc + 2.0 * r1 * tau * omc + tau * su) * B;
  j.X_su = (r1 * cu - su) * T + (r1 * su + cu) * N + r * tau * su * B;
  j.X_uu = r * (-su * T + cu * N);
  j.cross = r * omc * (-r * tau * su * T + r * tau * cu * N + r1 * B);
  j.area_elem = j.cross.norm();
  j.regular = !on_generator_line(u) && j.area_elem > eps_reg;
  if (j.regular) j.normal = unit_normal(fd, u);
  return j;
}

std::vector<ParamPoint> singular_locus(const CurveSpec& spec, const std::vector<double>& s_grid,
                                       const std::vector<double>& u_grid, double tol) {
  std::vector<ParamPoint> out;
  for (double s : s_grid) {
    const FrenetData fd = frenet_at(spec, s);
    const bool degenerate_parallel = std::abs(fd.r_s) < tol && std::abs(fd.tau) < tol;
    for (double u : u_grid) {
      if (degenerate_parallel || on_generator_line(u)) out.push_back({s, u});
    }
  }
  return out;
}

}  // namespace osculate
