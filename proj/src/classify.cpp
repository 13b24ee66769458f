#include "osculate/classify.hpp"

#include <algorithm>
#include <cmath>
#include <span>

#include <Eigen/Dense>

#include "osculate/curvature.hpp"
#include "osculate/errors.hpp"
#include "osculate/mesh.hpp"
#include "osculate/surface.hpp"

namespace osculate {
namespace {

double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 8) {
    double acc = 0.0;
    for (double x : v) acc += x;
    return acc;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

ConstancyVerdict constancy(const std::vector<double>& values, double tol) {
  ConstancyVerdict c;
  if (values.empty()) return c;
  const double n = static_cast<double>(values.size());
  c.mean = pairwise_sum(values) / n;
  std::vector<double> sq(values.size());
  std::transform(values.begin(), values.end(), sq.begin(), [&](double x) { return (x - c.mean) * (x - c.mean); });
  c.variance = pairwise_sum(sq) / n;
  c.verdict = std::sqrt(c.variance) <= tol * std::max(1.0, std::abs(c.mean));
  return c;
}

struct Column {
  bool valid = false;
  FrenetData fd;
};

struct Cell {
  bool valid = false;
  double K = 0.0;
  double H = 0.0;  // oriented
  double umb = 0.0;
  Vec3 X = Vec3::Zero();
};

void fit_sphere(const std::vector<Vec3>& pts, SphericalVerdict& out) {
  const auto n = static_cast<Eigen::Index>(pts.size());
  Eigen::MatrixXd A(n, 4);
  Eigen::VectorXd b(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Vec3& p = pts[static_cast<std::size_t>(i)];
    A.row(i) << 2.0 * p.x(), 2.0 * p.y(), 2.0 * p.z(), 1.0;
    b(i) = p.squaredNorm();
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
  qr.setThreshold(1e-10);
  if (qr.rank() < 4) return;
  const Eigen::Vector4d sol = qr.solve(b);
  const Vec3 center = sol.head<3>();
  const double r2 = sol(3) + center.squaredNorm();
  if (!(r2 > 0.0)) return;
  const double R = std::sqrt(r2);
  double worst = 0.0;
  for (const Vec3& p : pts) worst = std::max(worst, std::abs((p - center).norm() - R));
  out.fitted_radius = R;
  out.fitted_center = center;
  out.fit_residual = worst;
}

}  // namespace

double envelope_residual(const FrenetData& fd, double u) { return fd.r * fd.r_s * (1.0 - std::cos(u)); }

ClassificationReport classify(const CurveSpec& spec, const GridSpec& grid, const ClassifyTolerances& tol,
                              std::string curve_name) {
  grid.validate();
  if (grid.n_s < 5 || grid.n_u < 5) throw InsufficientGrid("classification needs at least a 5x5 grid");

  ClassificationReport rep;
  rep.curve = curve_name.empty() ? std::string(to_string(spec.kind)) : std::move(curve_name);
  rep.grid = grid;
  rep.tolerances = tol;

  const auto s_vals = grid.s_values();
  const auto u_vals = grid.u_values();
  const std::size_t ns = s_vals.size();
  const std::size_t nu = u_vals.size();

  std::vector<Column> cols(ns);
  for (std::size_t i = 0; i < ns; ++i) {
    try {
      cols[i].fd = frenet_at(spec, s_vals[i]);
      cols[i].valid = true;
    } catch (const Error&) {
    }
  }

  // Orientation: carry the normal across columns by continuity, then fix the
  // global sign so that the parallels bend towards the normal on average.
  std::vector<double> sigma(ns, 1.0);
  {
    const double u_ref = u_vals[nu / 2];
    std::optional<Vec3> prev;
    double current = 1.0;
    double kn_sum = 0.0;
    for (std::size_t i = 0; i < ns; ++i) {
      if (!cols[i].valid || !(normal_scale(cols[i].fd) > 1e-9)) {
        sigma[i] = current;
        continue;
      }
      const Vec3 n = unit_normal(cols[i].fd, u_ref);
      if (prev && prev->dot(n) < 0.0) current = -current;
      sigma[i] = current;
      prev = n;
      kn_sum += current * cols[i].fd.tau / normal_scale(cols[i].fd);
    }
    if (kn_sum < 0.0) {
      for (double& s : sigma) s = -s;
    }
  }

  std::vector<Cell> cells(ns * nu);
  auto cell = [&](std::size_t i, std::size_t j) -> Cell& { return cells[i * nu + j]; };
  std::vector<Vec3> regular_pts;
  std::vector<double> Ks, Hs;
  std::size_t umbilic = 0;

  for (std::size_t i = 0; i < ns; ++i) {
    if (!cols[i].valid) continue;
    const FrenetData& fd = cols[i].fd;
    rep.planar_generator.max_abs_tau = std::max(rep.planar_generator.max_abs_tau, std::abs(fd.tau));
    rep.salkowski.max_abs_r_s = std::max(rep.salkowski.max_abs_r_s, std::abs(fd.r_s));
    for (std::size_t j = 0; j < nu; ++j) {
      const double u = u_vals[j];
      rep.canal_envelope.max_envelope_residual =
          std::max(rep.canal_envelope.max_envelope_residual, std::abs(envelope_residual(fd, u)));
      if (!surface_jet(fd, u).regular) continue;
      CurvatureSample cs;
      try {
        cs = curvatures(fd, u);
      } catch (const SingularPoint&) {
        continue;
      }
      Cell& c = cell(i, j);
      c.valid = true;
      c.K = cs.K;
      c.H = sigma[i] * cs.H;
      c.umb = cs.umb;
      c.X = surface_point(fd, u);
      regular_pts.push_back(c.X);
      Ks.push_back(c.K);
      Hs.push_back(c.H);
      if (cs.umb < tol.umbilic) ++umbilic;
    }
  }
  rep.regular_points = regular_pts.size();
  if (rep.regular_points < 25) {
    throw InsufficientGrid("only " + std::to_string(rep.regular_points) + " regular grid points");
  }

  rep.planar_generator.verdict = rep.planar_generator.max_abs_tau < tol.planar;
  rep.salkowski.verdict = rep.salkowski.max_abs_r_s < tol.salkowski;
  rep.canal_envelope.verdict = rep.canal_envelope.max_envelope_residual < tol.canal;

  // Sphere: lemma quantities on the generator, least-squares fit on the surface.
  {
    SphericalVerdict& sph = rep.spherical_generator;
    std::vector<double> radii_sq;
    for (const Column& c : cols) {
      if (!c.valid) continue;
      const FrenetData& fd = c.fd;
      if (std::abs(fd.tau) < tol.lemma_tau_skip || std::abs(fd.r_s) < tol.lemma_rs_skip) continue;
      radii_sq.push_back(fd.r * fd.r + fd.r_s * fd.r_s / (fd.tau * fd.tau));
      sph.max_abs_condition = std::max(sph.max_abs_condition, std::abs(sphere_condition(fd)));
    }
    sph.lemma_samples = radii_sq.size();
    if (!radii_sq.empty()) {
      const ConstancyVerdict c = constancy(radii_sq, tol.constant);
      sph.lemma_mean = c.mean;
      sph.lemma_std = std::sqrt(c.variance);
    }
    fit_sphere(regular_pts, sph);
    sph.verdict = !rep.planar_generator.verdict && sph.fitted_radius.has_value() &&
                  sph.fit_residual <= tol.sphere_fit * std::max(1.0, *sph.fitted_radius);
  }

  // Weingarten: functional dependence of K and H through the grid Jacobian.
  {
    WeingartenVerdict& w = rep.weingarten;
    for (std::size_t i = 1; i + 1 < ns; ++i) {
      for (std::size_t j = 1; j + 1 < nu; ++j) {
        const Cell& c = cell(i, j);
        const Cell& sp = cell(i + 1, j);
        const Cell& sm = cell(i - 1, j);
        const Cell& up = cell(i, j + 1);
        const Cell& um = cell(i, j - 1);
        if (!(c.valid && sp.valid && sm.valid && up.valid && um.valid)) continue;
        const double ds = s_vals[i + 1] - s_vals[i - 1];
        const double du = u_vals[j + 1] - u_vals[j - 1];
        const double Ks_ = (sp.K - sm.K) / ds;
        const double Ku_ = (up.K - um.K) / du;
        const double Hs_ = (sp.H - sm.H) / ds;
        const double Hu_ = (up.H - um.H) / du;
        const double jac = std::abs(Ks_ * Hu_ - Ku_ * Hs_);
        const double scale = std::hypot(Ks_, Ku_) * std::hypot(Hs_, Hu_);
        w.max_normalized_jacobian = std::max(w.max_normalized_jacobian, jac / std::max(scale, tol.weingarten_floor));
        ++w.samples;
      }
    }
    w.verdict = w.samples > 0 && w.max_normalized_jacobian < tol.weingarten;
  }

  if (rep.salkowski.verdict) {
    LinearWeingartenVerdict& lw = rep.linear_weingarten;
    std::vector<double> radii;
    for (const Column& c : cols) {
      if (c.valid) radii.push_back(c.fd.r);
    }
    lw.evaluated = true;
    lw.mean_r = pairwise_sum(radii) / static_cast<double>(radii.size());
    lw.a = 1.0;
    lw.b = -lw.mean_r / 2.0;
    lw.c = -1.0 / (2.0 * lw.mean_r);
    lw.discriminant = lw.a * lw.a - 4.0 * lw.b * lw.c;
    for (const Cell& c : cells) {
      if (c.valid) lw.max_residual = std::max(lw.max_residual, std::abs(lw.a * c.H + lw.b * c.K + lw.c));
    }
    lw.verdict = lw.max_residual < tol.linear_weingarten;
  }

  rep.constant_K = constancy(Ks, tol.constant);
  rep.constant_H = constancy(Hs, tol.constant);
  rep.umbilic_fraction = static_cast<double>(umbilic) / static_cast<double>(rep.regular_points);

  if (spec.closed) {
    rep.topology.closed_mesh = true;
    rep.topology.euler_characteristic = mesh_euler_characteristic(build_closed_mesh(spec));
  } else {
    rep.topology.euler_characteristic = mesh_euler_characteristic(build_mesh(spec, grid));
  }
  return rep;
}

}  // namespace osculate
