#include "osculate/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "osculate/curvature.hpp"
#include "osculate/errors.hpp"
#include "osculate/frenet.hpp"
#include "osculate/surface.hpp"

namespace osculate {
namespace {

struct Partials {
  Vec3 X_s, X_u, X_ss, X_uu, X_su;
};

Partials central_partials(const SurfaceFn& X, double s, double u, double h, double k) {
  const Vec3 c = X(s, u);
  const Vec3 sp = X(s + h, u);
  const Vec3 sm = X(s - h, u);
  const Vec3 up = X(s, u + k);
  const Vec3 um = X(s, u - k);
  Partials p;
  p.X_s = (sp - sm) / (2.0 * h);
  p.X_u = (up - um) / (2.0 * k);
  p.X_ss = (sp - 2.0 * c + sm) / (h * h);
  p.X_uu = (up - 2.0 * c + um) / (k * k);
  p.X_su = (X(s + h, u + k) - X(s + h, u - k) - X(s - h, u + k) + X(s - h, u - k)) / (4.0 * h * k);
  return p;
}

Partials combine(const Partials& fine, const Partials& coarse, double w) {
  auto x = [w](const Vec3& a, const Vec3& b) -> Vec3 { return (w * a - b) / (w - 1.0); };
  return {x(fine.X_s, coarse.X_s), x(fine.X_u, coarse.X_u), x(fine.X_ss, coarse.X_ss), x(fine.X_uu, coarse.X_uu),
          x(fine.X_su, coarse.X_su)};
}

// Row k holds D(2^k h); column j removes the h^(2j) error term.
Partials richardson_table(const SurfaceFn& X, double s, double u, double h, double k, int levels) {
  std::vector<Partials> row;
  for (int i = 0; i < levels; ++i) {
    const double m = std::ldexp(1.0, i);
    row.push_back(central_partials(X, s, u, m * h, m * k));
  }
  for (int j = 1; j < levels; ++j) {
    const double w = std::ldexp(1.0, 2 * j);
    for (int i = 0; i + j < levels; ++i) row[i] = combine(row[i], row[i + 1], w);
  }
  return row.front();
}

double rel_delta(double closed, double oracle) { return std::abs(closed - oracle) / (1.0 + std::abs(oracle)); }

struct Accumulator {
  double max_abs = 0.0;
  double max_rel = 0.0;
  double sum_abs = 0.0;
  std::size_t n = 0;

  void add(double closed, double oracle) {
    const double a = std::abs(closed - oracle);
    max_abs = std::max(max_abs, a);
    max_rel = std::max(max_rel, rel_delta(closed, oracle));
    sum_abs += a;
    ++n;
  }
};

TermVerdict adjudicate(std::string id, std::string canonical, std::string alternate, const Accumulator& c,
                       const Accumulator& a, double tol) {
  TermVerdict v{std::move(id), std::move(canonical), std::move(alternate), c.max_rel, a.max_rel, {}};
  const bool c_ok = c.n > 0 && c.max_rel <= tol;
  const bool a_ok = a.n > 0 && a.max_rel <= tol;
  if (c_ok && !a_ok) {
    v.verdict = "canonical_confirmed";
  } else if (c_ok && a_ok) {
    v.verdict = "indistinguishable";
  } else if (a_ok) {
    v.verdict = "alternate_confirmed";
  } else {
    v.verdict = "neither_matches";
  }
  return v;
}

}  // namespace

void OracleConfig::validate() const {
  auto ok = [](double h) { return h > 0.0 && h < 1e-2; };
  if (!ok(h_s) || !ok(h_u)) throw ValidationError("oracle steps must satisfy 0 < h < 1e-2");
  if (levels < 2 || levels > 4) throw ValidationError("oracle Richardson levels must be 2, 3 or 4");
  if (!(tol_report > 0.0)) throw ValidationError("oracle tol_report must be positive");
}

OracleForms oracle_forms(const SurfaceFn& surface, double s, double u, const OracleConfig& cfg,
                         const std::optional<ParamBox>& box) {
  cfg.validate();
  const int levels = cfg.richardson ? cfg.levels : 1;
  const double reach = std::ldexp(1.0, levels - 1);
  if (box) {
    if (!box->s.contains(s - reach * cfg.h_s) || !box->s.contains(s + reach * cfg.h_s) ||
        !box->u.contains(u - reach * cfg.h_u) || !box->u.contains(u + reach * cfg.h_u)) {
      throw StencilOutOfDomain("oracle stencil at (" + std::to_string(s) + ", " + std::to_string(u) +
                               ") leaves the parameter domain");
    }
  }

  const Partials p = richardson_table(surface, s, u, cfg.h_s, cfg.h_u, levels);

  const Vec3 cr = p.X_s.cross(p.X_u);
  const double area = cr.norm();
  if (!(area >= cfg.eps_reg)) {
    throw SingularPoint("oracle: |X_s x X_u| = " + std::to_string(area) + " below eps_reg");
  }
  OracleForms o;
  o.normal = cr / area;
  o.E = p.X_s.dot(p.X_s);
  o.F = p.X_s.dot(p.X_u);
  o.G = p.X_u.dot(p.X_u);
  o.e = p.X_ss.dot(o.normal);
  o.f = p.X_su.dot(o.normal);
  o.g = p.X_uu.dot(o.normal);
  const double det = o.E * o.G - o.F * o.F;
  o.K = (o.e * o.g - o.f * o.f) / det;
  o.H = (o.e * o.G - 2.0 * o.f * o.F + o.g * o.E) / (2.0 * det);
  return o;
}

SurfaceFn osculating_surface(const CurveSpec& spec) {
  return [spec](double t, double u) { return surface_point(frenet_at(spec, t), u); };
}

const QuantityStats& VerificationReport::stats(std::string_view name) const {
  for (const auto& q : quantities) {
    if (q.name == name) return q;
  }
  throw ValidationError("no verified quantity named '" + std::string(name) + "'");
}

VerificationReport verify_surface(const CurveSpec& spec, const GridSpec& grid, const OracleConfig& cfg,
                                  std::string curve_name) {
  grid.validate();
  cfg.validate();
  VerificationReport rep;
  rep.curve = curve_name.empty() ? std::string(to_string(spec.kind)) : std::move(curve_name);
  rep.grid = grid;
  rep.config = cfg;

  const SurfaceFn surface = osculating_surface(spec);
  constexpr double inf = std::numeric_limits<double>::infinity();
  const ParamBox box{spec.domain, {-inf, inf}};

  std::array<Accumulator, 8> acc;
  Accumulator e_canon, e_alt, h_canon, h_alt, umb_canon, umb_alt;

  for (double s : grid.s_values()) {
    FrenetData fd;
    try {
      fd = frenet_at(spec, s);
    } catch (const Error&) {
      rep.skipped_points += static_cast<std::size_t>(grid.n_u);
      continue;
    }
    const double v = fd.speed;
    for (double u : grid.u_values()) {
      FundamentalForms ff;
      CurvatureSample cs;
      OracleForms o;
      try {
        if (!surface_jet(fd, u, cfg.eps_reg).regular) throw SingularPoint("closed-form singular");
        ff = fundamental_forms(fd, u, cfg.eps_reg);
        cs = curvatures(fd, u);
        o = oracle_forms(surface, s, u, cfg, box);
      } catch (const Error&) {
        ++rep.skipped_points;
        continue;
      }

      // Closed forms are arc-length quantities; the oracle differentiates in t.
      const std::array<double, 8> closed = {ff.E * v * v, ff.F * v, ff.G, ff.e * v * v, ff.f * v, ff.g, cs.K, cs.H};
      const std::array<double, 8> oracle = {o.E, o.F, o.G, o.e, o.f, o.g, o.K, o.H};
      PointDelta pd;
      pd.s = s;
      pd.u = u;
      for (std::size_t q = 0; q < closed.size(); ++q) {
        acc[q].add(closed[q], oracle[q]);
        pd.rel[q] = rel_delta(closed[q], oracle[q]);
      }
      pd.normal_dev = std::abs(1.0 - std::abs(unit_normal(fd, u).dot(o.normal)));
      rep.normal_max_dev = std::max(rep.normal_max_dev, pd.normal_dev);
      rep.points.push_back(pd);
      ++rep.compared_points;

      e_canon.add(ff.e * v * v, o.e);
      e_alt.add(alternates::e_coefficient_transcribed(fd, u) * v * v, o.e);
      h_canon.add(cs.H, o.H);
      h_alt.add(alternates::mean_curvature_r2_term(fd, u), o.H);
      const double umb_oracle = o.H * o.H - o.K;
      umb_canon.add(cs.umb, umb_oracle);
      umb_alt.add(alternates::umbilic_discriminant_r2(fd, u), umb_oracle);
    }
  }

  rep.pass = rep.compared_points > 0;
  for (std::size_t q = 0; q < acc.size(); ++q) {
    QuantityStats st;
    st.name = kVerifiedQuantities[q];
    st.max_abs = acc[q].max_abs;
    st.max_rel = acc[q].max_rel;
    st.mean_abs = acc[q].n ? acc[q].sum_abs / static_cast<double>(acc[q].n) : 0.0;
    st.pass = acc[q].n > 0 && st.max_rel <= cfg.tol_report;
    rep.pass = rep.pass && st.pass;
    rep.quantities.push_back(st);
  }
  rep.normal_pass = rep.compared_points > 0 && rep.normal_max_dev < kNormalAgreementTol;
  rep.pass = rep.pass && rep.normal_pass;

  const double tol = cfg.tol_report;
  rep.verdicts.push_back(adjudicate("e_coefficient_last_term", "r (1 - cos u)(r' tau' - tau r'')",
                                    "r (1 - cos u)(r'' - tau r'')", e_canon, e_alt, tol));
  rep.verdicts.push_back(adjudicate("mean_curvature_middle_term", "2 r'^2 tau (cos u - 1)",
                                    "2 tau r^2 (cos u - 1)", h_canon, h_alt, tol));
  rep.verdicts.push_back(adjudicate("sphere_condition", "r'' tau - r' tau' + r tau^3",
                                    "r'' tau - r' tau' + r^2 tau^3", umb_canon, umb_alt, tol));
  return rep;
}

}  // namespace osculate
