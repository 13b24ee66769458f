#include "osculate/io.hpp"

#include <fstream>
#include <limits>
#include <ostream>
#include <string>

#include "osculate/curvature.hpp"
#include "osculate/errors.hpp"
#include "osculate/format.hpp"
#include "osculate/frenet.hpp"
#include "osculate/surface.hpp"

namespace osculate {
namespace {

using ojson = nlohmann::ordered_json;

std::vector<double> number_list(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw ValidationError(std::string("curve spec: '") + key + "' must be an array of numbers");
  }
  std::vector<double> out;
  for (const auto& v : j.at(key)) {
    if (!v.is_number()) throw ValidationError(std::string("curve spec: '") + key + "' holds a non-number");
    out.push_back(v.get<double>());
  }
  return out;
}

double number(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    throw ValidationError(std::string("curve spec: '") + key + "' must be a number");
  }
  return j.at(key).get<double>();
}

void write_row(std::ostream& out, std::initializer_list<double> values) {
  bool first = true;
  for (double v : values) {
    if (!first) out << ',';
    out << format_double(v);
    first = false;
  }
}

ojson vec_json(const Vec3& v) { return ojson::array({v.x(), v.y(), v.z()}); }

}  // namespace

CurveSpec curve_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ValidationError("curve spec must be a JSON object");
  if (!j.contains("kind") || !j.at("kind").is_string()) throw ValidationError("curve spec needs a string 'kind'");
  const CurveKind kind = curve_kind_from_string(j.at("kind").get<std::string>());
  const nlohmann::json params = j.contains("params") ? j.at("params") : nlohmann::json::object();
  if (!params.is_object()) throw ValidationError("curve spec: 'params' must be an object");

  CurveSpec spec;
  if (kind == CurveKind::polynomial) {
    const nlohmann::json& src = params.contains("coeffs_x") ? params : j;
    spec.kind = kind;
    spec.coeffs = {number_list(src, "coeffs_x"), number_list(src, "coeffs_y"), number_list(src, "coeffs_z")};
    if (!j.contains("domain")) throw ValidationError("polynomial curve spec needs a 'domain'");
  } else {
    spec = builtin_curve(to_string(kind));
    if (kind == CurveKind::helix && (params.contains("radius") || params.contains("pitch"))) {
      spec.params = {number(params, "radius"), number(params, "pitch")};
    }
  }
  if (j.contains("domain")) {
    const auto d = number_list(j, "domain");
    if (d.size() != 2) throw ValidationError("curve spec: 'domain' must be [t_min, t_max]");
    spec.domain = {d[0], d[1]};
  }
  if (j.contains("closed")) {
    if (!j.at("closed").is_boolean()) throw ValidationError("curve spec: 'closed' must be a boolean");
    spec.closed = j.at("closed").get<bool>();
  }
  spec.validate();
  return spec;
}

ojson curve_to_json(const CurveSpec& spec) {
  ojson j;
  j["kind"] = std::string(to_string(spec.kind));
  ojson params = ojson::object();
  if (spec.kind == CurveKind::helix) {
    params["radius"] = spec.params.at(0);
    params["pitch"] = spec.params.at(1);
  } else if (spec.kind == CurveKind::polynomial) {
    params["coeffs_x"] = spec.coeffs[0];
    params["coeffs_y"] = spec.coeffs[1];
    params["coeffs_z"] = spec.coeffs[2];
  }
  j["params"] = params;
  j["domain"] = ojson::array({spec.domain.lo, spec.domain.hi});
  j["closed"] = spec.closed;
  return j;
}

CurveSpec load_curve(std::string_view source) {
  constexpr std::string_view prefix = "builtin:";
  if (source.starts_with(prefix)) return builtin_curve(source.substr(prefix.size()));
  std::ifstream in{std::string(source)};
  if (!in) throw IoError("cannot open curve spec '" + std::string(source) + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("curve spec '" + std::string(source) + "' is not valid JSON: " + e.what());
  }
  return curve_from_json(j);
}

ojson grid_to_json(const GridSpec& g) {
  ojson j;
  j["s_min"] = g.s_min;
  j["s_max"] = g.s_max;
  j["n_s"] = g.n_s;
  j["u_min"] = g.u_min;
  j["u_max"] = g.u_max;
  j["n_u"] = g.n_u;
  j["wrap_s"] = g.wrap_s;
  j["wrap_u"] = g.wrap_u;
  return j;
}

ojson report_to_json(const VerificationReport& rep, bool include_points) {
  ojson j;
  j["schema_version"] = kReportSchemaVersion;
  j["report"] = "verification";
  j["curve"] = rep.curve;
  j["grid"] = grid_to_json(rep.grid);
  j["oracle"] = {{"h_s", rep.config.h_s},
                 {"h_u", rep.config.h_u},
                 {"richardson", rep.config.richardson},
                 {"tol_report", rep.config.tol_report}};
  j["compared_points"] = rep.compared_points;
  j["skipped_points"] = rep.skipped_points;
  ojson q = ojson::object();
  for (const auto& st : rep.quantities) {
    q[st.name] = {{"max_abs", st.max_abs}, {"max_rel", st.max_rel}, {"mean_abs", st.mean_abs}, {"pass", st.pass}};
  }
  j["quantities"] = q;
  j["normal"] = {{"max_deviation", rep.normal_max_dev}, {"pass", rep.normal_pass}};
  ojson v = ojson::array();
  for (const auto& t : rep.verdicts) {
    v.push_back({{"id", t.id},
                 {"canonical", t.canonical},
                 {"alternate", t.alternate},
                 {"canonical_max_rel", t.canonical_max_rel},
                 {"alternate_max_rel", t.alternate_max_rel},
                 {"verdict", t.verdict}});
  }
  j["term_verdicts"] = v;
  if (include_points) {
    ojson pts = ojson::array();
    for (const auto& p : rep.points) {
      ojson row;
      row["s"] = p.s;
      row["u"] = p.u;
      for (std::size_t k = 0; k < kVerifiedQuantities.size(); ++k) row[kVerifiedQuantities[k]] = p.rel[k];
      row["normal"] = p.normal_dev;
      pts.push_back(row);
    }
    j["points"] = pts;
  }
  j["pass"] = rep.pass;
  return j;
}

ojson report_to_json(const ClassificationReport& rep) {
  ojson j;
  j["schema_version"] = kReportSchemaVersion;
  j["report"] = "classification";
  j["curve"] = rep.curve;
  j["grid"] = grid_to_json(rep.grid);
  j["regular_points"] = rep.regular_points;
  j["planar_generator"] = {{"verdict", rep.planar_generator.verdict},
                           {"max_abs_tau", rep.planar_generator.max_abs_tau}};
  const auto& sph = rep.spherical_generator;
  j["spherical_generator"] = {{"verdict", sph.verdict},
                              {"lemma_std", sph.lemma_std},
                              {"lemma_mean", sph.lemma_mean},
                              {"lemma_samples", sph.lemma_samples},
                              {"max_abs_condition", sph.max_abs_condition},
                              {"fitted_radius", sph.fitted_radius ? ojson(*sph.fitted_radius) : ojson(nullptr)},
                              {"fitted_center", vec_json(sph.fitted_center)},
                              {"fit_residual", sph.fit_residual}};
  j["salkowski"] = {{"verdict", rep.salkowski.verdict}, {"max_abs_r_s", rep.salkowski.max_abs_r_s}};
  j["canal_envelope"] = {{"verdict", rep.canal_envelope.verdict},
                         {"max_residual", rep.canal_envelope.max_envelope_residual}};
  j["weingarten"] = {{"verdict", rep.weingarten.verdict},
                     {"max_normalized_jacobian", rep.weingarten.max_normalized_jacobian},
                     {"samples", rep.weingarten.samples}};
  const auto& lw = rep.linear_weingarten;
  j["linear_weingarten"] = {{"evaluated", lw.evaluated},    {"verdict", lw.verdict},
                            {"mean_r", lw.mean_r},          {"a", lw.a},
                            {"b", lw.b},                    {"c", lw.c},
                            {"discriminant", lw.discriminant}, {"max_residual", lw.max_residual}};
  j["constant_K"] = {{"verdict", rep.constant_K.verdict}, {"mean", rep.constant_K.mean},
                     {"variance", rep.constant_K.variance}};
  j["constant_H"] = {{"verdict", rep.constant_H.verdict}, {"mean", rep.constant_H.mean},
                     {"variance", rep.constant_H.variance}};
  j["umbilic_fraction"] = rep.umbilic_fraction;
  j["topology"] = {{"closed_mesh", rep.topology.closed_mesh},
                   {"euler_characteristic", rep.topology.euler_characteristic}};
  return j;
}

void emit_curvature_csv(const CurveSpec& spec, const GridSpec& grid, std::ostream& out) {
  grid.validate();
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  out << "s,u,E,F,G,e,f,g,K,H,k1,k2,umb,kn,kg,regular\n";
  const auto u_vals = grid.u_values();
  for (double s : grid.s_values()) {
    std::optional<FrenetData> fd;
    try {
      fd = frenet_at(spec, s);
    } catch (const VanishingCurvature&) {
    }
    for (double u : u_vals) {
      bool regular = false;
      FundamentalForms ff;
      CurvatureSample cs;
      if (fd && surface_jet(*fd, u).regular) {
        try {
          ff = fundamental_forms(*fd, u);
          cs = curvatures(*fd, u);
          regular = true;
        } catch (const SingularPoint&) {
        }
      }
      write_row(out, {s, u});
      out << ',';
      if (regular) {
        write_row(out, {ff.E, ff.F, ff.G, ff.e, ff.f, ff.g, cs.K, cs.H, cs.k1, cs.k2, cs.umb, cs.kn_parallel,
                        cs.kg_parallel});
      } else {
        write_row(out, {nan, nan, nan, nan, nan, nan, nan, nan, nan, nan, nan, nan, nan});
      }
      out << ',' << (regular ? 1 : 0) << '\n';
    }
  }
}

void emit_frenet_csv(const CurveSpec& spec, int samples, std::ostream& out) {
  if (samples < 1) throw DomainError("frenet: need at least one sample");
  const Interval range = sampling_interval(spec);
  out << "t,kappa,tau,r,r_s,r_ss,tau_s,T_x,T_y,T_z,N_x,N_y,N_z,B_x,B_y,B_z\n";
  for (int i = 0; i < samples; ++i) {
    const double t = samples == 1 ? range.lo : range.lo + range.length() * i / (samples - 1);
    const FrenetData fd = frenet_at(spec, t);
    write_row(out, {fd.t, fd.kappa, fd.tau, fd.r, fd.r_s, fd.r_ss, fd.tau_s, fd.T.x(), fd.T.y(), fd.T.z(), fd.N.x(),
                    fd.N.y(), fd.N.z(), fd.B.x(), fd.B.y(), fd.B.z()});
    out << '\n';
  }
}

Mesh emit_mesh(const CurveSpec& spec, const GridSpec& grid, const std::filesystem::path& path,
               bool with_normals) {
  Mesh m = build_mesh(spec, grid, with_normals);
  write_obj(m, path);
  return m;
}

}  // namespace osculate
