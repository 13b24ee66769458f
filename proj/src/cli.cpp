#include "osculate/cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "osculate/classify.hpp"
#include "osculate/errors.hpp"
#include "osculate/format.hpp"
#include "osculate/io.hpp"
#include "osculate/mesh.hpp"
#include "osculate/oracle.hpp"

namespace osculate {
namespace {

struct GridOptions {
  std::optional<double> s_min, s_max, u_min, u_max;
  std::optional<int> n_s, n_u;
  bool wrap_s = false;
  bool wrap_u = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--s-min", s_min, "Start of the s (curve parameter) range");
    cmd->add_option("--s-max", s_max, "End of the s range");
    cmd->add_option("--ns", n_s, "Number of s samples");
    cmd->add_option("--u-min", u_min, "Start of the u (circle angle) range");
    cmd->add_option("--u-max", u_max, "End of the u range");
    cmd->add_option("--nu", n_u, "Number of u samples");
    cmd->add_flag("--wrap-s", wrap_s, "Stitch the s direction (closed curves)");
    cmd->add_flag("--wrap-u", wrap_u, "Stitch the u direction (full circles)");
  }

  GridSpec apply(GridSpec g) const {
    if (s_min) g.s_min = *s_min;
    if (s_max) g.s_max = *s_max;
    if (n_s) g.n_s = *n_s;
    if (u_min) g.u_min = *u_min;
    if (u_max) g.u_max = *u_max;
    if (n_u) g.n_u = *n_u;
    g.wrap_s = wrap_s;
    g.wrap_u = wrap_u;
    if (wrap_u && !u_min && !u_max) {
      g.u_min = 0.0;
      g.u_max = 2.0 * std::numbers::pi;
    }
    return g;
  }
};

struct Options {
  std::string curve;
  std::string out_path;
  std::string format;
  std::vector<std::string> tol;
  GridOptions grid;
  int samples = 20;
  bool with_normals = false;
  std::optional<double> h;
  std::optional<double> h_u;
  int levels = OracleConfig{}.levels;
  bool no_richardson = false;
  bool points = false;
};

std::map<std::string, double> parse_tolerances(const std::vector<std::string>& items) {
  std::map<std::string, double> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ValidationError("--tol expects key=value, got '" + item + "'");
    out[item.substr(0, eq)] = parse_double(item.substr(eq + 1));
  }
  return out;
}

ClassifyTolerances classify_tolerances(const std::map<std::string, double>& overrides) {
  ClassifyTolerances t;
  const std::map<std::string, double*> slots = {{"planar", &t.planar},
                                                {"sphere_fit", &t.sphere_fit},
                                                {"lemma_tau_skip", &t.lemma_tau_skip},
                                                {"lemma_rs_skip", &t.lemma_rs_skip},
                                                {"salkowski", &t.salkowski},
                                                {"canal", &t.canal},
                                                {"weingarten", &t.weingarten},
                                                {"weingarten_floor", &t.weingarten_floor},
                                                {"linear_weingarten", &t.linear_weingarten},
                                                {"constant", &t.constant},
                                                {"umbilic", &t.umbilic}};
  for (const auto& [key, value] : overrides) {
    const auto it = slots.find(key);
    if (it == slots.end()) throw ValidationError("unknown classify tolerance '" + key + "'");
    *it->second = value;
  }
  return t;
}

// Writes through `fn` to --out when given, else to `out`.
void with_output(const Options& o, std::ostream& out, const std::function<void(std::ostream&)>& fn) {
  if (o.out_path.empty()) {
    fn(out);
    return;
  }
  std::ofstream file(o.out_path);
  if (!file) throw IoError("cannot open '" + o.out_path + "' for writing");
  fn(file);
  if (!file) throw IoError("failed writing '" + o.out_path + "'");
}

void require_format(const Options& o, const char* expected) {
  if (!o.format.empty() && o.format != expected) {
    throw ValidationError("this subcommand writes " + std::string(expected) + ", not " + o.format);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("osculate");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Surfaces of osculating circles: geometry, meshes, classification and verification", "osculate"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* cmd) {
    cmd->add_option("--curve", o.curve, "builtin:NAME or a curve spec JSON file")->required();
    cmd->add_option("--out", o.out_path, "Output file (default: stdout)");
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"obj", "csv", "json"}));
    cmd->add_option("--tol", o.tol, "Tolerance override key=value (repeatable)");
  };

  CLI::App* frenet = app.add_subcommand("frenet", "Frenet apparatus of the generator as CSV");
  common(frenet);
  frenet->add_option("--samples", o.samples, "Number of parameter samples")->check(CLI::PositiveNumber);

  CLI::App* mesh = app.add_subcommand("mesh", "OBJ mesh of the surface");
  common(mesh);
  o.grid.attach(mesh);
  mesh->add_flag("--with-normals", o.with_normals, "Emit per-vertex unit normals");

  CLI::App* curvature = app.add_subcommand("curvature", "Fundamental forms and curvatures as CSV");
  common(curvature);
  o.grid.attach(curvature);

  CLI::App* classify_cmd = app.add_subcommand("classify", "Classification report as JSON");
  common(classify_cmd);
  o.grid.attach(classify_cmd);

  CLI::App* verify = app.add_subcommand("verify", "Closed forms vs finite-difference oracle, JSON report");
  common(verify);
  o.grid.attach(verify);
  verify->add_option("--step", o.h, "Oracle step size for s and u (default: 4e-3 in s, 8e-3 in u)");
  verify->add_option("--step-u", o.h_u, "Oracle step size for u");
  verify->add_option("--levels", o.levels, "Richardson table depth (2-4)");
  verify->add_flag("--no-richardson", o.no_richardson, "Disable Richardson extrapolation");
  verify->add_flag("--points", o.points, "Include per-point deltas in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalid;
  }

  try {
    const CurveSpec spec = load_curve(o.curve);
    const auto tol = parse_tolerances(o.tol);
    const std::string name = o.curve.starts_with("builtin:") ? o.curve.substr(8) : std::string(to_string(spec.kind));

    if (frenet->parsed()) {
      require_format(o, "csv");
      if (!tol.empty()) throw ValidationError("frenet takes no tolerances");
      with_output(o, out, [&](std::ostream& os) { emit_frenet_csv(spec, o.samples, os); });
      return kExitOk;
    }
    if (mesh->parsed()) {
      require_format(o, "obj");
      const GridSpec g = o.grid.apply(default_grid(spec));
      Mesh m = build_mesh(spec, g, o.with_normals);
      if (g.wrap_s && !spec.closed) throw DomainError("--wrap-s needs a closed curve");
      m.stitched = g.wrap_s && g.wrap_u;
      const MeshTopology topo = analyze_topology(m);
      with_output(o, out, [&](std::ostream& os) { write_obj(m, os); });
      err << "mesh: " << topo.vertices << " vertices, " << topo.faces << " faces, euler characteristic "
          << mesh_euler_characteristic(m) << '\n';
      return kExitOk;
    }
    if (curvature->parsed()) {
      require_format(o, "csv");
      const GridSpec g = o.grid.apply(default_grid(spec));
      with_output(o, out, [&](std::ostream& os) { emit_curvature_csv(spec, g, os); });
      return kExitOk;
    }
    if (classify_cmd->parsed()) {
      require_format(o, "json");
      const GridSpec g = o.grid.apply(default_grid(spec));
      const ClassificationReport rep = classify(spec, g, classify_tolerances(tol), name);
      with_output(o, out, [&](std::ostream& os) { os << report_to_json(rep).dump(2) << '\n'; });
      return kExitOk;
    }
    if (verify->parsed()) {
      require_format(o, "json");
      OracleConfig cfg;
      if (o.h) cfg.h_s = cfg.h_u = *o.h;
      if (o.h_u) cfg.h_u = *o.h_u;
      cfg.richardson = !o.no_richardson;
      cfg.levels = o.levels;
      for (const auto& [key, value] : tol) {
        if (key != "report") throw ValidationError("unknown verify tolerance '" + key + "'");
        cfg.tol_report = value;
      }
      const GridSpec g = o.grid.apply(verification_grid(spec));
      const VerificationReport rep = verify_surface(spec, g, cfg, name);
      with_output(o, out, [&](std::ostream& os) { os << report_to_json(rep, o.points).dump(2) << '\n'; });
      return rep.pass ? kExitOk : kExitVerifyFailed;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace osculate
