#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "json.hpp"

#include "osculate/classify.hpp"
#include "osculate/curve.hpp"
#include "osculate/grid.hpp"
#include "osculate/mesh.hpp"
#include "osculate/oracle.hpp"

namespace osculate {

/// Version stamped into every JSON report.
inline constexpr int kReportSchemaVersion = 1;

/// Curve spec file:
///   {"kind": "helix", "params": {"radius": 2, "pitch": 1}, "domain": [0, 10], "closed": false}
///   {"kind": "polynomial", "params": {"coeffs_x": [...], "coeffs_y": [...], "coeffs_z": [...]},
///    "domain": [-1, 1]}
/// Built-in kinds may omit params and domain.
CurveSpec curve_from_json(const nlohmann::json& j);
nlohmann::ordered_json curve_to_json(const CurveSpec& spec);

/// "builtin:NAME" or a path to a curve spec file.
CurveSpec load_curve(std::string_view source);

nlohmann::ordered_json grid_to_json(const GridSpec& grid);
nlohmann::ordered_json report_to_json(const VerificationReport& rep, bool include_points = false);
nlohmann::ordered_json report_to_json(const ClassificationReport& rep);

/// Header "s,u,E,F,G,e,f,g,K,H,k1,k2,umb,kn,kg,regular", one row per grid
/// point in row-major (s, u) order. E..g are the arc-length forms. Singular
/// rows carry "nan" fields and regular=0.
void emit_curvature_csv(const CurveSpec& spec, const GridSpec& grid, std::ostream& out);

/// Header "t,kappa,tau,r,r_s,r_ss,tau_s,T_x,...,B_z"; `samples` points spread
/// evenly over sampling_interval(spec).
void emit_frenet_csv(const CurveSpec& spec, int samples, std::ostream& out);

/// Builds the mesh for `grid` and writes it as OBJ. Returns the mesh written.
Mesh emit_mesh(const CurveSpec& spec, const GridSpec& grid, const std::filesystem::path& path,
               bool with_normals = false);

}  // namespace osculate
