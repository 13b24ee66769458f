#include "osculate/mesh.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>

#include "osculate/curvature.hpp"
#include "osculate/errors.hpp"
#include "osculate/format.hpp"
#include "osculate/frenet.hpp"
#include "osculate/surface.hpp"

namespace osculate {

Mesh build_mesh(const CurveSpec& spec, const GridSpec& grid, bool with_normals) {
  grid.validate();
  const auto s_vals = grid.s_values();
  const auto u_vals = grid.u_values();
  const std::size_t ns = s_vals.size();
  const std::size_t nu = u_vals.size();

  Mesh m;
  m.stitched = grid.wrap_s && grid.wrap_u;
  m.vertices.reserve(ns * nu);
  if (with_normals) m.normals.reserve(ns * nu);
  for (double s : s_vals) {
    const FrenetData fd = frenet_at(spec, s);
    for (double u : u_vals) {
      m.vertices.push_back(surface_point(fd, u));
      if (with_normals) m.normals.push_back(unit_normal(fd, u));
    }
  }

  auto index = [nu](std::size_t i, std::size_t j) { return i * nu + j; };
  const std::size_t i_end = grid.wrap_s ? ns : ns - 1;
  const std::size_t j_end = grid.wrap_u ? nu : nu - 1;
  m.faces.reserve(i_end * j_end);
  for (std::size_t i = 0; i < i_end; ++i) {
    const std::size_t i1 = (i + 1) % ns;
    for (std::size_t j = 0; j < j_end; ++j) {
      const std::size_t j1 = (j + 1) % nu;
      m.faces.push_back({index(i, j), index(i1, j), index(i1, j1), index(i, j1)});
    }
  }
  return m;
}

Mesh build_closed_mesh(const CurveSpec& spec, int n_s, int n_u) {
  if (!spec.closed) throw DomainError("build_closed_mesh: curve is not closed");
  GridSpec g;
  g.s_min = spec.domain.lo;
  g.s_max = spec.domain.hi;
  g.n_s = n_s;
  g.n_u = n_u;
  g.u_min = kDefaultUGuard;
  g.u_max = 2.0 * std::numbers::pi - kDefaultUGuard;
  g.wrap_s = true;
  g.wrap_u = true;
  return build_mesh(spec, g);
}

MeshTopology analyze_topology(const Mesh& mesh) {
  std::map<std::pair<std::size_t, std::size_t>, int> edge_use;
  for (const auto& f : mesh.faces) {
    for (std::size_t k = 0; k < f.size(); ++k) {
      std::size_t a = f[k];
      std::size_t b = f[(k + 1) % f.size()];
      if (a > b) std::swap(a, b);
      ++edge_use[{a, b}];
    }
  }
  MeshTopology t;
  t.vertices = mesh.vertices.size();
  t.faces = mesh.faces.size();
  t.edges = edge_use.size();
  for (const auto& [edge, uses] : edge_use) {
    if (uses == 1) ++t.boundary_edges;
    if (uses > 2) ++t.nonmanifold_edges;
  }
  t.euler = static_cast<int>(t.vertices) - static_cast<int>(t.edges) + static_cast<int>(t.faces);
  return t;
}

int mesh_euler_characteristic(const Mesh& mesh) {
  const MeshTopology t = analyze_topology(mesh);
  if (mesh.stitched && !t.closed()) {
    throw MeshNotClosed("stitched mesh has " + std::to_string(t.boundary_edges) + " boundary and " +
                        std::to_string(t.nonmanifold_edges) + " non-manifold edges");
  }
  return t.euler;
}

void write_obj(const Mesh& mesh, std::ostream& out) {
  const bool normals = !mesh.normals.empty();
  if (normals && mesh.normals.size() != mesh.vertices.size()) {
    throw ValidationError("write_obj: normal count does not match vertex count");
  }
  out << "# surface of osculating circles\n";
  for (const Vec3& v : mesh.vertices) {
    out << "v " << format_double(v.x()) << ' ' << format_double(v.y()) << ' ' << format_double(v.z()) << '\n';
  }
  for (const Vec3& n : mesh.normals) {
    out << "vn " << format_double(n.x()) << ' ' << format_double(n.y()) << ' ' << format_double(n.z()) << '\n';
  }
  for (const auto& f : mesh.faces) {
    out << 'f';
    for (std::size_t idx : f) {
      out << ' ' << idx + 1;
      if (normals) out << "//" << idx + 1;
    }
    out << '\n';
  }
}

void write_obj(const Mesh& mesh, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  write_obj(mesh, out);
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

Mesh read_obj(std::istream& in) {
  Mesh m;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    if (tag == "v" || tag == "vn") {
      std::string a, b, c;
      if (!(ls >> a >> b >> c)) throw ValidationError("obj line " + std::to_string(line_no) + ": bad vertex");
      Vec3 p(parse_double(a), parse_double(b), parse_double(c));
      (tag == "v" ? m.vertices : m.normals).push_back(p);
    } else if (tag == "f") {
      std::vector<std::size_t> face;
      std::string tok;
      while (ls >> tok) {
        const std::string head = tok.substr(0, tok.find('/'));
        long idx = 0;
        try {
          idx = std::stol(head);
        } catch (const std::exception&) {
          throw ValidationError("obj line " + std::to_string(line_no) + ": bad face index '" + tok + "'");
        }
        if (idx < 0) idx += static_cast<long>(m.vertices.size()) + 1;
        if (idx < 1) throw ValidationError("obj line " + std::to_string(line_no) + ": face index out of range");
        face.push_back(static_cast<std::size_t>(idx - 1));
      }
      if (face.size() < 3) throw ValidationError("obj line " + std::to_string(line_no) + ": face needs 3+ vertices");
      m.faces.push_back(std::move(face));
    }
  }
  for (const auto& f : m.faces) {
    for (std::size_t idx : f) {
      if (idx >= m.vertices.size()) throw ValidationError("obj face index exceeds vertex count");
    }
  }
  return m;
}

Mesh read_obj(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  return read_obj(in);
}

}  // namespace osculate
