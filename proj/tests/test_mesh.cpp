#include <cmath>
#include <filesystem>
#include <numbers>
#include <sstream>

#include "doctest.h"

#include "osculate/errors.hpp"
#include "osculate/io.hpp"
#include "osculate/mesh.hpp"
#include "osculate/surface.hpp"

using namespace osculate;
using std::numbers::pi;

namespace {

Mesh cube() {
  Mesh m;
  for (int i = 0; i < 8; ++i) m.vertices.emplace_back(i & 1, (i >> 1) & 1, (i >> 2) & 1);
  m.faces = {{0, 2, 3, 1}, {4, 5, 7, 6}, {0, 1, 5, 4}, {2, 6, 7, 3}, {0, 4, 6, 2}, {1, 3, 7, 5}};
  m.stitched = true;
  return m;
}

Mesh octahedron() {
  Mesh m;
  m.vertices = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  m.faces = {{0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4}, {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5}};
  m.stitched = true;
  return m;
}

}  // namespace

TEST_CASE("reference closed meshes") {
  CHECK(mesh_euler_characteristic(cube()) == 2);
  CHECK(mesh_euler_characteristic(octahedron()) == 2);
  const MeshTopology t = analyze_topology(cube());
  CHECK(t.vertices == 8);
  CHECK(t.edges == 12);
  CHECK(t.faces == 6);
  CHECK(t.closed());
}

TEST_CASE("a stitched mesh with a hole is rejected") {
  Mesh m = cube();
  m.faces.pop_back();
  CHECK_THROWS_AS(mesh_euler_characteristic(m), MeshNotClosed);
  m.stitched = false;
  CHECK(mesh_euler_characteristic(m) == 1);
}

TEST_CASE("helix patch counts") {
  const CurveSpec spec = builtin_curve("helix");
  const Mesh m = build_mesh(spec, default_grid(spec, 100, 100));
  CHECK(m.vertices.size() == 10000);
  CHECK(m.faces.size() == 99 * 99);
  for (const auto& f : m.faces) CHECK(f.size() == 4);
  CHECK(mesh_euler_characteristic(m) == 1);
}

TEST_CASE("vertices are row-major in (s, u)") {
  const CurveSpec spec = builtin_curve("cubic");
  const GridSpec g = default_grid(spec, 4, 3);
  const Mesh m = build_mesh(spec, g);
  const auto s = g.s_values();
  const auto u = g.u_values();
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < u.size(); ++j) {
      CHECK((m.vertices[i * u.size() + j] - surface_point(spec, s[i], u[j])).norm() < 1e-15);
    }
  }
}

TEST_CASE("torus loop closes into a torus") {
  const CurveSpec spec = builtin_curve("torus_loop");
  const Mesh m = build_closed_mesh(spec);
  CHECK(m.stitched);
  CHECK(analyze_topology(m).closed());
  CHECK(mesh_euler_characteristic(m) == 0);

  GridSpec g = default_grid(spec, 40, 24);
  g.wrap_s = g.wrap_u = true;
  g.u_min = 0.0;
  g.u_max = 2 * pi;
  Mesh w = build_mesh(spec, g);
  w.stitched = true;
  CHECK(w.vertices.size() == 40 * 24);
  CHECK(mesh_euler_characteristic(w) == 0);
}

TEST_CASE("one-sample grids are rejected") {
  const CurveSpec spec = builtin_curve("helix");
  GridSpec g = default_grid(spec);
  g.n_s = 1;
  CHECK_THROWS_AS(build_mesh(spec, g), DomainError);
}

TEST_CASE("OBJ round trip keeps counts and indices") {
  const CurveSpec spec = builtin_curve("salkowski");
  const Mesh m = build_mesh(spec, default_grid(spec, 13, 9), true);
  std::stringstream buf;
  write_obj(m, buf);
  const Mesh back = read_obj(buf);
  CHECK(back.vertices.size() == m.vertices.size());
  CHECK(back.normals.size() == m.normals.size());
  REQUIRE(back.faces.size() == m.faces.size());
  for (std::size_t i = 0; i < m.faces.size(); ++i) {
    CHECK(back.faces[i] == m.faces[i]);
    for (auto idx : back.faces[i]) CHECK(idx < back.vertices.size());
  }
  for (std::size_t i = 0; i < m.vertices.size(); ++i) CHECK(back.vertices[i] == m.vertices[i]);
  // s = 0 is the middle column: tau = r' = 0 there and the normal is zero
  std::size_t zero = 0;
  for (const Vec3& n : m.normals) {
    if (n.norm() == 0.0) ++zero;
    else CHECK(std::abs(n.norm() - 1.0) < 1e-12);
  }
  CHECK(zero == 9);
}

TEST_CASE("OBJ reader accepts the usual face forms") {
  std::istringstream in(
      "# comment\n"
      "o thing\n"
      "v 0 0 0\nv 1 0 0\nv 1 1 0\nv 0 1 0\n"
      "vt 0 0\n"
      "vn 0 0 1\n"
      "f 1/1/1 2/1/1 3/1/1\n"
      "f -4 -2 -1\n"
      "f 1//1 3//1 4//1\n");
  const Mesh m = read_obj(in);
  CHECK(m.vertices.size() == 4);
  REQUIRE(m.faces.size() == 3);
  CHECK(m.faces[1] == std::vector<std::size_t>{0, 2, 3});
}

TEST_CASE("OBJ reader rejects bad input") {
  std::istringstream out_of_range("v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 4\n");
  CHECK_THROWS_AS(read_obj(out_of_range), ValidationError);
  std::istringstream garbage("v 0 zero 0\n");
  CHECK_THROWS_AS(read_obj(garbage), ValidationError);
  std::istringstream short_face("v 0 0 0\nv 1 0 0\nf 1 2\n");
  CHECK_THROWS_AS(read_obj(short_face), ValidationError);
  CHECK_THROWS_AS(read_obj(std::filesystem::path("/nonexistent/dir/x.obj")), IoError);
}

TEST_CASE("emit_mesh writes a file") {
  const std::filesystem::path path = std::filesystem::path(OSCULATE_TEST_TMP) / "emit_mesh_helix.obj";
  const CurveSpec spec = builtin_curve("helix");
  const Mesh m = emit_mesh(spec, default_grid(spec, 10, 10), path);
  const Mesh back = read_obj(path);
  CHECK(back.vertices.size() == 100);
  CHECK(back.faces.size() == 81);
  CHECK(m.faces.size() == 81);
  CHECK_THROWS_AS(emit_mesh(spec, default_grid(spec, 10, 10), "/nonexistent/dir/x.obj"), IoError);
}
