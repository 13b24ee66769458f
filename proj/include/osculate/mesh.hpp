#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "osculate/curve.hpp"
#include "osculate/grid.hpp"

namespace osculate {

/// Polygon mesh with 0-based face indices.
struct Mesh {
  std::vector<Vec3> vertices;
  std::vector<Vec3> normals;  // empty, or one per vertex
  std::vector<std::vector<std::size_t>> faces;
  bool stitched = false;  // built with wraparound; expected to be closed
};

/// Quad mesh of the surface sampled on `grid`, vertices in row-major (s, u)
/// order. wrap_s / wrap_u add the faces that close the grid.
Mesh build_mesh(const CurveSpec& spec, const GridSpec& grid, bool with_normals = false);

/// Full closed mesh (wrap_s and wrap_u over one period) of a closed curve.
Mesh build_closed_mesh(const CurveSpec& spec, int n_s = 64, int n_u = 32);

struct MeshTopology {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  std::size_t boundary_edges = 0;
  std::size_t nonmanifold_edges = 0;
  int euler = 0;

  bool closed() const { return boundary_edges == 0 && nonmanifold_edges == 0; }
};

MeshTopology analyze_topology(const Mesh& mesh);

/// V - E + F. Throws MeshNotClosed when a stitched mesh has boundary or
/// non-manifold edges; an open patch simply reports its value (1 for a disk).
int mesh_euler_characteristic(const Mesh& mesh);

void write_obj(const Mesh& mesh, std::ostream& out);
void write_obj(const Mesh& mesh, const std::filesystem::path& path);

/// Reads v / vn / f records. Faces may be "a", "a/b", "a//c" or "a/b/c".
Mesh read_obj(std::istream& in);
Mesh read_obj(const std::filesystem::path& path);

}  // namespace osculate
