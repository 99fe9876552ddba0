#pragma once

#include <Eigen/Dense>
#include <array>
#include <filesystem>
#include <vector>

namespace porochaos {

/// Boundary tags assigned by the built-in generators.
namespace boundary_tag {
inline constexpr int bottom = 1;
inline constexpr int right = 2;
inline constexpr int top = 3;
inline constexpr int left = 4;
inline constexpr int load = 5;   // footing load segment of the top edge
inline constexpr int hole1 = 5;  // left well of the two-hole mesh
inline constexpr int hole2 = 6;  // right well
}  // namespace boundary_tag

/// Conforming triangulation with tagged boundary edges.
struct TriMesh {
  struct BoundaryEdge {
    int v0 = 0, v1 = 0, tag = 0;
  };

  std::vector<Eigen::Vector2d> vertices;
  std::vector<std::array<int, 3>> triangles;  // positively oriented
  std::vector<BoundaryEdge> boundary_edges;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int triangle_count() const { return static_cast<int>(triangles.size()); }

  double signed_area(int t) const;

  /// Conformity, orientation (throws on degenerate or inverted triangles),
  /// single-tag boundary edges that each belong to exactly one triangle.
  void validate() const;

  /// Plain-text format: a count line then that many records, for vertices
  /// ("x y"), triangles ("i j k", 0-based), and boundary edges ("i j tag").
  static TriMesh load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;
};

/// Crisscross rectangle mesh: nx x ny cells, each split into four triangles
/// around a center vertex. Symmetric under both axis reflections and, for
/// square cells, under the diagonal swap. Sides carry tags bottom/right/top/left.
TriMesh make_rect_crisscross(double x0, double y0, double x1, double y1, int nx, int ny);

/// Unit square crisscross mesh with n x n cells.
TriMesh make_unit_square_crisscross(int n);

/// Unit square mesh whose top edge is split into a traction segment
/// [span0, span1] (tag boundary_tag::load) and the remaining traction-free
/// part (tag top). The span endpoints must lie on the grid.
TriMesh make_footing_mesh(int n, double span0 = 0.3, double span1 = 0.7);

/// Rectangle with two rectangular holes whose boundaries receive tags
/// hole1/hole2. Hole rectangles must align with the cell grid.
TriMesh make_two_well_mesh(double width, double height, int nx, int ny,
                           const std::array<double, 4>& hole1_rect,
                           const std::array<double, 4>& hole2_rect);

}  // namespace porochaos
