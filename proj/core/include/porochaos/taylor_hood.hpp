#pragma once

#include <Eigen/Dense>
#include <array>
#include <map>
#include <vector>

#include "porochaos/mesh.hpp"

namespace porochaos {

/// DOF layout for the continuous P2 (vector displacement) / P1 (pressure)
/// pair: P2 nodes are the mesh vertices followed by the edge midpoints;
/// displacement DOF of node n, component c is 2n + c; pressure DOFs coincide
/// with vertices.
class TaylorHoodSpace {
public:
  explicit TaylorHoodSpace(const TriMesh& mesh);

  const TriMesh& mesh() const { return *mesh_; }
  int edge_count() const { return static_cast<int>(edge_vertices_.size()); }
  int node_count() const { return mesh_->vertex_count() + edge_count(); }
  int displacement_dofs() const { return 2 * node_count(); }
  int pressure_dofs() const { return mesh_->vertex_count(); }

  /// Global P2 node ids of triangle t: three vertices then the midpoint
  /// nodes of the edges opposite each vertex.
  std::array<int, 6> element_nodes(int t) const;

  /// Midpoint node id of the edge (a, b); -1 if absent.
  int edge_node(int a, int b) const;

  Eigen::Vector2d node_position(int node) const;

  const std::array<int, 2>& edge_endpoints(int e) const {
    return edge_vertices_[static_cast<std::size_t>(e)];
  }

  /// P2 shape values at barycentric coordinates, element-local node order.
  static std::array<double, 6> p2_values(const std::array<double, 3>& bary);

  /// P2 shape gradients given the (constant) barycentric gradients.
  static std::array<Eigen::Vector2d, 6> p2_gradients(const std::array<double, 3>& bary,
                                                     const std::array<Eigen::Vector2d, 3>& grad_bary);

private:
  const TriMesh* mesh_;
  std::map<std::pair<int, int>, int> edge_ids_;
  std::vector<std::array<int, 2>> edge_vertices_;
  std::vector<std::array<int, 3>> tri_edges_;  // edge index opposite local vertex
};

/// Geometry of one triangle: positive area and constant barycentric gradients.
struct TriGeometry {
  double area;
  std::array<Eigen::Vector2d, 3> grad_bary;
  std::array<Eigen::Vector2d, 3> corners;

  Eigen::Vector2d point(const std::array<double, 3>& bary) const {
    return bary[0] * corners[0] + bary[1] * corners[1] + bary[2] * corners[2];
  }
};
TriGeometry tri_geometry(const TriMesh& mesh, int t);

}  // namespace porochaos
