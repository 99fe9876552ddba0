#include "porochaos/taylor_hood.hpp"

#include <stdexcept>

namespace porochaos {

TaylorHoodSpace::TaylorHoodSpace(const TriMesh& mesh) : mesh_(&mesh) {
  tri_edges_.resize(mesh.triangles.size());
  for (int t = 0; t < mesh.triangle_count(); ++t) {
    const auto& tri = mesh.triangles[static_cast<std::size_t>(t)];
    for (int e = 0; e < 3; ++e) {
      const int a = tri[static_cast<std::size_t>((e + 1) % 3)];
      const int b = tri[static_cast<std::size_t>((e + 2) % 3)];
      const auto key = std::make_pair(std::min(a, b), std::max(a, b));
      auto [it, inserted] = edge_ids_.try_emplace(key, static_cast<int>(edge_vertices_.size()));
      if (inserted) edge_vertices_.push_back({key.first, key.second});
      tri_edges_[static_cast<std::size_t>(t)][static_cast<std::size_t>(e)] = it->second;
    }
  }
}

std::array<int, 6> TaylorHoodSpace::element_nodes(int t) const {
  const auto& tri = mesh_->triangles[static_cast<std::size_t>(t)];
  const auto& edges = tri_edges_[static_cast<std::size_t>(t)];
  const int nv = mesh_->vertex_count();
  return {tri[0], tri[1], tri[2], nv + edges[0], nv + edges[1], nv + edges[2]};
}

int TaylorHoodSpace::edge_node(int a, int b) const {
  const auto it = edge_ids_.find({std::min(a, b), std::max(a, b)});
  if (it == edge_ids_.end()) return -1;
  return mesh_->vertex_count() + it->second;
}

Eigen::Vector2d TaylorHoodSpace::node_position(int node) const {
  const int nv = mesh_->vertex_count();
  if (node < nv) return mesh_->vertices[static_cast<std::size_t>(node)];
  const auto& ev = edge_vertices_[static_cast<std::size_t>(node - nv)];
  return 0.5 * (mesh_->vertices[static_cast<std::size_t>(ev[0])] +
                mesh_->vertices[static_cast<std::size_t>(ev[1])]);
}

std::array<double, 6> TaylorHoodSpace::p2_values(const std::array<double, 3>& bary) {
  const double l0 = bary[0], l1 = bary[1], l2 = bary[2];
  return {l0 * (2.0 * l0 - 1.0), l1 * (2.0 * l1 - 1.0), l2 * (2.0 * l2 - 1.0),
          4.0 * l1 * l2, 4.0 * l2 * l0, 4.0 * l0 * l1};
}

std::array<Eigen::Vector2d, 6> TaylorHoodSpace::p2_gradients(
    const std::array<double, 3>& bary, const std::array<Eigen::Vector2d, 3>& g) {
  const double l0 = bary[0], l1 = bary[1], l2 = bary[2];
  return {(4.0 * l0 - 1.0) * g[0],
          (4.0 * l1 - 1.0) * g[1],
          (4.0 * l2 - 1.0) * g[2],
          4.0 * (l2 * g[1] + l1 * g[2]),
          4.0 * (l0 * g[2] + l2 * g[0]),
          4.0 * (l1 * g[0] + l0 * g[1])};
}

TriGeometry tri_geometry(const TriMesh& mesh, int t) {
  const auto& tri = mesh.triangles[static_cast<std::size_t>(t)];
  TriGeometry geo;
  for (int i = 0; i < 3; ++i)
    geo.corners[static_cast<std::size_t>(i)] = mesh.vertices[static_cast<std::size_t>(tri[static_cast<std::size_t>(i)])];
  const Eigen::Vector2d& a = geo.corners[0];
  const Eigen::Vector2d& b = geo.corners[1];
  const Eigen::Vector2d& c = geo.corners[2];
  const double twice_area = (b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x());
  if (twice_area <= 0.0) throw std::runtime_error("tri_geometry: degenerate triangle");
  geo.area = 0.5 * twice_area;
  // grad lambda_i = rot90(edge opposite i) / (2A)
  geo.grad_bary[0] = Eigen::Vector2d(b.y() - c.y(), c.x() - b.x()) / twice_area;
  geo.grad_bary[1] = Eigen::Vector2d(c.y() - a.y(), a.x() - c.x()) / twice_area;
  geo.grad_bary[2] = Eigen::Vector2d(a.y() - b.y(), b.x() - a.x()) / twice_area;
  return geo;
}

}  // namespace porochaos
