#include "porochaos/mesh.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace porochaos {

double TriMesh::signed_area(int t) const {
  const auto& tri = triangles[static_cast<std::size_t>(t)];
  const Eigen::Vector2d& a = vertices[static_cast<std::size_t>(tri[0])];
  const Eigen::Vector2d& b = vertices[static_cast<std::size_t>(tri[1])];
  const Eigen::Vector2d& c = vertices[static_cast<std::size_t>(tri[2])];
  return 0.5 * ((b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x()));
}

void TriMesh::validate() const {
  const int nv = vertex_count();
  std::map<std::pair<int, int>, int> edge_use;
  for (int t = 0; t < triangle_count(); ++t) {
    const auto& tri = triangles[static_cast<std::size_t>(t)];
    for (int v : tri)
      if (v < 0 || v >= nv) throw std::runtime_error("mesh: triangle vertex out of range");
    if (signed_area(t) <= 0.0)
      throw std::runtime_error("mesh: degenerate or inverted triangle " + std::to_string(t));
    for (int e = 0; e < 3; ++e) {
      const int a = tri[static_cast<std::size_t>((e + 1) % 3)];
      const int b = tri[static_cast<std::size_t>((e + 2) % 3)];
      ++edge_use[{std::min(a, b), std::max(a, b)}];
    }
  }
  for (const auto& [edge, uses] : edge_use) {
    (void)edge;
    if (uses > 2) throw std::runtime_error("mesh: non-conforming edge shared by > 2 triangles");
  }
  std::set<std::pair<int, int>> tagged;
  for (const BoundaryEdge& be : boundary_edges) {
    const auto key = std::make_pair(std::min(be.v0, be.v1), std::max(be.v0, be.v1));
    const auto it = edge_use.find(key);
    if (it == edge_use.end() || it->second != 1)
      throw std::runtime_error("mesh: tagged edge is not a boundary edge");
    if (!tagged.insert(key).second)
      throw std::runtime_error("mesh: boundary edge carries more than one tag");
  }
  std::size_t boundary_total = 0;
  for (const auto& [edge, uses] : edge_use) {
    (void)edge;
    if (uses == 1) ++boundary_total;
  }
  if (boundary_total != tagged.size())
    throw std::runtime_error("mesh: some boundary edges carry no tag");
}

TriMesh TriMesh::load(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("mesh load: cannot open " + path.string());
  TriMesh mesh;
  int nv = 0, nt = 0, nb = 0;
  if (!(is >> nv)) throw std::runtime_error("mesh load: missing vertex count");
  mesh.vertices.resize(static_cast<std::size_t>(nv));
  for (auto& v : mesh.vertices)
    if (!(is >> v.x() >> v.y())) throw std::runtime_error("mesh load: bad vertex line");
  if (!(is >> nt)) throw std::runtime_error("mesh load: missing triangle count");
  mesh.triangles.resize(static_cast<std::size_t>(nt));
  for (auto& t : mesh.triangles)
    if (!(is >> t[0] >> t[1] >> t[2])) throw std::runtime_error("mesh load: bad triangle line");
  if (!(is >> nb)) throw std::runtime_error("mesh load: missing boundary edge count");
  mesh.boundary_edges.resize(static_cast<std::size_t>(nb));
  for (auto& e : mesh.boundary_edges)
    if (!(is >> e.v0 >> e.v1 >> e.tag)) throw std::runtime_error("mesh load: bad boundary edge line");
  mesh.validate();
  return mesh;
}

void TriMesh::save(const std::filesystem::path& path) const {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("mesh save: cannot open " + path.string());
  char buf[96];
  os << vertex_count() << "\n";
  for (const auto& v : vertices) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g\n", v.x(), v.y());
    os << buf;
  }
  os << triangle_count() << "\n";
  for (const auto& t : triangles) os << t[0] << " " << t[1] << " " << t[2] << "\n";
  os << boundary_edges.size() << "\n";
  for (const auto& e : boundary_edges) os << e.v0 << " " << e.v1 << " " << e.tag << "\n";
}

namespace {

/// Shared crisscross builder over a cell keep-mask. `hole_tag(i,j)` returns
/// the tag for an interior boundary facing removed cell (i,j), or 0.
template <class KeepFn, class HoleTagFn>
TriMesh build_crisscross(double x0, double y0, double x1, double y1, int nx, int ny,
                         KeepFn keep, HoleTagFn hole_tag) {
  if (nx < 1 || ny < 1) throw std::invalid_argument("mesh generator: nx, ny >= 1 required");
  const double dx = (x1 - x0) / nx;
  const double dy = (y1 - y0) / ny;

  TriMesh mesh;
  std::vector<int> grid_id(static_cast<std::size_t>((nx + 1) * (ny + 1)), -1);
  std::vector<int> center_id(static_cast<std::size_t>(nx * ny), -1);

  auto grid_vertex = [&](int i, int j) {
    int& id = grid_id[static_cast<std::size_t>(j * (nx + 1) + i)];
    if (id < 0) {
      id = mesh.vertex_count();
      mesh.vertices.emplace_back(x0 + i * dx, y0 + j * dy);
    }
    return id;
  };
  auto center_vertex = [&](int i, int j) {
    int& id = center_id[static_cast<std::size_t>(j * nx + i)];
    if (id < 0) {
      id = mesh.vertex_count();
      mesh.vertices.emplace_back(x0 + (i + 0.5) * dx, y0 + (j + 0.5) * dy);
    }
    return id;
  };
  auto removed = [&](int i, int j) {
    if (i < 0 || i >= nx || j < 0 || j >= ny) return false;  // outside the domain box
    return !keep(i, j);
  };

  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      if (!keep(i, j)) continue;
      const int v00 = grid_vertex(i, j);
      const int v10 = grid_vertex(i + 1, j);
      const int v11 = grid_vertex(i + 1, j + 1);
      const int v01 = grid_vertex(i, j + 1);
      const int c = center_vertex(i, j);
      mesh.triangles.push_back({v00, v10, c});
      mesh.triangles.push_back({v10, v11, c});
      mesh.triangles.push_back({v11, v01, c});
      mesh.triangles.push_back({v01, v00, c});

      // Cell sides that face the outside or a removed cell become boundary.
      auto add_edge = [&](int a, int b, int tag) { mesh.boundary_edges.push_back({a, b, tag}); };
      if (j == 0)
        add_edge(v00, v10, boundary_tag::bottom);
      else if (removed(i, j - 1))
        add_edge(v00, v10, hole_tag(i, j - 1));
      if (i == nx - 1)
        add_edge(v10, v11, boundary_tag::right);
      else if (removed(i + 1, j))
        add_edge(v10, v11, hole_tag(i + 1, j));
      if (j == ny - 1)
        add_edge(v11, v01, boundary_tag::top);
      else if (removed(i, j + 1))
        add_edge(v11, v01, hole_tag(i, j + 1));
      if (i == 0)
        add_edge(v01, v00, boundary_tag::left);
      else if (removed(i - 1, j))
        add_edge(v01, v00, hole_tag(i - 1, j));
    }

  mesh.validate();
  return mesh;
}

int grid_index_of(double coord, double origin, double step, const char* what) {
  const double pos = (coord - origin) / step;
  const int idx = static_cast<int>(std::lround(pos));
  if (std::abs(pos - idx) > 1e-9)
    throw std::invalid_argument(std::string("mesh generator: ") + what + " must align with the cell grid");
  return idx;
}

}  // namespace

TriMesh make_rect_crisscross(double x0, double y0, double x1, double y1, int nx, int ny) {
  return build_crisscross(x0, y0, x1, y1, nx, ny, [](int, int) { return true; },
                          [](int, int) { return 0; });
}

TriMesh make_unit_square_crisscross(int n) { return make_rect_crisscross(0.0, 0.0, 1.0, 1.0, n, n); }

TriMesh make_footing_mesh(int n, double span0, double span1) {
  TriMesh mesh = make_unit_square_crisscross(n);
  const double h = 1.0 / n;
  const int i0 = grid_index_of(span0, 0.0, h, "footing load span");
  const int i1 = grid_index_of(span1, 0.0, h, "footing load span");
  for (auto& edge : mesh.boundary_edges) {
    if (edge.tag != boundary_tag::top) continue;
    const double xa = mesh.vertices[static_cast<std::size_t>(edge.v0)].x();
    const double xb = mesh.vertices[static_cast<std::size_t>(edge.v1)].x();
    const double mid = 0.5 * (xa + xb);
    const int cell = static_cast<int>(std::floor(mid / h));
    if (cell >= i0 && cell < i1) edge.tag = boundary_tag::load;
  }
  return mesh;
}

TriMesh make_two_well_mesh(double width, double height, int nx, int ny,
                           const std::array<double, 4>& hole1_rect,
                           const std::array<double, 4>& hole2_rect) {
  const double dx = width / nx;
  const double dy = height / ny;
  struct CellRange {
    int i0, i1, j0, j1;
    bool contains(int i, int j) const { return i >= i0 && i < i1 && j >= j0 && j < j1; }
  };
  auto to_range = [&](const std::array<double, 4>& r) {
    CellRange cr{grid_index_of(r[0], 0.0, dx, "well"), grid_index_of(r[2], 0.0, dx, "well"),
                 grid_index_of(r[1], 0.0, dy, "well"), grid_index_of(r[3], 0.0, dy, "well")};
    if (cr.i0 >= cr.i1 || cr.j0 >= cr.j1) throw std::invalid_argument("mesh generator: empty well rectangle");
    if (cr.i0 <= 0 || cr.i1 >= nx || cr.j0 <= 0 || cr.j1 >= ny)
      throw std::invalid_argument("mesh generator: well must be strictly interior");
    return cr;
  };
  const CellRange h1 = to_range(hole1_rect);
  const CellRange h2 = to_range(hole2_rect);
  return build_crisscross(
      0.0, 0.0, width, height, nx, ny,
      [&](int i, int j) { return !h1.contains(i, j) && !h2.contains(i, j); },
      [&](int i, int j) { return h1.contains(i, j) ? boundary_tag::hole1 : boundary_tag::hole2; });
}

}  // namespace porochaos
