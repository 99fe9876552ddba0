#include <cstdio>

#include "porochaos/biot.hpp"
#include "porochaos/digest.hpp"
#include "porochaos/tri_quadrature.hpp"

namespace porochaos {

std::string BiotScenario::digest() const {
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "mesh{v=%d,t=%d} sample{mu=%.6g,lambda=%.6g,alpha=%.6g,kappa=%.6g,c0=%.6g} "
                "t_final=%.6g steps=%d",
                mesh ? mesh->vertex_count() : 0, mesh ? mesh->triangle_count() : 0, sample.mu,
                sample.lambda, sample.alpha, sample.kappa, sample.c0, t_final, steps);
  return std::string(buf) + " #" + fnv1a64_hex(buf);
}

AssembledSystem assemble(const BiotScenario& scenario, const TaylorHoodSpace& space) {
  const TriMesh& mesh = space.mesh();
  mesh.validate();

  const double mu = scenario.sample.mu;
  const double lambda = scenario.sample.lambda;
  const double alpha = scenario.sample.alpha;
  const double kappa = scenario.sample.kappa;
  const double c0 = scenario.sample.c0;

  AssembledSystem sys;
  sys.nu = space.displacement_dofs();
  sys.np = space.pressure_dofs();

  std::vector<Eigen::Triplet<double>> ta, tb, tc, td;
  const TriQuadRule& rule = tri_rule_degree6();

  for (int t = 0; t < mesh.triangle_count(); ++t) {
    const TriGeometry geo = tri_geometry(mesh, t);
    const auto nodes = space.element_nodes(t);
    const auto& tri = mesh.triangles[static_cast<std::size_t>(t)];

    Eigen::Matrix<double, 12, 12> ae = Eigen::Matrix<double, 12, 12>::Zero();
    Eigen::Matrix<double, 3, 12> be = Eigen::Matrix<double, 3, 12>::Zero();
    Eigen::Matrix3d ce = Eigen::Matrix3d::Zero();
    Eigen::Matrix3d de = Eigen::Matrix3d::Zero();

    for (const auto& qp : rule.points) {
      const double w = qp.weight * geo.area;
      const auto grads = TaylorHoodSpace::p2_gradients(qp.bary, geo.grad_bary);
      // Displacement block: 2 mu eps(v):eps(w) + lambda div(v) div(w).
      for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
          const Eigen::Vector2d& ga = grads[static_cast<std::size_t>(a)];
          const Eigen::Vector2d& gb = grads[static_cast<std::size_t>(b)];
          const double dot = ga.dot(gb);
          for (int ca = 0; ca < 2; ++ca)
            for (int cb = 0; cb < 2; ++cb) {
              double v = mu * (ga(cb) * gb(ca)) + lambda * ga(ca) * gb(cb);
              if (ca == cb) v += mu * dot;
              ae(2 * a + ca, 2 * b + cb) += w * v;
            }
        }
      // Coupling: b(v, q) = -int alpha div(v) q, rows are pressure tests.
      for (int j = 0; j < 3; ++j)
        for (int a = 0; a < 6; ++a)
          for (int ca = 0; ca < 2; ++ca)
            be(j, 2 * a + ca) -= w * alpha * grads[static_cast<std::size_t>(a)](ca) * qp.bary[static_cast<std::size_t>(j)];
      // Storage mass.
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          ce(i, j) += w * c0 * qp.bary[static_cast<std::size_t>(i)] * qp.bary[static_cast<std::size_t>(j)];
    }
    // Darcy stiffness has a constant integrand.
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        de(i, j) = geo.area * kappa * geo.grad_bary[static_cast<std::size_t>(i)].dot(geo.grad_bary[static_cast<std::size_t>(j)]);

    for (int a = 0; a < 6; ++a)
      for (int ca = 0; ca < 2; ++ca) {
        const int ga = 2 * nodes[static_cast<std::size_t>(a)] + ca;
        for (int b = 0; b < 6; ++b)
          for (int cb = 0; cb < 2; ++cb)
            ta.emplace_back(ga, 2 * nodes[static_cast<std::size_t>(b)] + cb, ae(2 * a + ca, 2 * b + cb));
        for (int j = 0; j < 3; ++j)
          tb.emplace_back(tri[static_cast<std::size_t>(j)], ga, be(j, 2 * a + ca));
      }
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        tc.emplace_back(tri[static_cast<std::size_t>(i)], tri[static_cast<std::size_t>(j)], ce(i, j));
        td.emplace_back(tri[static_cast<std::size_t>(i)], tri[static_cast<std::size_t>(j)], de(i, j));
      }
  }

  sys.A.resize(sys.nu, sys.nu);
  sys.A.setFromTriplets(ta.begin(), ta.end());
  sys.B.resize(sys.np, sys.nu);
  sys.B.setFromTriplets(tb.begin(), tb.end());
  sys.C.resize(sys.np, sys.np);
  sys.C.setFromTriplets(tc.begin(), tc.end());
  sys.Dk.resize(sys.np, sys.np);
  sys.Dk.setFromTriplets(td.begin(), td.end());
  return sys;
}

Eigen::VectorXd point_source_load(const TaylorHoodSpace& space, const Eigen::Vector2d& x0,
                                  double magnitude) {
  const TriMesh& mesh = space.mesh();
  Eigen::VectorXd load = Eigen::VectorXd::Zero(space.pressure_dofs());
  for (int t = 0; t < mesh.triangle_count(); ++t) {
    const TriGeometry geo = tri_geometry(mesh, t);
    // Barycentric coordinates of x0; containment with a tiny slack, ties
    // resolved by the lowest triangle index.
    const Eigen::Vector2d d = x0 - geo.corners[0];
    const Eigen::Vector2d e1 = geo.corners[1] - geo.corners[0];
    const Eigen::Vector2d e2 = geo.corners[2] - geo.corners[0];
    const double det = e1.x() * e2.y() - e1.y() * e2.x();
    const double l1 = (d.x() * e2.y() - d.y() * e2.x()) / det;
    const double l2 = (e1.x() * d.y() - e1.y() * d.x()) / det;
    const double l0 = 1.0 - l1 - l2;
    const double tol = 1e-12;
    if (l0 < -tol || l1 < -tol || l2 < -tol) continue;
    const auto& tri = mesh.triangles[static_cast<std::size_t>(t)];
    load(tri[0]) = magnitude * l0;
    load(tri[1]) = magnitude * l1;
    load(tri[2]) = magnitude * l2;
    return load;
  }
  throw std::invalid_argument("point_source_load: point lies outside the mesh");
}

Eigen::VectorXd traction_load(const TaylorHoodSpace& space,
                              const std::map<int, BoundaryCondition>& bcs, double t) {
  const TriMesh& mesh = space.mesh();
  Eigen::VectorXd load = Eigen::VectorXd::Zero(space.displacement_dofs());
  const EdgeQuadRule& rule = edge_rule();
  for (const TriMesh::BoundaryEdge& be : mesh.boundary_edges) {
    const auto it = bcs.find(be.tag);
    if (it == bcs.end() || !it->second.traction) continue;
    const Eigen::Vector2d a = mesh.vertices[static_cast<std::size_t>(be.v0)];
    const Eigen::Vector2d b = mesh.vertices[static_cast<std::size_t>(be.v1)];
    const double len = (b - a).norm();
    const int mid = space.edge_node(be.v0, be.v1);
    const int nodes[3] = {be.v0, be.v1, mid};
    for (std::size_t q = 0; q < rule.points.size(); ++q) {
      const double s = rule.points[q];
      const Eigen::Vector2d x = (1.0 - s) * a + s * b;
      const Eigen::Vector2d tr = it->second.traction(x, t);
      // P2 trace: endpoint shapes l(2l-1), midpoint 4 s (1-s).
      const double shape[3] = {(1.0 - s) * (1.0 - 2.0 * s), s * (2.0 * s - 1.0), 4.0 * s * (1.0 - s)};
      for (int n = 0; n < 3; ++n)
        for (int c = 0; c < 2; ++c)
          load(2 * nodes[n] + c) += rule.weights[q] * len * shape[n] * tr(c);
    }
  }
  return load;
}

Eigen::VectorXd body_force_load(const TaylorHoodSpace& space, const VectorFieldT& f, double t) {
  const TriMesh& mesh = space.mesh();
  Eigen::VectorXd load = Eigen::VectorXd::Zero(space.displacement_dofs());
  if (!f) return load;
  const TriQuadRule& rule = tri_rule_degree6();
  for (int tr = 0; tr < mesh.triangle_count(); ++tr) {
    const TriGeometry geo = tri_geometry(mesh, tr);
    const auto nodes = space.element_nodes(tr);
    for (const auto& qp : rule.points) {
      const double w = qp.weight * geo.area;
      const Eigen::Vector2d fx = f(geo.point(qp.bary), t);
      const auto shapes = TaylorHoodSpace::p2_values(qp.bary);
      for (int a = 0; a < 6; ++a)
        for (int c = 0; c < 2; ++c)
          load(2 * nodes[static_cast<std::size_t>(a)] + c) += w * shapes[static_cast<std::size_t>(a)] * fx(c);
    }
  }
  return load;
}

Eigen::VectorXd fluid_source_load(const TaylorHoodSpace& space, const ScalarFieldT& g, double t) {
  const TriMesh& mesh = space.mesh();
  Eigen::VectorXd load = Eigen::VectorXd::Zero(space.pressure_dofs());
  if (!g) return load;
  const TriQuadRule& rule = tri_rule_degree6();
  for (int tr = 0; tr < mesh.triangle_count(); ++tr) {
    const TriGeometry geo = tri_geometry(mesh, tr);
    const auto& tri = mesh.triangles[static_cast<std::size_t>(tr)];
    for (const auto& qp : rule.points) {
      const double w = qp.weight * geo.area;
      const double gx = g(geo.point(qp.bary), t);
      for (int j = 0; j < 3; ++j)
        load(tri[static_cast<std::size_t>(j)]) += w * gx * qp.bary[static_cast<std::size_t>(j)];
    }
  }
  return load;
}

}  // namespace porochaos
