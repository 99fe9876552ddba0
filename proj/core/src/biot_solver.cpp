#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "porochaos/biot.hpp"
#include "porochaos/tri_quadrature.hpp"

namespace porochaos {

namespace {

void validate_scenario(const BiotScenario& s) {
  if (!s.mesh) throw std::invalid_argument("BiotScenario: mesh missing");
  if (s.steps < 1 || s.t_final <= 0.0)
    throw std::invalid_argument("BiotScenario: steps >= 1 and t_final > 0 required");
  const PoroelasticSample& c = s.sample;
  if (c.mu <= 0.0 || c.lambda <= 0.0 || c.kappa <= 0.0 || c.c0 < 0.0)
    throw std::invalid_argument("BiotScenario: inadmissible coefficients");
  if (c.alpha <= 0.0 || c.alpha > 1.0)
    throw std::invalid_argument("BiotScenario: alpha must lie in (0,1]");
}

}  // namespace

Eigen::SparseMatrix<double> p1_mass_matrix(const TriMesh& mesh) {
  std::vector<Eigen::Triplet<double>> trip;
  for (int t = 0; t < mesh.triangle_count(); ++t) {
    const TriGeometry geo = tri_geometry(mesh, t);
    const auto& tri = mesh.triangles[static_cast<std::size_t>(t)];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        trip.emplace_back(tri[static_cast<std::size_t>(i)], tri[static_cast<std::size_t>(j)],
                          geo.area * (i == j ? 1.0 / 6.0 : 1.0 / 12.0));
  }
  Eigen::SparseMatrix<double> m(mesh.vertex_count(), mesh.vertex_count());
  m.setFromTriplets(trip.begin(), trip.end());
  return m;
}

Eigen::SparseMatrix<double> p2_mass_matrix(const TaylorHoodSpace& space) {
  const TriMesh& mesh = space.mesh();
  std::vector<Eigen::Triplet<double>> trip;
  const TriQuadRule& rule = tri_rule_degree6();
  for (int t = 0; t < mesh.triangle_count(); ++t) {
    const TriGeometry geo = tri_geometry(mesh, t);
    const auto nodes = space.element_nodes(t);
    Eigen::Matrix<double, 6, 6> me = Eigen::Matrix<double, 6, 6>::Zero();
    for (const auto& qp : rule.points) {
      const auto shapes = TaylorHoodSpace::p2_values(qp.bary);
      for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
          me(a, b) += qp.weight * geo.area * shapes[static_cast<std::size_t>(a)] * shapes[static_cast<std::size_t>(b)];
    }
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b)
        trip.emplace_back(nodes[static_cast<std::size_t>(a)], nodes[static_cast<std::size_t>(b)], me(a, b));
  }
  Eigen::SparseMatrix<double> m(space.node_count(), space.node_count());
  m.setFromTriplets(trip.begin(), trip.end());
  return m;
}

BiotSolver::BiotSolver(const BiotScenario& scenario) : scenario_(scenario), space_(*scenario.mesh) {
  validate_scenario(scenario_);
  sys_ = assemble(scenario_, space_);
  const int nu = sys_.nu, np = sys_.np;
  const int nm = (scenario_.zero_mean_pressure ? 1 : 0) + (scenario_.pin_rigid_motions ? 3 : 0);
  n_total_ = nu + np + nm;

  // Dirichlet constraints, deterministic order: boundary edges as listed,
  // later tags overwrite at shared corner nodes.
  std::map<int, ScalarFieldT> fixed;
  for (const TriMesh::BoundaryEdge& be : scenario_.mesh->boundary_edges) {
    const auto it = scenario_.bcs.find(be.tag);
    if (it == scenario_.bcs.end()) continue;
    const BoundaryCondition& bc = it->second;
    const int mid = space_.edge_node(be.v0, be.v1);
    const int unodes[3] = {be.v0, be.v1, mid};
    for (int n : unodes) {
      if (bc.u1) fixed[2 * n + 0] = *bc.u1;
      if (bc.u2) fixed[2 * n + 1] = *bc.u2;
    }
    if (bc.p) {
      fixed[nu + be.v0] = *bc.p;
      fixed[nu + be.v1] = *bc.p;
    }
  }
  for (const auto& [dof, fn] : fixed) {
    fixed_dofs_.push_back(dof);
    fixed_fns_.push_back(fn);
  }

  // Monolithic symmetric-indefinite matrix.
  const double dt = scenario_.dt();
  std::vector<Eigen::Triplet<double>> trip;
  for (int k = 0; k < sys_.A.outerSize(); ++k)
    for (Eigen::SparseMatrix<double>::InnerIterator it(sys_.A, k); it; ++it)
      trip.emplace_back(static_cast<int>(it.row()), static_cast<int>(it.col()), it.value());
  for (int k = 0; k < sys_.B.outerSize(); ++k)
    for (Eigen::SparseMatrix<double>::InnerIterator it(sys_.B, k); it; ++it) {
      const int j = static_cast<int>(it.row());   // pressure test
      const int i = static_cast<int>(it.col());   // displacement trial
      trip.emplace_back(i, nu + j, it.value());   // B^T
      trip.emplace_back(nu + j, i, it.value());   // B
    }
  for (int k = 0; k < sys_.C.outerSize(); ++k)
    for (Eigen::SparseMatrix<double>::InnerIterator it(sys_.C, k); it; ++it)
      trip.emplace_back(nu + static_cast<int>(it.row()), nu + static_cast<int>(it.col()), -it.value());
  for (int k = 0; k < sys_.Dk.outerSize(); ++k)
    for (Eigen::SparseMatrix<double>::InnerIterator it(sys_.Dk, k); it; ++it)
      trip.emplace_back(nu + static_cast<int>(it.row()), nu + static_cast<int>(it.col()), -dt * it.value());

  int mcol = nu + np;
  if (scenario_.zero_mean_pressure) {
    // int_D p = 0 through one scalar multiplier.
    Eigen::VectorXd m = Eigen::VectorXd::Zero(np);
    for (int t = 0; t < scenario_.mesh->triangle_count(); ++t) {
      const TriGeometry geo = tri_geometry(*scenario_.mesh, t);
      const auto& tri = scenario_.mesh->triangles[static_cast<std::size_t>(t)];
      for (int j = 0; j < 3; ++j) m(tri[static_cast<std::size_t>(j)]) += geo.area / 3.0;
    }
    for (int j = 0; j < np; ++j)
      if (m(j) != 0.0) {
        trip.emplace_back(nu + j, mcol, m(j));
        trip.emplace_back(mcol, nu + j, m(j));
      }
    ++mcol;
  }
  if (scenario_.pin_rigid_motions) {
    // int u = 0 (two translations) and int x ^ u = 0 (rotation).
    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(nu, 3);
    const TriQuadRule& rule = tri_rule_degree6();
    for (int t = 0; t < scenario_.mesh->triangle_count(); ++t) {
      const TriGeometry geo = tri_geometry(*scenario_.mesh, t);
      const auto nodes = space_.element_nodes(t);
      for (const auto& qp : rule.points) {
        const double w = qp.weight * geo.area;
        const Eigen::Vector2d x = geo.point(qp.bary);
        const auto shapes = TaylorHoodSpace::p2_values(qp.bary);
        for (int a = 0; a < 6; ++a) {
          const double v = w * shapes[static_cast<std::size_t>(a)];
          r(2 * nodes[static_cast<std::size_t>(a)] + 0, 0) += v;
          r(2 * nodes[static_cast<std::size_t>(a)] + 1, 1) += v;
          r(2 * nodes[static_cast<std::size_t>(a)] + 0, 2) += -x.y() * v;
          r(2 * nodes[static_cast<std::size_t>(a)] + 1, 2) += x.x() * v;
        }
      }
    }
    for (int k = 0; k < 3; ++k, ++mcol)
      for (int i = 0; i < nu; ++i)
        if (r(i, k) != 0.0) {
          trip.emplace_back(i, mcol, r(i, k));
          trip.emplace_back(mcol, i, r(i, k));
        }
  }

  monolithic_.resize(n_total_, n_total_);
  monolithic_.setFromTriplets(trip.begin(), trip.end());

  full_to_free_.assign(static_cast<std::size_t>(n_total_), 0);
  for (int d : fixed_dofs_) full_to_free_[static_cast<std::size_t>(d)] = -1;
  for (int i = 0; i < n_total_; ++i)
    if (full_to_free_[static_cast<std::size_t>(i)] == 0) {
      full_to_free_[static_cast<std::size_t>(i)] = static_cast<int>(free_to_full_.size());
      free_to_full_.push_back(i);
    }
  const int nfree = static_cast<int>(free_to_full_.size());

  std::vector<Eigen::Triplet<double>> rtrip;
  for (int k = 0; k < monolithic_.outerSize(); ++k)
    for (Eigen::SparseMatrix<double>::InnerIterator it(monolithic_, k); it; ++it) {
      const int i = full_to_free_[static_cast<std::size_t>(it.row())];
      const int j = full_to_free_[static_cast<std::size_t>(it.col())];
      if (i >= 0 && j >= 0) rtrip.emplace_back(i, j, it.value());
    }
  Eigen::SparseMatrix<double> reduced(nfree, nfree);
  reduced.setFromTriplets(rtrip.begin(), rtrip.end());
  reduced.makeCompressed();

  lu_.compute(reduced);
  bool singular = lu_.info() != Eigen::Success;
  if (!singular && nfree > 0) {
    // LU of a structurally singular saddle system can still "succeed" on a
    // rounding-level pivot; probe with a fixed right-hand side and reject
    // when the residual blows up.
    Eigen::VectorXd probe(nfree);
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    for (int i = 0; i < nfree; ++i) {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      probe(i) = static_cast<double>(state >> 11) * 0x1.0p-53 - 0.5;
    }
    const Eigen::VectorXd z = lu_.solve(probe);
    if (!z.allFinite() || (reduced * z - probe).norm() > 1e-4 * probe.norm()) singular = true;
  }
  if (singular)
    throw std::runtime_error(
        "BiotSolver: singular factorization (incompatible boundary conditions?) for scenario " +
        scenario_.digest());

  p1_mass_ = p1_mass_matrix(*scenario_.mesh);
  p2_mass_ = p2_mass_matrix(space_);
}

FieldSolution BiotSolver::initial_state() const {
  FieldSolution s;
  s.time = 0.0;
  s.u = Eigen::VectorXd::Zero(sys_.nu);
  s.p = Eigen::VectorXd::Zero(sys_.np);
  if (scenario_.initial_u1 || scenario_.initial_u2) {
    for (int n = 0; n < space_.node_count(); ++n) {
      const Eigen::Vector2d x = space_.node_position(n);
      if (scenario_.initial_u1) s.u(2 * n + 0) = scenario_.initial_u1(x, 0.0);
      if (scenario_.initial_u2) s.u(2 * n + 1) = scenario_.initial_u2(x, 0.0);
    }
  }
  if (scenario_.initial_p)
    for (int v = 0; v < sys_.np; ++v)
      s.p(v) = scenario_.initial_p(scenario_.mesh->vertices[static_cast<std::size_t>(v)], 0.0);
  return s;
}

Eigen::VectorXd BiotSolver::fluid_content(const FieldSolution& state) const {
  return sys_.C * state.p - sys_.B * state.u;
}

Eigen::VectorXd BiotSolver::initial_content_vector() const {
  if (scenario_.initial_u1 || scenario_.initial_u2 || scenario_.initial_p)
    return fluid_content(initial_state());
  if (scenario_.initial_fluid_content) {
    ScalarFieldT wrapped = [&](const Eigen::Vector2d& x, double) {
      return scenario_.initial_fluid_content(x);
    };
    return fluid_source_load(space_, wrapped, 0.0);
  }
  return Eigen::VectorXd::Zero(sys_.np);
}

FieldSolution BiotSolver::step_from_content(const Eigen::VectorXd& phi_prev, double t_next) const {
  const int nu = sys_.nu, np = sys_.np;
  const double dt = scenario_.dt();

  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n_total_);
  rhs.head(nu) = body_force_load(space_, scenario_.body_force, t_next) +
                 traction_load(space_, scenario_.bcs, t_next);
  Eigen::VectorXd g_load = fluid_source_load(space_, scenario_.fluid_source, t_next);
  if (scenario_.point_source)
    g_load += point_source_load(space_, scenario_.point_source->x0, scenario_.point_source->magnitude);
  rhs.segment(nu, np) = -(dt * g_load + phi_prev);

  // Dirichlet elimination: move the constrained columns to the right side.
  Eigen::VectorXd x_fix = Eigen::VectorXd::Zero(n_total_);
  std::vector<double> values(fixed_dofs_.size());
  for (std::size_t k = 0; k < fixed_dofs_.size(); ++k) {
    const int dof = fixed_dofs_[k];
    const Eigen::Vector2d pos = dof < nu ? space_.node_position(dof / 2)
                                         : scenario_.mesh->vertices[static_cast<std::size_t>(dof - nu)];
    values[k] = fixed_fns_[k](pos, t_next);
    x_fix(dof) = values[k];
  }
  rhs -= monolithic_ * x_fix;

  Eigen::VectorXd rhs_free(free_to_full_.size());
  for (std::size_t i = 0; i < free_to_full_.size(); ++i)
    rhs_free(static_cast<Eigen::Index>(i)) = rhs(free_to_full_[i]);
  const Eigen::VectorXd sol_free = lu_.solve(rhs_free);
  if (lu_.info() != Eigen::Success)
    throw std::runtime_error("BiotSolver: linear solve failed for scenario " + scenario_.digest());

  Eigen::VectorXd x = Eigen::VectorXd::Zero(n_total_);
  for (std::size_t i = 0; i < free_to_full_.size(); ++i)
    x(free_to_full_[i]) = sol_free(static_cast<Eigen::Index>(i));
  for (std::size_t k = 0; k < fixed_dofs_.size(); ++k) x(fixed_dofs_[k]) = values[k];

  FieldSolution out;
  out.u = x.head(nu);
  out.p = x.segment(nu, np);
  out.time = t_next;
  return out;
}

FieldSolution BiotSolver::step(const FieldSolution& prev, double t_next) const {
  return step_from_content(fluid_content(prev), t_next);
}

std::vector<FieldSolution> BiotSolver::solve_transient() const {
  std::vector<FieldSolution> states;
  states.reserve(static_cast<std::size_t>(scenario_.steps));
  Eigen::VectorXd phi = initial_content_vector();
  for (int n = 1; n <= scenario_.steps; ++n) {
    const double t = scenario_.t_final * n / scenario_.steps;
    FieldSolution s = step_from_content(phi, t);
    phi = fluid_content(s);
    states.push_back(std::move(s));
  }
  return states;
}

EnergyReport BiotSolver::energy_diagnostic(const std::vector<FieldSolution>& states) const {
  EnergyReport report;
  report.korn_surrogate = scenario_.korn_surrogate;
  const double dt = scenario_.dt();
  const PoroelasticSample& c = scenario_.sample;
  const double K = c.K > 0.0 ? c.K : derived_moduli(c.mu, c.lambda, 2).K;

  for (const FieldSolution& s : states)
    report.energy_lhs += dt * (s.u.dot(sys_.A * s.u) + s.p.dot(sys_.C * s.p));

  if (scenario_.point_source) {
    // |G|_{L2} is not finite for a Dirac source; the bound is reported as such.
    report.data_norm_finite = false;
    report.data_rhs = std::numeric_limits<double>::infinity();
    report.ratio = 0.0;
    return report;
  }

  const TriMesh& mesh = *scenario_.mesh;
  const TriQuadRule& rule = tri_rule_degree6();
  const std::size_t nq = rule.points.size();
  std::vector<double> G(static_cast<std::size_t>(mesh.triangle_count()) * nq, 0.0);
  if (scenario_.initial_fluid_content)
    for (int t = 0; t < mesh.triangle_count(); ++t) {
      const TriGeometry geo = tri_geometry(mesh, t);
      for (std::size_t q = 0; q < nq; ++q)
        G[static_cast<std::size_t>(t) * nq + q] =
            scenario_.initial_fluid_content(geo.point(rule.points[q].bary));
    }

  for (const FieldSolution& s : states) {
    double f_norm2 = 0.0, g_norm2 = 0.0;
    for (int t = 0; t < mesh.triangle_count(); ++t) {
      const TriGeometry geo = tri_geometry(mesh, t);
      for (std::size_t q = 0; q < nq; ++q) {
        const double w = rule.points[q].weight * geo.area;
        const Eigen::Vector2d x = geo.point(rule.points[q].bary);
        if (scenario_.body_force) f_norm2 += w * scenario_.body_force(x, s.time).squaredNorm();
        double& g_acc = G[static_cast<std::size_t>(t) * nq + q];
        if (scenario_.fluid_source) g_acc += dt * scenario_.fluid_source(x, s.time);
        g_norm2 += w * g_acc * g_acc;
      }
    }
    report.data_rhs += dt * (scenario_.korn_surrogate / (2.0 * c.mu) * f_norm2 + K / c.alpha * g_norm2);
  }
  report.ratio = report.data_rhs > 0.0 ? report.energy_lhs / report.data_rhs : 0.0;
  return report;
}

double BiotSolver::l2_norm_p(const Eigen::VectorXd& p_vertex) const {
  return std::sqrt(std::max(0.0, p_vertex.dot(p1_mass_ * p_vertex)));
}

double BiotSolver::l2_norm_u_component(const Eigen::VectorXd& u_nodal) const {
  return std::sqrt(std::max(0.0, u_nodal.dot(p2_mass_ * u_nodal)));
}

}  // namespace porochaos
