#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "porochaos/coefficient_model.hpp"
#include "porochaos/mesh.hpp"
#include "porochaos/taylor_hood.hpp"

namespace porochaos {

using ScalarField = std::function<double(const Eigen::Vector2d&)>;
using ScalarFieldT = std::function<double(const Eigen::Vector2d&, double)>;
using VectorFieldT = std::function<Eigen::Vector2d(const Eigen::Vector2d&, double)>;

/// Per-tag boundary data. Displacement components may be constrained
/// individually (axis-aligned rollers need only one of them); unconstrained
/// components receive the total-stress traction, which defaults to zero.
/// Pressure is either Dirichlet or no-flux (natural).
struct BoundaryCondition {
  std::optional<ScalarFieldT> u1;
  std::optional<ScalarFieldT> u2;
  std::optional<ScalarFieldT> p;
  VectorFieldT traction;  // null means traction-free

  static ScalarFieldT constant(double v) {
    return [v](const Eigen::Vector2d&, double) { return v; };
  }
};

struct PointSource {
  Eigen::Vector2d x0;
  double magnitude = 0.0;
};

/// One deterministic Biot problem: geometry, coefficients, data, and the
/// implicit-Euler time axis (fixed dt = t_final / steps).
struct BiotScenario {
  std::shared_ptr<const TriMesh> mesh;
  PoroelasticSample sample;
  std::map<int, BoundaryCondition> bcs;

  VectorFieldT body_force;              // f [Pa/m]; null = zero
  ScalarFieldT fluid_source;            // volumetric g [1/s]; null = zero
  std::optional<PointSource> point_source;

  ScalarField initial_fluid_content;    // phi_0; null = zero
  ScalarFieldT initial_u1, initial_u2;  // optional initial fields (manufactured runs)
  ScalarFieldT initial_p;

  double t_final = 1.0;
  int steps = 1;

  bool zero_mean_pressure = false;  // scalar multiplier enforcing int p = 0
  bool pin_rigid_motions = false;   // three multipliers pinning translations/rotation
  double korn_surrogate = 2.0;      // stands in for the non-computable Korn constant

  double dt() const { return t_final / steps; }
  std::string digest() const;  // short fingerprint for error reports
};

/// Sparse blocks of the spatial discretization. A is the elasticity form,
/// B the (negated) coupling form b(v,q) = -int alpha div(v) q as an
/// np x nu matrix, C the storage mass and Dk the Darcy stiffness.
struct AssembledSystem {
  int nu = 0, np = 0;
  Eigen::SparseMatrix<double> A, B, C, Dk;
};

AssembledSystem assemble(const BiotScenario& scenario, const TaylorHoodSpace& space);

/// Load vector of a Dirac fluid source: magnitude * q_h(x0) for every
/// pressure test function. x0 must lie inside the mesh; points on edges
/// resolve to the lowest containing triangle index.
Eigen::VectorXd point_source_load(const TaylorHoodSpace& space, const Eigen::Vector2d& x0,
                                  double magnitude);

/// Edge-exact integration of prescribed total-stress tractions against the
/// P2 displacement trace.
Eigen::VectorXd traction_load(const TaylorHoodSpace& space,
                              const std::map<int, BoundaryCondition>& bcs, double t);

Eigen::VectorXd body_force_load(const TaylorHoodSpace& space, const VectorFieldT& f, double t);
Eigen::VectorXd fluid_source_load(const TaylorHoodSpace& space, const ScalarFieldT& g, double t);

/// Mass matrices of the pressure (P1, vertex DOFs) and displacement-component
/// (P2, node DOFs) spaces; used for L2(D) norms of DOF fields.
Eigen::SparseMatrix<double> p1_mass_matrix(const TriMesh& mesh);
Eigen::SparseMatrix<double> p2_mass_matrix(const TaylorHoodSpace& space);

struct FieldSolution {
  Eigen::VectorXd u;  // 2 * (vertices + edges)
  Eigen::VectorXd p;  // vertices
  double time = 0.0;
};

struct EnergyReport {
  double energy_lhs = 0.0;     // int_0^tF a(u,u) + c(p,p) dt
  double data_rhs = 0.0;       // int_0^tF (C_K/2mu)|f|^2 + (K/alpha)|G|^2 dt
  double ratio = 0.0;          // energy_lhs / data_rhs (0 when rhs is 0)
  double korn_surrogate = 0.0;
  bool data_norm_finite = true;  // false when g contains a Dirac source
};

/// Monolithic implicit-Euler solver. The saddle matrix
///   [ A   B^T          ]
///   [ B  -(C + dt Dk)  ]
/// is symmetric indefinite (second block row negated), factorized once per
/// scenario and reused across the constant-coefficient time steps. Instances
/// own their workspace; distinct instances may run concurrently.
class BiotSolver {
public:
  explicit BiotSolver(const BiotScenario& scenario);

  const TaylorHoodSpace& space() const { return space_; }
  const AssembledSystem& system() const { return sys_; }

  FieldSolution initial_state() const;

  /// Advance one step of length dt() to time t_next, consuming the previous
  /// state through the discrete fluid content c0 p + alpha div u.
  FieldSolution step(const FieldSolution& prev, double t_next) const;

  /// All states t_1 .. t_final starting from the scenario's initial data.
  std::vector<FieldSolution> solve_transient() const;

  EnergyReport energy_diagnostic(const std::vector<FieldSolution>& states) const;

  /// L2(D) norms via mass-matrix quadrature: sqrt(v^T M v) with the P2 or P1
  /// mass matrix. `u_nodal` expects one value per P2 node.
  double l2_norm_p(const Eigen::VectorXd& p_vertex) const;
  double l2_norm_u_component(const Eigen::VectorXd& u_nodal) const;

private:
  Eigen::VectorXd fluid_content(const FieldSolution& state) const;
  Eigen::VectorXd initial_content_vector() const;
  FieldSolution step_from_content(const Eigen::VectorXd& phi_prev, double t_next) const;

  BiotScenario scenario_;
  TaylorHoodSpace space_;
  AssembledSystem sys_;
  int n_total_ = 0;                     // nu + np + multipliers
  std::vector<int> fixed_dofs_;         // monolithic indices (u block then p block)
  std::vector<ScalarFieldT> fixed_fns_; // boundary value providers, same order
  std::vector<int> full_to_free_;
  std::vector<int> free_to_full_;
  Eigen::SparseMatrix<double> monolithic_;
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu_;
  Eigen::SparseMatrix<double> p1_mass_, p2_mass_;
};

}  // namespace porochaos
