#include <doctest.h>

#include <cmath>

#include "porochaos/biot.hpp"
#include "porochaos/mms.hpp"
#include "porochaos/scenarios.hpp"

using namespace porochaos;

namespace {

BiotScenario clamped_drained_square(std::shared_ptr<const TriMesh> mesh, const PoroelasticSample& s,
                                    double t_final, int steps) {
  BiotScenario scn;
  scn.mesh = std::move(mesh);
  scn.sample = s;
  scn.t_final = t_final;
  scn.steps = steps;
  BoundaryCondition clamped;
  clamped.u1 = BoundaryCondition::constant(0.0);
  clamped.u2 = BoundaryCondition::constant(0.0);
  clamped.p = BoundaryCondition::constant(0.0);
  for (int tag : {1, 2, 3, 4}) scn.bcs[tag] = clamped;
  return scn;
}

}  // namespace

TEST_CASE("zero data yields the zero solution at every step") {
  auto mesh = std::make_shared<TriMesh>(make_unit_square_crisscross(4));
  const BiotScenario scn = clamped_drained_square(mesh, mms_reference_sample(), 1.0, 5);
  const BiotSolver solver(scn);
  for (const FieldSolution& s : solver.solve_transient()) {
    CHECK(s.u.cwiseAbs().maxCoeff() == 0.0);
    CHECK(s.p.cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("steady states are fixed points of the step map") {
  auto mesh = std::make_shared<TriMesh>(
      make_two_well_mesh(4.0, 1.0, 20, 5, {0.8, 0.4, 1.2, 0.6}, {2.8, 0.4, 3.2, 0.6}));
  PoroelasticSample s = mms_reference_sample();

  // Two giant implicit steps converge to the steady state; the transient
  // remainder contracts by ~tau/dt per step.
  BiotScenario relax = make_two_well_scenario(mesh, -1.0, 1.0, 2e8, 2);
  relax.sample = s;
  const BiotSolver relax_solver(relax);
  FieldSolution steady = relax_solver.solve_transient().back();

  BiotScenario scn = make_two_well_scenario(mesh, -1.0, 1.0, 1.0, 10);
  scn.sample = s;
  const BiotSolver solver(scn);
  const FieldSolution next = solver.step(steady, 0.1);
  const double uscale = steady.u.cwiseAbs().maxCoeff();
  const double pscale = steady.p.cwiseAbs().maxCoeff();
  CHECK((next.u - steady.u).cwiseAbs().maxCoeff() <= 1e-10 * uscale);
  CHECK((next.p - steady.p).cwiseAbs().maxCoeff() <= 1e-10 * pscale);
}

TEST_CASE("polynomial-in-space manufactured solution is reproduced to rounding") {
  auto mesh = std::make_shared<TriMesh>(make_unit_square_crisscross(4));
  const PoroelasticSample s = mms_reference_sample();
  const ManufacturedCase mms = mms_poly_space(s, 1);
  const BiotScenario scn = make_mms_scenario(mesh, s, mms, 1.0, 3);
  const BiotSolver solver(scn);
  const TaylorHoodSpace& space = solver.space();
  for (const FieldSolution& state : solver.solve_transient()) {
    const MmsErrors err = mms_errors(space, mms, state);
    CHECK(err.u_l2 <= 1e-10);
    CHECK(err.p_l2 <= 1e-10);
  }
}

TEST_CASE("constrained DOFs match their boundary data bitwise") {
  auto mesh = std::make_shared<TriMesh>(make_unit_square_crisscross(4));
  const PoroelasticSample s = mms_reference_sample();
  const ManufacturedCase mms = mms_trig(s);
  const BiotScenario scn = make_mms_scenario(mesh, s, mms, 1.0, 2);
  const BiotSolver solver(scn);
  const TaylorHoodSpace& space = solver.space();
  const FieldSolution last = solver.solve_transient().back();

  for (const auto& be : mesh->boundary_edges) {
    const int nodes[3] = {be.v0, be.v1, space.edge_node(be.v0, be.v1)};
    for (int n : nodes) {
      const Eigen::Vector2d x = space.node_position(n);
      CHECK(last.u(2 * n + 0) == mms.u1(x, last.time));
      CHECK(last.u(2 * n + 1) == mms.u2(x, last.time));
    }
    CHECK(last.p(be.v0) == mms.p(mesh->vertices[static_cast<std::size_t>(be.v0)], last.time));
  }
}

TEST_CASE("implicit Euler converges at first order in dt") {
  auto mesh = std::make_shared<TriMesh>(make_unit_square_crisscross(4));
  const PoroelasticSample s = mms_reference_sample();
  const ManufacturedCase mms = mms_poly_space(s, 2);  // quadratic in time, exact in space
  std::vector<double> errors;
  for (int steps : {2, 4, 8, 16}) {
    const BiotScenario scn = make_mms_scenario(mesh, s, mms, 1.0, steps);
    const BiotSolver solver(scn);
    const FieldSolution last = solver.solve_transient().back();
    const MmsErrors err = mms_errors(solver.space(), mms, last);
    errors.push_back(err.p_l2 + err.u_l2);
  }
  for (std::size_t i = 1; i < errors.size(); ++i) {
    const double order = std::log2(errors[i - 1] / errors[i]);
    CHECK(order == doctest::Approx(1.0).epsilon(0.2));
  }
}

TEST_CASE("smooth manufactured solution converges at orders 3 (u) and 2 (p)") {
  const PoroelasticSample s = mms_reference_sample();
  const ManufacturedCase mms = mms_trig(s);
  std::vector<double> eu, ep;
  for (int n : {4, 8, 16}) {
    auto mesh = std::make_shared<TriMesh>(make_unit_square_crisscross(n));
    const BiotScenario scn = make_mms_scenario(mesh, s, mms, 1.0, 2);
    const BiotSolver solver(scn);
    const FieldSolution last = solver.solve_transient().back();
    const MmsErrors err = mms_errors(solver.space(), mms, last);
    eu.push_back(err.u_l2);
    ep.push_back(err.p_l2);
  }
  CHECK(std::log2(eu[1] / eu[2]) > 2.5);
  CHECK(std::log2(ep[1] / ep[2]) > 1.6);
}

TEST_CASE("incompatible pure-Neumann pressure reports a singular factorization") {
  auto mesh = std::make_shared<TriMesh>(make_unit_square_crisscross(3));
  PoroelasticSample s = mms_reference_sample();
  s.c0 = 0.0;
  BiotScenario scn;
  scn.mesh = mesh;
  scn.sample = s;
  scn.t_final = 1.0;
  scn.steps = 2;
  BoundaryCondition clamped;  // displacement fixed, pressure natural (no flux)
  clamped.u1 = BoundaryCondition::constant(0.0);
  clamped.u2 = BoundaryCondition::constant(0.0);
  for (int tag : {1, 2, 3, 4}) scn.bcs[tag] = clamped;
  CHECK_THROWS_WITH_AS(BiotSolver{scn}, doctest::Contains("singular"), std::runtime_error);

  // The zero-mean pressure multiplier restores solvability; a compatible
  // source (zero total volume) then yields a zero-mean pressure.
  scn.zero_mean_pressure = true;
  scn.fluid_source = [](const Eigen::Vector2d& x, double) { return x.x() - 0.5; };
  const BiotSolver solver(scn);
  const FieldSolution last = solver.solve_transient().back();
  double mean_p = 0.0;
  for (int t = 0; t < mesh->triangle_count(); ++t) {
    const TriGeometry geo = tri_geometry(*mesh, t);
    const auto& tri = mesh->triangles[static_cast<std::size_t>(t)];
    for (int j = 0; j < 3; ++j) mean_p += geo.area / 3.0 * last.p(tri[static_cast<std::size_t>(j)]);
  }
  CHECK(std::abs(mean_p) <= 1e-10 * std::max(1.0, last.p.cwiseAbs().maxCoeff()));
}

TEST_CASE("rigid-motion multipliers carry a pure-traction problem") {
  auto mesh = std::make_shared<TriMesh>(make_unit_square_crisscross(4));
  PoroelasticSample s = mms_reference_sample();
  BiotScenario scn;
  scn.mesh = mesh;
  scn.sample = s;
  scn.t_final = 1e9;  // one giant step lands on the steady state
  scn.steps = 1;
  scn.pin_rigid_motions = true;
  BoundaryCondition drained;  // p = 0 everywhere, no displacement constraint
  drained.p = BoundaryCondition::constant(0.0);
  BoundaryCondition left = drained, right = drained;
  left.traction = [](const Eigen::Vector2d&, double) { return Eigen::Vector2d(-1.0, 0.0); };
  right.traction = [](const Eigen::Vector2d&, double) { return Eigen::Vector2d(1.0, 0.0); };
  scn.bcs[boundary_tag::bottom] = drained;
  scn.bcs[boundary_tag::top] = drained;
  scn.bcs[boundary_tag::left] = left;
  scn.bcs[boundary_tag::right] = right;

  const BiotSolver solver(scn);
  const FieldSolution last = solver.solve_transient().back();
  const TaylorHoodSpace& space = solver.space();

  // Uniaxial tension sigma_11 = 1: trace = 1/(2(mu+lambda)),
  // eps_11 - eps_22 = 1/(2 mu); displacement is exactly linear.
  const double tr = 1.0 / (2.0 * (s.mu + s.lambda));
  const double e11 = 0.5 * (tr + 1.0 / (2.0 * s.mu));
  const double e22 = 0.5 * (tr - 1.0 / (2.0 * s.mu));
  int left_mid = -1, right_mid = -1, bottom_mid = -1, top_mid = -1;
  for (int n = 0; n < space.node_count(); ++n) {
    const Eigen::Vector2d x = space.node_position(n);
    if (x.isApprox(Eigen::Vector2d(0.0, 0.5))) left_mid = n;
    if (x.isApprox(Eigen::Vector2d(1.0, 0.5))) right_mid = n;
    if (x.isApprox(Eigen::Vector2d(0.5, 0.0))) bottom_mid = n;
    if (x.isApprox(Eigen::Vector2d(0.5, 1.0))) top_mid = n;
  }
  REQUIRE(left_mid >= 0);
  REQUIRE(right_mid >= 0);
  CHECK(last.u(2 * right_mid) - last.u(2 * left_mid) == doctest::Approx(e11).epsilon(1e-6));
  CHECK(last.u(2 * top_mid + 1) - last.u(2 * bottom_mid + 1) == doctest::Approx(e22).epsilon(1e-6));
}

TEST_CASE("energy diagnostic: zero data, positivity, and quadratic data scaling") {
  auto mesh = std::make_shared<TriMesh>(make_unit_square_crisscross(4));
  const PoroelasticSample s = mms_reference_sample();

  BiotScenario zero = clamped_drained_square(mesh, s, 0.5, 5);
  const BiotSolver zero_solver(zero);
  const EnergyReport zero_report = zero_solver.energy_diagnostic(zero_solver.solve_transient());
  CHECK(zero_report.energy_lhs == 0.0);
  CHECK(zero_report.data_rhs == 0.0);

  BiotScenario loaded = clamped_drained_square(mesh, s, 0.5, 5);
  loaded.body_force = [](const Eigen::Vector2d&, double) { return Eigen::Vector2d(0.0, -0.5); };
  loaded.fluid_source = [](const Eigen::Vector2d& x, double) {
    return 0.3 * std::sin(M_PI * x.x()) * std::sin(M_PI * x.y());
  };
  const BiotSolver solver(loaded);
  const EnergyReport full = solver.energy_diagnostic(solver.solve_transient());
  CHECK(full.energy_lhs > 0.0);
  CHECK(full.data_rhs > 0.0);
  CHECK(full.data_norm_finite);

  BiotScenario halved = loaded;
  halved.body_force = [](const Eigen::Vector2d&, double) { return Eigen::Vector2d(0.0, -0.25); };
  halved.fluid_source = [](const Eigen::Vector2d& x, double) {
    return 0.15 * std::sin(M_PI * x.x()) * std::sin(M_PI * x.y());
  };
  const BiotSolver half_solver(halved);
  const EnergyReport half = half_solver.energy_diagnostic(half_solver.solve_transient());
  CHECK(full.energy_lhs / half.energy_lhs == doctest::Approx(4.0).epsilon(1e-8));
  CHECK(full.data_rhs / half.data_rhs == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("energy diagnostic flags the Dirac data norm as non-finite") {
  auto mesh = std::make_shared<TriMesh>(make_unit_square_crisscross(4));
  BiotScenario scn = make_injection_scenario(mesh);
  scn.sample = mms_reference_sample();
  const BiotSolver solver(scn);
  const EnergyReport report = solver.energy_diagnostic(solver.solve_transient());
  CHECK_FALSE(report.data_norm_finite);
  CHECK(std::isinf(report.data_rhs));
  CHECK(report.energy_lhs > 0.0);
}
