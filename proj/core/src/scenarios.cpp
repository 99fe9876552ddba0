#include "porochaos/scenarios.hpp"

namespace porochaos {

namespace {
const ScalarFieldT kZero = BoundaryCondition::constant(0.0);
}

BiotScenario make_injection_scenario(std::shared_ptr<const TriMesh> mesh,
                                     const Eigen::Vector2d& x0, double magnitude, double t_final,
                                     int steps) {
  BiotScenario scn;
  scn.mesh = std::move(mesh);
  scn.t_final = t_final;
  scn.steps = steps;
  scn.point_source = PointSource{x0, magnitude};

  // u . tau = 0 with traction-free normal component; on axis-aligned edges
  // with p = 0 this reproduces the zero normal-derivative condition.
  BoundaryCondition horizontal;  // bottom/top: tangent is e1
  horizontal.u1 = kZero;
  horizontal.p = kZero;
  BoundaryCondition vertical;  // left/right: tangent is e2
  vertical.u2 = kZero;
  vertical.p = kZero;
  scn.bcs[boundary_tag::bottom] = horizontal;
  scn.bcs[boundary_tag::top] = horizontal;
  scn.bcs[boundary_tag::left] = vertical;
  scn.bcs[boundary_tag::right] = vertical;
  return scn;
}

BiotScenario make_footing_scenario(std::shared_ptr<const TriMesh> mesh,
                                   const Eigen::Vector2d& traction, double t_final, int steps) {
  BiotScenario scn;
  scn.mesh = std::move(mesh);
  scn.t_final = t_final;
  scn.steps = steps;

  BoundaryCondition clamped;
  clamped.u1 = kZero;
  clamped.u2 = kZero;
  clamped.p = kZero;
  scn.bcs[boundary_tag::bottom] = clamped;
  scn.bcs[boundary_tag::left] = clamped;
  scn.bcs[boundary_tag::right] = clamped;

  BoundaryCondition top_free;
  top_free.p = kZero;
  scn.bcs[boundary_tag::top] = top_free;

  BoundaryCondition loaded;
  loaded.p = kZero;
  loaded.traction = [traction](const Eigen::Vector2d&, double) { return traction; };
  scn.bcs[boundary_tag::load] = loaded;
  return scn;
}

BiotScenario make_two_well_scenario(std::shared_ptr<const TriMesh> mesh, double p_hole1,
                                    double p_hole2, double t_final, int steps) {
  BiotScenario scn;
  scn.mesh = std::move(mesh);
  scn.t_final = t_final;
  scn.steps = steps;

  BoundaryCondition base;
  base.u1 = kZero;
  base.u2 = kZero;  // clamped, no flux
  scn.bcs[boundary_tag::bottom] = base;

  BoundaryCondition top;  // traction-free, impermeable: all natural
  scn.bcs[boundary_tag::top] = top;

  BoundaryCondition roller;  // u.n = 0, tangential traction free, no flux
  roller.u1 = kZero;
  scn.bcs[boundary_tag::left] = roller;
  scn.bcs[boundary_tag::right] = roller;

  BoundaryCondition well1;
  well1.u1 = kZero;
  well1.u2 = kZero;
  well1.p = BoundaryCondition::constant(p_hole1);
  scn.bcs[boundary_tag::hole1] = well1;

  BoundaryCondition well2 = well1;
  well2.p = BoundaryCondition::constant(p_hole2);
  scn.bcs[boundary_tag::hole2] = well2;
  return scn;
}

}  // namespace porochaos
