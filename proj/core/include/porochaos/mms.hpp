#pragma once

#include "porochaos/biot.hpp"

namespace porochaos {

/// A manufactured solution together with the body force and fluid source
/// obtained by substituting it into the strong form.
struct ManufacturedCase {
  ScalarFieldT u1, u2, p;
  VectorFieldT body_force;
  ScalarFieldT fluid_source;
};

/// Smooth trigonometric solution, linear in time (so the implicit Euler
/// step is exact and spatial orders are clean):
///   u = t (sin(pi x) sin(pi y), sin(2 pi x) sin(pi y)),
///   p = t sin(pi x) sin(2 pi y).
ManufacturedCase mms_trig(const PoroelasticSample& s);

/// Solution polynomial in space (u in P2, p in P1) with time factor
/// t^time_power; exactly representable by the discrete spaces, so the
/// solver must reproduce it to rounding for time_power = 1, while
/// time_power = 2 isolates the order-one implicit Euler error.
ManufacturedCase mms_poly_space(const PoroelasticSample& s, int time_power);

/// Dirichlet-everywhere scenario for a manufactured case, with initial
/// fields interpolated from the exact solution at t = 0.
BiotScenario make_mms_scenario(std::shared_ptr<const TriMesh> mesh, const PoroelasticSample& sample,
                               const ManufacturedCase& mms, double t_final, int steps);

struct MmsErrors {
  double u_l2 = 0.0;
  double p_l2 = 0.0;
};

/// L2(D) errors of a discrete state against the exact fields at state.time.
MmsErrors mms_errors(const TaylorHoodSpace& space, const ManufacturedCase& mms,
                     const FieldSolution& state);

/// Coefficient set used by the verification harnesses.
PoroelasticSample mms_reference_sample();

}  // namespace porochaos
