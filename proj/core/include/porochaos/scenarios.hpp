#pragma once

#include <memory>

#include "porochaos/biot.hpp"

namespace porochaos {

/// Point injection on the unit square: stationary Dirac fluid source, zero
/// tangential displacement and traction-free normal component on the whole
/// boundary, free drainage (p = 0) everywhere. Units kPa-m-s.
BiotScenario make_injection_scenario(std::shared_ptr<const TriMesh> mesh,
                                     const Eigen::Vector2d& x0 = {0.25, 0.25},
                                     double magnitude = 10.0, double t_final = 1.0,
                                     int steps = 10);

/// Footing compression of the unit square: downward traction on the loaded
/// segment of the top edge (tag boundary_tag::load), traction-free on the
/// rest of the top, clamped base and sides, drained everywhere. kPa-m-s.
BiotScenario make_footing_scenario(std::shared_ptr<const TriMesh> mesh,
                                   const Eigen::Vector2d& traction = {0.0, -5.0},
                                   double t_final = 0.2, int steps = 2);

/// Injection-extraction between two wells in a width x height strip:
/// prescribed pressures on the hole boundaries (clamped there as well),
/// clamped base, traction-free impermeable top, rollers with no flux on the
/// lateral sides. Consistent units GPa-km-day; 100 kPa = 1e-4 GPa.
BiotScenario make_two_well_scenario(std::shared_ptr<const TriMesh> mesh, double p_hole1 = -1.0e-4,
                                    double p_hole2 = 1.0e-4, double t_final = 1.0, int steps = 10);

}  // namespace porochaos
