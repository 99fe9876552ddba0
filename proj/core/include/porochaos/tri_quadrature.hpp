#pragma once

#include <array>
#include <vector>

namespace porochaos {

/// Quadrature rule on the reference triangle in barycentric coordinates;
/// weights sum to 1 and scale with the physical triangle area.
struct TriQuadRule {
  struct Point {
    std::array<double, 3> bary;
    double weight;
  };
  std::vector<Point> points;
};

/// 3-point midpoint rule, exact to degree 2.
const TriQuadRule& tri_rule_degree2();

/// 12-point rule, exact to degree 6; used for all element integrals so that
/// polynomial stiffness/mass integrands and smooth data are both covered.
const TriQuadRule& tri_rule_degree6();

/// Gauss rule on [0,1] for edge integrals (3 points, exact to degree 5).
struct EdgeQuadRule {
  std::vector<double> points;
  std::vector<double> weights;  // sum to 1, scale with edge length
};
const EdgeQuadRule& edge_rule();

}  // namespace porochaos
