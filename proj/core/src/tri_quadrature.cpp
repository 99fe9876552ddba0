#include "porochaos/tri_quadrature.hpp"

#include <cmath>

namespace porochaos {

const TriQuadRule& tri_rule_degree2() {
  static const TriQuadRule rule = [] {
    TriQuadRule r;
    const double w = 1.0 / 3.0;
    r.points = {{{0.5, 0.5, 0.0}, w}, {{0.0, 0.5, 0.5}, w}, {{0.5, 0.0, 0.5}, w}};
    return r;
  }();
  return rule;
}

const TriQuadRule& tri_rule_degree6() {
  static const TriQuadRule rule = [] {
    TriQuadRule r;
    // Dunavant order-6 rule: two symmetric 3-point orbits and one 6-point orbit.
    const double w1 = 0.050844906370207;
    const double a1 = 0.873821971016996, b1 = 0.063089014491502;
    const double w2 = 0.116786275726379;
    const double a2 = 0.501426509658179, b2 = 0.249286745170910;
    const double w3 = 0.082851075618374;
    const double a3 = 0.636502499121399, b3 = 0.310352451033785, c3 = 0.053145049844816;
    auto orbit3 = [&](double a, double b, double w) {
      r.points.push_back({{a, b, b}, w});
      r.points.push_back({{b, a, b}, w});
      r.points.push_back({{b, b, a}, w});
    };
    orbit3(a1, b1, w1);
    orbit3(a2, b2, w2);
    const std::array<std::array<double, 3>, 6> perms = {{{a3, b3, c3},
                                                         {a3, c3, b3},
                                                         {b3, a3, c3},
                                                         {b3, c3, a3},
                                                         {c3, a3, b3},
                                                         {c3, b3, a3}}};
    for (const auto& p : perms) r.points.push_back({p, w3});
    return r;
  }();
  return rule;
}

const EdgeQuadRule& edge_rule() {
  static const EdgeQuadRule rule = [] {
    EdgeQuadRule r;
    const double s = std::sqrt(0.6);
    r.points = {0.5 * (1.0 - s), 0.5, 0.5 * (1.0 + s)};
    r.weights = {5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};
    return r;
  }();
  return rule;
}

}  // namespace porochaos
