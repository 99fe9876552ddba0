#pragma once

#include <vector>

namespace porochaos {

/// Nested Clenshaw-Curtis rule on [-1,1], weights normalized to the uniform
/// density 1/2 (weights sum to 1). n(0) = 1 with the single node 0;
/// n(l) = 2^l + 1 for l >= 1 with nodes cos(pi j / 2^l).
struct Rule1D {
  int level = 0;
  std::vector<double> nodes;    // ascending
  std::vector<double> weights;  // same order, symmetric
  int count() const { return static_cast<int>(nodes.size()); }
};

Rule1D cc_rule(int level);

/// Number of nodes n(l) without building the rule.
int cc_node_count(int level);

/// Canonical node value cos(pi a / b) for a reduced dyadic fraction a/b in
/// [0,1]. Evaluating through the reduced fraction makes nesting exact: the
/// same abstract node yields bitwise-identical doubles at every level, and
/// mirrored fractions yield exactly negated values.
double cc_node_from_fraction(int num, int den);

/// Reduce j / 2^level to lowest terms. Level 0 maps to the center node 1/2.
std::pair<int, int> cc_node_fraction(int j, int level);

}  // namespace porochaos
