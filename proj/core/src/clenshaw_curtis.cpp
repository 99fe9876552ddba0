#include "porochaos/clenshaw_curtis.hpp"

#include <cmath>
#include <stdexcept>

namespace porochaos {

int cc_node_count(int level) {
  if (level < 0) throw std::invalid_argument("cc_node_count: level >= 0 required");
  return level == 0 ? 1 : (1 << level) + 1;
}

std::pair<int, int> cc_node_fraction(int j, int level) {
  if (level == 0) return {1, 2};
  int num = j, den = 1 << level;
  while (num % 2 == 0 && den % 2 == 0 && den > 1) {
    num /= 2;
    den /= 2;
  }
  if (num == 0) den = 1;
  return {num, den};
}

double cc_node_from_fraction(int num, int den) {
  if (2 * num == den) return 0.0;
  if (2 * num < den) return std::cos(M_PI * (static_cast<double>(num) / static_cast<double>(den)));
  return -cc_node_from_fraction(den - num, den);
}

Rule1D cc_rule(int level) {
  if (level < 0) throw std::invalid_argument("cc_rule: level >= 0 required");
  Rule1D rule;
  rule.level = level;
  if (level == 0) {
    rule.nodes = {0.0};
    rule.weights = {1.0};
    return rule;
  }
  const int m = 1 << level;  // n - 1

  // Weights by cosine index j (node cos(pi j/m)): integrate the Chebyshev
  // interpolant against the density 1/2. Endpoint and Nyquist terms halved.
  std::vector<double> w(static_cast<std::size_t>(m) + 1);
  for (int j = 0; j <= m / 2; ++j) {
    double sum = 0.0;
    for (int k = 0; k <= m; k += 2) {
      const double gk = (k == 0 || k == m) ? 0.5 : 1.0;
      sum += gk * (2.0 / (1.0 - static_cast<double>(k) * k)) *
             std::cos(M_PI * static_cast<double>(j) * k / m);
    }
    const double gj = (j == 0 || j == m) ? 0.5 : 1.0;
    w[static_cast<std::size_t>(j)] = gj / m * sum;
  }
  for (int j = m / 2 + 1; j <= m; ++j) w[static_cast<std::size_t>(j)] = w[static_cast<std::size_t>(m - j)];

  rule.nodes.resize(static_cast<std::size_t>(m) + 1);
  rule.weights.resize(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) {
    const auto [num, den] = cc_node_fraction(m - i, level);
    rule.nodes[static_cast<std::size_t>(i)] = cc_node_from_fraction(num, den);
    rule.weights[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(m - i)];
  }
  return rule;
}

}  // namespace porochaos
