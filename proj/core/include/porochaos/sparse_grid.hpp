#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <vector>

#include "porochaos/clenshaw_curtis.hpp"
#include "porochaos/multi_index.hpp"
#include "porochaos/truncation.hpp"

namespace porochaos {

/// One fully tensorized constituent rule of a Smolyak combination, with its
/// signed combination coefficient, per-dimension 1D rules, the cap on the 1D
/// polynomial degree each direction may project onto without internal
/// aliasing, and the map from local (row-major) tensor nodes to unified grid
/// node indices.
struct TensorRule {
  std::vector<int> levels;
  int coefficient = 0;
  std::vector<int> degree_caps;
  std::vector<std::vector<double>> nodes_1d;
  std::vector<std::vector<double>> weights_1d;
  std::vector<int> sizes;
  std::vector<int> unified_ids;  // length prod(sizes), row-major (last dim fastest)

  long long local_count() const {
    long long n = 1;
    for (int s : sizes) n *= s;
    return n;
  }
};

/// Discrete inner product sum_q w_q phi_k(xi_q) phi_l(xi_q) over one tensor
/// rule. Equals delta_kl within 1e-12 when both indices respect the rule's
/// degree caps; larger degrees expose the aliasing boundary.
double discrete_orthonormality(const TensorRule& rule, const MultiIndex& k, const MultiIndex& l);

/// Isotropic Smolyak sparse grid built from nested Clenshaw-Curtis rules,
/// 1D levels i >= 0 selected by |i|_1 <= level. Nodes are deduplicated
/// exactly through their dyadic cosine fractions. The admissible multi-index
/// set K(level) is the union of the constituent rules' cap rectangles; each
/// rectangle passes the discrete-orthonormality test at build time.
class SparseGrid {
public:
  static SparseGrid build(int dim, int level);

  int dimension() const { return dim_; }
  int level() const { return level_; }
  int node_count() const { return static_cast<int>(nodes_.rows()); }

  /// node_count x dim, one row per unified node.
  const Eigen::MatrixXd& nodes() const { return nodes_; }

  /// Constituent rules with nonzero Smolyak coefficient, in canonical
  /// (lexicographic-by-levels) order.
  const std::vector<TensorRule>& tensor_rules() const { return rules_; }

  const TruncationSet& admissible_set() const { return admissible_; }

  /// 1D degree cap per level: p(0) = 0, p(i) = 2^(i-1). Products of two
  /// admissible factors have degree <= 2 p(i) = n(i) - 1, which the n(i)-node
  /// rule integrates exactly.
  static int degree_cap(int level1d) { return level1d == 0 ? 0 : 1 << (level1d - 1); }

  /// Collapsed per-node quadrature weights (plain sparse NISP weights):
  /// w_q = sum_rules coeff * tensor weight. Sum to 1; some entries negative.
  Eigen::VectorXd collapsed_weights() const;

  /// CSV export: node index then coordinates.
  void write_nodes_csv(const std::filesystem::path& path) const;

private:
  int dim_ = 0;
  int level_ = 0;
  Eigen::MatrixXd nodes_;
  std::vector<TensorRule> rules_;
  TruncationSet admissible_ = TruncationSet::total_degree(1, 0);
};

}  // namespace porochaos
