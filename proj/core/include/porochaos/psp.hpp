#pragma once

#include <Eigen/Dense>
#include <vector>

#include "porochaos/chaos_expansion.hpp"
#include "porochaos/sparse_grid.hpp"

namespace porochaos {

/// Model outputs collected at sparse grid nodes; every node must receive
/// exactly one payload and all payloads share one length.
class ModelEvaluations {
public:
  ModelEvaluations(int node_count, Eigen::Index payload_size)
      : values_(Eigen::MatrixXd::Zero(payload_size, node_count)),
        present_(static_cast<std::size_t>(node_count), false) {}

  /// payload_size x node_count matrix with every column populated.
  static ModelEvaluations from_matrix(Eigen::MatrixXd values);

  void set(int node, const Eigen::VectorXd& payload);
  void set_scalar(int node, double payload);

  int node_count() const { return static_cast<int>(values_.cols()); }
  Eigen::Index payload_size() const { return values_.rows(); }
  bool complete() const { return first_missing() < 0; }
  int first_missing() const;
  const Eigen::MatrixXd& values() const { return values_; }

private:
  Eigen::MatrixXd values_;
  std::vector<bool> present_;
};

/// Sparse pseudo-spectral projection: every constituent tensor rule projects
/// onto its cap rectangle with its own full-tensor quadrature, and the
/// sub-projections are combined with the Smolyak coefficients in canonical
/// rule order. The result is indexed by the grid's admissible set K(level)
/// and is exact on span{phi_k : k in K(level)}.
ChaosExpansion psp_project(const SparseGrid& grid, const ModelEvaluations& evals);

/// Convenience overload for scalar payloads given as one value per node.
ChaosExpansion psp_project(const SparseGrid& grid, const Eigen::VectorXd& values);

}  // namespace porochaos
