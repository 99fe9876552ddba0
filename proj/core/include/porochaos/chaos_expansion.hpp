#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <span>
#include <utility>
#include <vector>

#include "porochaos/truncation.hpp"

namespace porochaos {

enum class SobolKind { FirstOrder, TotalOrder };

/// Polynomial chaos expansion over the orthonormal multivariate Legendre basis
/// (uniform density 2^-N on [-1,1]^N). Coefficients are payload vectors of a
/// shared length; a scalar expansion is the payload_size == 1 case, so the same
/// moment code serves coefficient-transform tests and full field campaigns.
class ChaosExpansion {
public:
  /// The trivial zero constant in one dimension.
  ChaosExpansion() : ChaosExpansion(TruncationSet::total_degree(1, 0), Eigen::MatrixXd::Zero(1, 1)) {}

  /// coeffs: payload_size x mode_count, column m belonging to basis[m].
  ChaosExpansion(TruncationSet basis, Eigen::MatrixXd coeffs);

  /// Scalar expansion from per-mode values in canonical order.
  static ChaosExpansion scalar(TruncationSet basis, const Eigen::VectorXd& modes);

  /// From an explicit mode map; missing indices (and the zero index) are
  /// filled with zero coefficients after completing to a downward-closed set.
  static ChaosExpansion from_modes(int dim,
                                   const std::vector<std::pair<MultiIndex, Eigen::VectorXd>>& modes);

  int dimension() const { return basis_.dimension(); }
  Eigen::Index payload_size() const { return coeffs_.rows(); }
  int mode_count() const { return basis_.size(); }
  const TruncationSet& basis() const { return basis_; }
  const Eigen::MatrixXd& coefficients() const { return coeffs_; }
  static const char* basis_convention() { return "normalized-legendre-uniform"; }

  /// Coefficient of mode k (zero vector if k is not in the truncation set).
  Eigen::VectorXd coefficient(const MultiIndex& k) const;

  /// Mean = zero-index mode.
  Eigen::VectorXd mean() const { return coeffs_.col(0); }

  /// Var = sum of squared non-zero-index modes, componentwise.
  Eigen::VectorXd variance() const;

  /// Cov(X, Y) = sum_{k != 0} X_k Y_k componentwise; requires identical bases.
  static Eigen::VectorXd covariance(const ChaosExpansion& a, const ChaosExpansion& b);

  /// Partial variance attributable to dimension i (0-based).
  /// FirstOrder: modes with k_i > 0 and k_j = 0 for j != i.
  /// TotalOrder: all modes with k_i > 0.
  Eigen::VectorXd sobol_partial_variance(int i, SobolKind kind) const;

  Eigen::VectorXd evaluate(std::span<const double> xi) const;
  double evaluate_scalar(std::span<const double> xi) const;

  double mean_scalar() const { return mean()(0); }
  double variance_scalar() const { return variance()(0); }

  /// Mode table CSV: one row per multi-index, degrees then coefficients,
  /// printed with 17 significant digits so re-import is bitwise faithful.
  void write_csv(const std::filesystem::path& path) const;
  static ChaosExpansion read_csv(const std::filesystem::path& path);

private:
  TruncationSet basis_;
  Eigen::MatrixXd coeffs_;
};

}  // namespace porochaos
