#include "porochaos/psp.hpp"

#include <stdexcept>
#include <string>

#include "porochaos/legendre.hpp"

namespace porochaos {

ModelEvaluations ModelEvaluations::from_matrix(Eigen::MatrixXd values) {
  ModelEvaluations evals(static_cast<int>(values.cols()), values.rows());
  evals.values_ = std::move(values);
  evals.present_.assign(evals.present_.size(), true);
  return evals;
}

void ModelEvaluations::set(int node, const Eigen::VectorXd& payload) {
  if (node < 0 || node >= node_count()) throw std::out_of_range("ModelEvaluations: node index");
  if (payload.size() != payload_size())
    throw std::invalid_argument("ModelEvaluations: payload length mismatch");
  values_.col(node) = payload;
  present_[static_cast<std::size_t>(node)] = true;
}

void ModelEvaluations::set_scalar(int node, double payload) {
  set(node, Eigen::VectorXd::Constant(1, payload));
}

int ModelEvaluations::first_missing() const {
  for (std::size_t q = 0; q < present_.size(); ++q)
    if (!present_[q]) return static_cast<int>(q);
  return -1;
}

ChaosExpansion psp_project(const SparseGrid& grid, const ModelEvaluations& evals) {
  if (evals.node_count() != grid.node_count())
    throw std::invalid_argument("psp_project: evaluation count differs from grid node count");
  if (!evals.complete())
    throw std::invalid_argument("psp_project: missing payload at node " +
                                std::to_string(evals.first_missing()));

  const int dim = grid.dimension();
  const TruncationSet& admissible = grid.admissible_set();
  const Eigen::MatrixXd& payload = evals.values();
  Eigen::MatrixXd coeffs = Eigen::MatrixXd::Zero(payload.rows(), admissible.size());

  std::vector<int> kidx(static_cast<std::size_t>(dim), 0);
  std::vector<int> qidx(static_cast<std::size_t>(dim), 0);

  for (const TensorRule& rule : grid.tensor_rules()) {
    // Per-dimension tables psi_a(x_q) for a <= cap.
    std::vector<Eigen::MatrixXd> basis_1d(static_cast<std::size_t>(dim));
    for (int j = 0; j < dim; ++j) {
      const auto& xs = rule.nodes_1d[static_cast<std::size_t>(j)];
      const int cap = rule.degree_caps[static_cast<std::size_t>(j)];
      Eigen::MatrixXd table(cap + 1, static_cast<Eigen::Index>(xs.size()));
      for (std::size_t q = 0; q < xs.size(); ++q)
        for (int a = 0; a <= cap; ++a) table(a, static_cast<Eigen::Index>(q)) = legendre_1d(a, xs[q]);
      basis_1d[static_cast<std::size_t>(j)] = std::move(table);
    }

    // Global mode column for each rectangle index, row-major.
    long long rect = 1;
    for (int j = 0; j < dim; ++j) rect *= rule.degree_caps[static_cast<std::size_t>(j)] + 1;
    std::vector<int> mode_col(static_cast<std::size_t>(rect));
    std::fill(kidx.begin(), kidx.end(), 0);
    for (long long m = 0; m < rect; ++m) {
      const int col = admissible.index_of(MultiIndex(kidx));
      if (col < 0)
        throw std::logic_error("psp_project: rectangle mode missing from admissible set");
      mode_col[static_cast<std::size_t>(m)] = col;
      for (int j = dim - 1; j >= 0; --j) {
        if (++kidx[static_cast<std::size_t>(j)] <= rule.degree_caps[static_cast<std::size_t>(j)]) break;
        kidx[static_cast<std::size_t>(j)] = 0;
      }
    }

    const long long local = rule.local_count();
    std::fill(qidx.begin(), qidx.end(), 0);
    for (long long q = 0; q < local; ++q) {
      double wq = 1.0;
      for (int j = 0; j < dim; ++j)
        wq *= rule.weights_1d[static_cast<std::size_t>(j)][static_cast<std::size_t>(qidx[static_cast<std::size_t>(j)])];
      const auto col = payload.col(rule.unified_ids[static_cast<std::size_t>(q)]);
      const double cw = rule.coefficient * wq;

      std::fill(kidx.begin(), kidx.end(), 0);
      for (long long m = 0; m < rect; ++m) {
        double phi = 1.0;
        for (int j = 0; j < dim; ++j)
          phi *= basis_1d[static_cast<std::size_t>(j)](kidx[static_cast<std::size_t>(j)],
                                                       qidx[static_cast<std::size_t>(j)]);
        coeffs.col(mode_col[static_cast<std::size_t>(m)]) += (cw * phi) * col;
        for (int j = dim - 1; j >= 0; --j) {
          if (++kidx[static_cast<std::size_t>(j)] <= rule.degree_caps[static_cast<std::size_t>(j)]) break;
          kidx[static_cast<std::size_t>(j)] = 0;
        }
      }
      for (int j = dim - 1; j >= 0; --j) {
        if (++qidx[static_cast<std::size_t>(j)] < rule.sizes[static_cast<std::size_t>(j)]) break;
        qidx[static_cast<std::size_t>(j)] = 0;
      }
    }
  }
  return ChaosExpansion(admissible, std::move(coeffs));
}

ChaosExpansion psp_project(const SparseGrid& grid, const Eigen::VectorXd& values) {
  Eigen::MatrixXd m(1, values.size());
  m.row(0) = values.transpose();
  return psp_project(grid, ModelEvaluations::from_matrix(std::move(m)));
}

}  // namespace porochaos
