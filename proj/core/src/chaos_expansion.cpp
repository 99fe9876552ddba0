#include "porochaos/chaos_expansion.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "porochaos/legendre.hpp"

namespace porochaos {

ChaosExpansion::ChaosExpansion(TruncationSet basis, Eigen::MatrixXd coeffs)
    : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
  if (coeffs_.cols() != basis_.size())
    throw std::invalid_argument("ChaosExpansion: one coefficient column per basis index required");
}

ChaosExpansion ChaosExpansion::scalar(TruncationSet basis, const Eigen::VectorXd& modes) {
  Eigen::MatrixXd coeffs(1, modes.size());
  coeffs.row(0) = modes.transpose();
  return ChaosExpansion(std::move(basis), std::move(coeffs));
}

ChaosExpansion ChaosExpansion::from_modes(
    int dim, const std::vector<std::pair<MultiIndex, Eigen::VectorXd>>& modes) {
  std::set<MultiIndex, GradedLexLess> closure;
  closure.insert(MultiIndex::zeros(dim));
  std::vector<MultiIndex> work;
  for (const auto& [k, v] : modes) {
    (void)v;
    work.push_back(k);
  }
  while (!work.empty()) {
    MultiIndex k = work.back();
    work.pop_back();
    if (!closure.insert(k).second) continue;
    for (int i = 0; i < dim; ++i)
      if (k[i] > 0) work.push_back(k.with_decrement(i));
  }
  TruncationSet basis = TruncationSet::from_indices(
      dim, std::vector<MultiIndex>(closure.begin(), closure.end()));

  Eigen::Index payload = modes.empty() ? 1 : modes.front().second.size();
  Eigen::MatrixXd coeffs = Eigen::MatrixXd::Zero(payload, basis.size());
  for (const auto& [k, v] : modes) {
    if (v.size() != payload)
      throw std::invalid_argument("ChaosExpansion: mixed coefficient lengths");
    coeffs.col(basis.index_of(k)) = v;
  }
  return ChaosExpansion(std::move(basis), std::move(coeffs));
}

Eigen::VectorXd ChaosExpansion::coefficient(const MultiIndex& k) const {
  const int m = basis_.index_of(k);
  if (m < 0) return Eigen::VectorXd::Zero(payload_size());
  return coeffs_.col(m);
}

Eigen::VectorXd ChaosExpansion::variance() const {
  Eigen::VectorXd var = Eigen::VectorXd::Zero(payload_size());
  for (int m = 0; m < mode_count(); ++m) {
    if (basis_[m].is_zero()) continue;
    var += coeffs_.col(m).cwiseAbs2();
  }
  return var;
}

Eigen::VectorXd ChaosExpansion::covariance(const ChaosExpansion& a, const ChaosExpansion& b) {
  if (!(a.basis_ == b.basis_))
    throw std::invalid_argument("covariance: expansions must share basis and truncation set");
  if (a.payload_size() != b.payload_size())
    throw std::invalid_argument("covariance: payload lengths differ");
  Eigen::VectorXd cov = Eigen::VectorXd::Zero(a.payload_size());
  for (int m = 0; m < a.mode_count(); ++m) {
    if (a.basis_[m].is_zero()) continue;
    cov += a.coeffs_.col(m).cwiseProduct(b.coeffs_.col(m));
  }
  return cov;
}

Eigen::VectorXd ChaosExpansion::sobol_partial_variance(int i, SobolKind kind) const {
  if (i < 0 || i >= dimension())
    throw std::out_of_range("sobol_partial_variance: dimension index out of range");
  Eigen::VectorXd var = Eigen::VectorXd::Zero(payload_size());
  for (int m = 0; m < mode_count(); ++m) {
    const MultiIndex& k = basis_[m];
    if (k[i] == 0) continue;
    if (kind == SobolKind::FirstOrder && k.total_degree() != k[i]) continue;
    var += coeffs_.col(m).cwiseAbs2();
  }
  return var;
}

Eigen::VectorXd ChaosExpansion::evaluate(std::span<const double> xi) const {
  if (static_cast<int>(xi.size()) != dimension())
    throw std::invalid_argument("evaluate: point dimension mismatch");
  Eigen::VectorXd out = Eigen::VectorXd::Zero(payload_size());
  for (int m = 0; m < mode_count(); ++m) out += eval_basis(basis_[m], xi) * coeffs_.col(m);
  return out;
}

double ChaosExpansion::evaluate_scalar(std::span<const double> xi) const {
  if (payload_size() != 1)
    throw std::logic_error("evaluate_scalar: expansion carries a field payload");
  return evaluate(xi)(0);
}

void ChaosExpansion::write_csv(const std::filesystem::path& path) const {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("write_csv: cannot open " + path.string());
  os << "# basis=" << basis_convention() << " dim=" << dimension()
     << " payload=" << payload_size() << "\n";
  for (int i = 0; i < dimension(); ++i) os << "k" << (i + 1) << ",";
  for (Eigen::Index r = 0; r < payload_size(); ++r)
    os << "c" << r << (r + 1 < payload_size() ? "," : "\n");
  char buf[40];
  for (int m = 0; m < mode_count(); ++m) {
    const MultiIndex& k = basis_[m];
    for (int i = 0; i < dimension(); ++i) os << k[i] << ",";
    for (Eigen::Index r = 0; r < payload_size(); ++r) {
      std::snprintf(buf, sizeof buf, "%.17g", coeffs_(r, m));
      os << buf << (r + 1 < payload_size() ? "," : "\n");
    }
  }
}

ChaosExpansion ChaosExpansion::read_csv(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("read_csv: cannot open " + path.string());
  std::string line;
  if (!std::getline(is, line) || line.rfind("# basis=", 0) != 0)
    throw std::runtime_error("read_csv: missing header in " + path.string());
  int dim = 0;
  Eigen::Index payload = 0;
  {
    std::istringstream hs(line);
    std::string tok;
    while (hs >> tok) {
      if (tok.rfind("dim=", 0) == 0) dim = std::stoi(tok.substr(4));
      if (tok.rfind("payload=", 0) == 0) payload = std::stol(tok.substr(8));
    }
  }
  if (dim <= 0 || payload <= 0) throw std::runtime_error("read_csv: bad header in " + path.string());
  std::getline(is, line);  // column names
  std::vector<std::pair<MultiIndex, Eigen::VectorXd>> modes;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string cell;
    std::vector<int> degrees(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) {
      std::getline(ls, cell, ',');
      degrees[static_cast<std::size_t>(i)] = std::stoi(cell);
    }
    Eigen::VectorXd v(payload);
    for (Eigen::Index r = 0; r < payload; ++r) {
      std::getline(ls, cell, ',');
      v(r) = std::strtod(cell.c_str(), nullptr);
    }
    modes.emplace_back(MultiIndex(std::move(degrees)), std::move(v));
  }
  return from_modes(dim, modes);
}

}  // namespace porochaos
