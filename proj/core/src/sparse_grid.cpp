#include "porochaos/sparse_grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <stdexcept>

#include "porochaos/legendre.hpp"

namespace porochaos {

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void enumerate_levels(int dim, int budget, std::vector<int>& work,
                      std::vector<std::vector<int>>& out) {
  if (static_cast<int>(work.size()) == dim) {
    out.push_back(work);
    return;
  }
  for (int l = 0; l <= budget; ++l) {
    work.push_back(l);
    enumerate_levels(dim, budget - l, work, out);
    work.pop_back();
  }
}

/// 1D quadrature level needed to carry degree k without aliasing:
/// smallest i with degree_cap(i) >= k.
int level_of_degree(int k) {
  int i = 0;
  while (SparseGrid::degree_cap(i) < k) ++i;
  return i;
}

void enumerate_admissible(int dim, int budget, std::vector<int>& work,
                          std::vector<MultiIndex>& out) {
  if (static_cast<int>(work.size()) == dim) {
    out.emplace_back(work);
    return;
  }
  for (int k = 0;; ++k) {
    const int cost = level_of_degree(k);
    if (cost > budget) break;
    work.push_back(k);
    enumerate_admissible(dim, budget - cost, work, out);
    work.pop_back();
  }
}

}  // namespace

double discrete_orthonormality(const TensorRule& rule, const MultiIndex& k, const MultiIndex& l) {
  const int dim = static_cast<int>(rule.sizes.size());
  if (k.dim() != dim || l.dim() != dim)
    throw std::invalid_argument("discrete_orthonormality: index dimension mismatch");
  // The tensor inner product factorizes over dimensions.
  double prod = 1.0;
  for (int j = 0; j < dim; ++j) {
    double s = 0.0;
    const auto& xs = rule.nodes_1d[static_cast<std::size_t>(j)];
    const auto& ws = rule.weights_1d[static_cast<std::size_t>(j)];
    for (std::size_t q = 0; q < xs.size(); ++q)
      s += ws[q] * legendre_1d(k[j], xs[q]) * legendre_1d(l[j], xs[q]);
    prod *= s;
  }
  return prod;
}

SparseGrid SparseGrid::build(int dim, int level) {
  if (dim < 1 || level < 0) throw std::invalid_argument("SparseGrid: dim >= 1 and level >= 0 required");
  SparseGrid grid;
  grid.dim_ = dim;
  grid.level_ = level;

  std::vector<std::vector<int>> level_sets;
  {
    std::vector<int> work;
    enumerate_levels(dim, level, work, level_sets);
  }
  std::sort(level_sets.begin(), level_sets.end());

  std::vector<Rule1D> rules_1d(static_cast<std::size_t>(level) + 1);
  for (int l = 0; l <= level; ++l) rules_1d[static_cast<std::size_t>(l)] = cc_rule(l);

  // Unified nodes keyed by the per-dimension reduced cosine fractions.
  std::map<std::vector<std::pair<int, int>>, int> node_ids;
  std::vector<std::vector<std::pair<int, int>>> node_keys;

  for (const std::vector<int>& levels : level_sets) {
    const int deficit = level - std::accumulate(levels.begin(), levels.end(), 0);
    if (deficit > dim - 1) continue;  // Smolyak coefficient vanishes
    const int coeff = static_cast<int>(((deficit % 2) ? -1 : 1) * binomial(dim - 1, deficit));

    TensorRule rule;
    rule.levels = levels;
    rule.coefficient = coeff;
    rule.sizes.resize(static_cast<std::size_t>(dim));
    for (int j = 0; j < dim; ++j) {
      const Rule1D& r = rules_1d[static_cast<std::size_t>(levels[static_cast<std::size_t>(j)])];
      rule.degree_caps.push_back(degree_cap(r.level));
      rule.nodes_1d.push_back(r.nodes);
      rule.weights_1d.push_back(r.weights);
      rule.sizes[static_cast<std::size_t>(j)] = r.count();
    }

    const long long local = rule.local_count();
    rule.unified_ids.resize(static_cast<std::size_t>(local));
    std::vector<int> idx(static_cast<std::size_t>(dim), 0);
    for (long long q = 0; q < local; ++q) {
      std::vector<std::pair<int, int>> key(static_cast<std::size_t>(dim));
      for (int j = 0; j < dim; ++j) {
        const int lvl = rule.levels[static_cast<std::size_t>(j)];
        const int m = (lvl == 0) ? 0 : (1 << lvl);
        // ascending node i corresponds to cosine index m - i
        key[static_cast<std::size_t>(j)] =
            cc_node_fraction(m - idx[static_cast<std::size_t>(j)], lvl);
      }
      auto [it, inserted] = node_ids.try_emplace(key, static_cast<int>(node_keys.size()));
      if (inserted) node_keys.push_back(key);
      rule.unified_ids[static_cast<std::size_t>(q)] = it->second;
      for (int j = dim - 1; j >= 0; --j) {
        if (++idx[static_cast<std::size_t>(j)] < rule.sizes[static_cast<std::size_t>(j)]) break;
        idx[static_cast<std::size_t>(j)] = 0;
      }
    }
    grid.rules_.push_back(std::move(rule));
  }

  grid.nodes_.resize(static_cast<Eigen::Index>(node_keys.size()), dim);
  for (std::size_t q = 0; q < node_keys.size(); ++q)
    for (int j = 0; j < dim; ++j) {
      const auto [num, den] = node_keys[q][static_cast<std::size_t>(j)];
      grid.nodes_(static_cast<Eigen::Index>(q), j) = cc_node_from_fraction(num, den);
    }

  {
    std::vector<MultiIndex> admissible;
    std::vector<int> work;
    enumerate_admissible(dim, level, work, admissible);
    grid.admissible_ = TruncationSet::from_indices(dim, std::move(admissible));
  }

  // No-internal-aliasing guarantee, checked constructively: within every
  // constituent rule the discrete inner product of admissible 1D factors is
  // the identity. Tensor products inherit this by factorization.
  for (const TensorRule& rule : grid.rules_) {
    for (int j = 0; j < dim; ++j) {
      const auto& xs = rule.nodes_1d[static_cast<std::size_t>(j)];
      const auto& ws = rule.weights_1d[static_cast<std::size_t>(j)];
      const int cap = rule.degree_caps[static_cast<std::size_t>(j)];
      for (int a = 0; a <= cap; ++a)
        for (int b = a; b <= cap; ++b) {
          double s = 0.0;
          for (std::size_t q = 0; q < xs.size(); ++q)
            s += ws[q] * legendre_1d(a, xs[q]) * legendre_1d(b, xs[q]);
          if (std::abs(s - (a == b ? 1.0 : 0.0)) > 1e-12)
            throw std::logic_error("SparseGrid: discrete orthonormality violated at 1D level " +
                                   std::to_string(rule.levels[static_cast<std::size_t>(j)]));
        }
    }
  }
  return grid;
}

Eigen::VectorXd SparseGrid::collapsed_weights() const {
  Eigen::VectorXd w = Eigen::VectorXd::Zero(node_count());
  for (const TensorRule& rule : rules_) {
    const long long local = rule.local_count();
    std::vector<int> idx(static_cast<std::size_t>(dim_), 0);
    for (long long q = 0; q < local; ++q) {
      double tw = 1.0;
      for (int j = 0; j < dim_; ++j)
        tw *= rule.weights_1d[static_cast<std::size_t>(j)][static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])];
      w(rule.unified_ids[static_cast<std::size_t>(q)]) += rule.coefficient * tw;
      for (int j = dim_ - 1; j >= 0; --j) {
        if (++idx[static_cast<std::size_t>(j)] < rule.sizes[static_cast<std::size_t>(j)]) break;
        idx[static_cast<std::size_t>(j)] = 0;
      }
    }
  }
  return w;
}

void SparseGrid::write_nodes_csv(const std::filesystem::path& path) const {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("write_nodes_csv: cannot open " + path.string());
  os << "node";
  for (int j = 0; j < dim_; ++j) os << ",xi" << (j + 1);
  os << "\n";
  char buf[40];
  for (int q = 0; q < node_count(); ++q) {
    os << q;
    for (int j = 0; j < dim_; ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", nodes_(q, j));
      os << "," << buf;
    }
    os << "\n";
  }
}

}  // namespace porochaos
