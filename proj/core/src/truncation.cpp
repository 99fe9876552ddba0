#include "porochaos/truncation.hpp"

#include <algorithm>
#include <stdexcept>

namespace porochaos {

namespace {

void enumerate_total(int dim, int budget, std::vector<int>& work,
                     std::vector<MultiIndex>& out) {
  if (static_cast<int>(work.size()) == dim) {
    out.emplace_back(work);
    return;
  }
  for (int d = 0; d <= budget; ++d) {
    work.push_back(d);
    enumerate_total(dim, budget - d, work, out);
    work.pop_back();
  }
}

}  // namespace

TruncationSet::TruncationSet(int dim, TruncationRule rule, std::vector<MultiIndex> members)
    : dim_(dim), rule_(rule), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end(), GradedLexLess{});
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty() || !members_.front().is_zero())
    throw std::invalid_argument("TruncationSet: the zero multi-index must be present");
  for (const MultiIndex& k : members_) {
    if (k.dim() != dim_) throw std::invalid_argument("TruncationSet: mixed dimensions");
    for (int i = 0; i < dim_; ++i) {
      if (k[i] > 0 && index_of(k.with_decrement(i)) < 0)
        throw std::invalid_argument("TruncationSet: set is not downward-closed at " + k.to_string());
    }
  }
}

TruncationSet TruncationSet::total_degree(int dim, int p) {
  if (dim < 1 || p < 0) throw std::invalid_argument("total_degree: dim >= 1 and p >= 0 required");
  std::vector<MultiIndex> members;
  std::vector<int> work;
  enumerate_total(dim, p, work, members);
  return TruncationSet(dim, TruncationRule::TotalDegree, std::move(members));
}

TruncationSet TruncationSet::partial_degree(int dim, int p) {
  if (dim < 1 || p < 0) throw std::invalid_argument("partial_degree: dim >= 1 and p >= 0 required");
  std::vector<MultiIndex> members;
  std::vector<int> work(static_cast<std::size_t>(dim), 0);
  while (true) {
    members.emplace_back(work);
    int i = dim - 1;
    while (i >= 0 && work[static_cast<std::size_t>(i)] == p) {
      work[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++work[static_cast<std::size_t>(i)];
  }
  return TruncationSet(dim, TruncationRule::PartialDegree, std::move(members));
}

TruncationSet TruncationSet::from_indices(int dim, std::vector<MultiIndex> indices) {
  return TruncationSet(dim, TruncationRule::Explicit, std::move(indices));
}

int TruncationSet::index_of(const MultiIndex& k) const {
  const auto it = std::lower_bound(members_.begin(), members_.end(), k, GradedLexLess{});
  if (it == members_.end() || !(*it == k)) return -1;
  return static_cast<int>(it - members_.begin());
}

}  // namespace porochaos
