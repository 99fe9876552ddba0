#pragma once

#include <vector>

#include "porochaos/multi_index.hpp"

namespace porochaos {

enum class TruncationRule { TotalDegree, PartialDegree, Explicit };

/// A finite, downward-closed set of multi-indices in canonical
/// (graded-lexicographic) order.
class TruncationSet {
public:
  /// All k with |k|_1 <= p; cardinality binomial(dim+p, p).
  static TruncationSet total_degree(int dim, int p);

  /// All k with |k|_inf <= p; cardinality (p+1)^dim.
  static TruncationSet partial_degree(int dim, int p);

  /// Explicit member list (e.g. the admissible set of a sparse grid).
  /// Sorts, deduplicates, and verifies downward closure.
  static TruncationSet from_indices(int dim, std::vector<MultiIndex> indices);

  int dimension() const { return dim_; }
  TruncationRule rule() const { return rule_; }
  int size() const { return static_cast<int>(members_.size()); }
  const MultiIndex& operator[](int m) const { return members_[static_cast<std::size_t>(m)]; }
  const std::vector<MultiIndex>& indices() const { return members_; }

  bool contains(const MultiIndex& k) const { return index_of(k) >= 0; }
  /// Position in canonical order, or -1 if absent.
  int index_of(const MultiIndex& k) const;

  bool operator==(const TruncationSet& other) const {
    return dim_ == other.dim_ && members_ == other.members_;
  }

private:
  TruncationSet(int dim, TruncationRule rule, std::vector<MultiIndex> members);

  int dim_ = 0;
  TruncationRule rule_ = TruncationRule::Explicit;
  std::vector<MultiIndex> members_;
};

}  // namespace porochaos
