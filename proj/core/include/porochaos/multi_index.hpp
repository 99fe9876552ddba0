#pragma once

#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace porochaos {

/// A tuple of nonnegative polynomial degrees, one per stochastic dimension.
class MultiIndex {
public:
  MultiIndex() = default;

  explicit MultiIndex(std::vector<int> degrees) : degrees_(std::move(degrees)) {
    for (int d : degrees_) {
      if (d < 0) throw std::invalid_argument("MultiIndex: negative degree");
    }
  }

  MultiIndex(std::initializer_list<int> degrees)
      : MultiIndex(std::vector<int>(degrees)) {}

  static MultiIndex zeros(int dim) { return MultiIndex(std::vector<int>(dim, 0)); }

  int dim() const { return static_cast<int>(degrees_.size()); }
  int operator[](int i) const { return degrees_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& degrees() const { return degrees_; }

  /// |k|_1
  int total_degree() const { return std::accumulate(degrees_.begin(), degrees_.end(), 0); }

  /// |k|_inf
  int max_degree() const {
    int m = 0;
    for (int d : degrees_) m = std::max(m, d);
    return m;
  }

  bool is_zero() const { return total_degree() == 0; }

  /// Componentwise k' <= k.
  bool dominates(const MultiIndex& other) const {
    if (other.dim() != dim()) return false;
    for (int i = 0; i < dim(); ++i)
      if (other.degrees_[static_cast<std::size_t>(i)] > degrees_[static_cast<std::size_t>(i)]) return false;
    return true;
  }

  MultiIndex with_decrement(int i) const {
    MultiIndex k(*this);
    k.degrees_[static_cast<std::size_t>(i)] -= 1;
    return k;
  }

  bool operator==(const MultiIndex& other) const { return degrees_ == other.degrees_; }
  bool operator!=(const MultiIndex& other) const { return !(*this == other); }

  /// Plain lexicographic order.
  bool operator<(const MultiIndex& other) const { return degrees_ < other.degrees_; }

  std::string to_string() const {
    std::string s = "(";
    for (int i = 0; i < dim(); ++i) {
      if (i) s += ",";
      s += std::to_string(degrees_[static_cast<std::size_t>(i)]);
    }
    return s + ")";
  }

private:
  std::vector<int> degrees_;
};

/// Graded-lexicographic order: by total degree first, then lexicographic.
/// This is the canonical order used for mode tables and exports.
struct GradedLexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    const int ta = a.total_degree(), tb = b.total_degree();
    if (ta != tb) return ta < tb;
    return a < b;
  }
};

}  // namespace porochaos
