#include "porochaos/lhs.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

#include "porochaos/rng.hpp"

namespace porochaos {

Eigen::MatrixXd lhs_samples(int dim, int count, std::uint64_t seed) {
  if (dim < 1 || count < 1) throw std::invalid_argument("lhs_samples: dim >= 1 and count >= 1 required");
  Rng rng(seed);
  Eigen::MatrixXd samples(count, dim);
  std::vector<int> strata(static_cast<std::size_t>(count));
  const double width = 2.0 / static_cast<double>(count);
  for (int j = 0; j < dim; ++j) {
    std::iota(strata.begin(), strata.end(), 0);
    rng.shuffle(strata);
    for (int i = 0; i < count; ++i) {
      const double jitter = rng.uniform01();
      samples(i, j) = -1.0 + (static_cast<double>(strata[static_cast<std::size_t>(i)]) + jitter) * width;
    }
  }
  return samples;
}

}  // namespace porochaos
