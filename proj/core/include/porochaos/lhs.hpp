#pragma once

#include <Eigen/Dense>
#include <cstdint>

namespace porochaos {

/// Latin Hypercube Sample of `count` points in [-1,1]^dim: per dimension,
/// one point per equal-probability stratum, with random stratum pairing and
/// uniform jitter within each stratum. Deterministic for a given seed.
/// Returns a count x dim matrix, one row per sample.
Eigen::MatrixXd lhs_samples(int dim, int count, std::uint64_t seed);

}  // namespace porochaos
