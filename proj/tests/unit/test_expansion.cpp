#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "porochaos/chaos_expansion.hpp"
#include "porochaos/rng.hpp"

using namespace porochaos;

namespace {

Eigen::VectorXd scalar1(double v) { return Eigen::VectorXd::Constant(1, v); }

ChaosExpansion random_expansion(int dim, int degree, Rng& rng) {
  const TruncationSet basis = TruncationSet::total_degree(dim, degree);
  Eigen::VectorXd modes(basis.size());
  for (int m = 0; m < basis.size(); ++m) modes(m) = 2.0 * rng.uniform01() - 1.0;
  return ChaosExpansion::scalar(basis, modes);
}

}  // namespace

TEST_CASE("mean is the zero-index mode") {
  const auto constant = ChaosExpansion::from_modes(4, {{MultiIndex{0, 0, 0, 0}, scalar1(3.5)}});
  CHECK(constant.mean_scalar() == 3.5);
  CHECK(constant.variance_scalar() == 0.0);

  const auto e = ChaosExpansion::from_modes(
      4, {{MultiIndex{0, 0, 0, 0}, scalar1(2.0)}, {MultiIndex{1, 0, 0, 0}, scalar1(0.5)}});
  CHECK(e.mean_scalar() == 2.0);
}

TEST_CASE("variance sums squared non-zero modes") {
  const auto e = ChaosExpansion::from_modes(
      2, {{MultiIndex{0, 0}, scalar1(0.0)},
          {MultiIndex{1, 0}, scalar1(3.0)},
          {MultiIndex{0, 1}, scalar1(4.0)}});
  CHECK(e.variance_scalar() == doctest::Approx(25.0).epsilon(1e-15));
}

TEST_CASE("covariance of an expansion with itself is its variance") {
  Rng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const ChaosExpansion e = random_expansion(3, 4, rng);
    CHECK(ChaosExpansion::covariance(e, e)(0) == doctest::Approx(e.variance_scalar()).epsilon(1e-14));
  }
}

TEST_CASE("covariance of expansions without shared modes vanishes") {
  const auto a = ChaosExpansion::from_modes(2, {{MultiIndex{1, 0}, scalar1(2.5)}});
  const auto b = ChaosExpansion::from_modes(2, {{MultiIndex{0, 1}, scalar1(-1.0)}});
  // Different truncation sets are rejected; rebuild over the union.
  CHECK_THROWS_AS((void)ChaosExpansion::covariance(a, b), std::invalid_argument);

  const TruncationSet shared = TruncationSet::total_degree(2, 1);
  Eigen::VectorXd ma = Eigen::VectorXd::Zero(shared.size());
  Eigen::VectorXd mb = Eigen::VectorXd::Zero(shared.size());
  ma(shared.index_of(MultiIndex{1, 0})) = 2.5;
  mb(shared.index_of(MultiIndex{0, 1})) = -1.0;
  CHECK(ChaosExpansion::covariance(ChaosExpansion::scalar(shared, ma),
                                   ChaosExpansion::scalar(shared, mb))(0) == 0.0);
}

TEST_CASE("covariance worked example") {
  const TruncationSet shared = TruncationSet::total_degree(2, 1);
  Eigen::VectorXd ma = Eigen::VectorXd::Zero(shared.size());
  Eigen::VectorXd mb = Eigen::VectorXd::Zero(shared.size());
  ma(0) = 1.0;
  ma(shared.index_of(MultiIndex{1, 0})) = 2.0;
  mb(0) = 5.0;
  mb(shared.index_of(MultiIndex{1, 0})) = -1.0;
  CHECK(ChaosExpansion::covariance(ChaosExpansion::scalar(shared, ma),
                                   ChaosExpansion::scalar(shared, mb))(0) == -2.0);
}

TEST_CASE("sobol indices of single-variable and interaction-only expansions") {
  const auto single = ChaosExpansion::from_modes(
      2, {{MultiIndex{1, 0}, scalar1(2.0)}, {MultiIndex{2, 0}, scalar1(0.5)}});
  CHECK(single.sobol_partial_variance(0, SobolKind::FirstOrder)(0) ==
        doctest::Approx(single.variance_scalar()).epsilon(1e-15));
  CHECK(single.sobol_partial_variance(0, SobolKind::TotalOrder)(0) ==
        doctest::Approx(single.variance_scalar()).epsilon(1e-15));

  const auto inter = ChaosExpansion::from_modes(2, {{MultiIndex{1, 1}, scalar1(3.0)}});
  CHECK(inter.sobol_partial_variance(0, SobolKind::FirstOrder)(0) == 0.0);
  CHECK(inter.sobol_partial_variance(0, SobolKind::TotalOrder)(0) == 9.0);
  CHECK_THROWS_AS((void)inter.sobol_partial_variance(5, SobolKind::FirstOrder), std::out_of_range);
}

TEST_CASE("first/total partial variances bracket the variance (randomized)") {
  Rng rng(42);
  for (int trial = 0; trial < 25; ++trial) {
    const ChaosExpansion e = random_expansion(4, 3, rng);
    double first_sum = 0.0, total_sum = 0.0;
    for (int i = 0; i < 4; ++i) {
      const double fi = e.sobol_partial_variance(i, SobolKind::FirstOrder)(0);
      const double ti = e.sobol_partial_variance(i, SobolKind::TotalOrder)(0);
      CHECK(fi >= 0.0);
      CHECK(ti + 1e-15 >= fi);
      first_sum += fi;
      total_sum += ti;
    }
    const double var = e.variance_scalar();
    CHECK(first_sum <= var * (1.0 + 1e-12));
    CHECK(total_sum + 1e-12 * var >= var);
  }
}

TEST_CASE("shift-scale: modes of a X + b transform mean and variance accordingly") {
  Rng rng(3);
  const ChaosExpansion e = random_expansion(3, 3, rng);
  const double a = -2.25, b = 0.75;
  Eigen::MatrixXd coeffs = a * e.coefficients();
  coeffs(0, 0) += b;
  const ChaosExpansion t(e.basis(), coeffs);
  CHECK(t.mean_scalar() == doctest::Approx(a * e.mean_scalar() + b).epsilon(1e-12));
  CHECK(t.variance_scalar() == doctest::Approx(a * a * e.variance_scalar()).epsilon(1e-12));
}

TEST_CASE("mode table CSV round-trips bitwise") {
  Rng rng(11);
  const ChaosExpansion e = random_expansion(4, 2, rng);
  const auto path = std::filesystem::temp_directory_path() / "porochaos_modes_test.csv";
  e.write_csv(path);
  const ChaosExpansion back = ChaosExpansion::read_csv(path);
  REQUIRE(back.basis() == e.basis());
  REQUIRE(back.payload_size() == e.payload_size());
  for (int m = 0; m < e.mode_count(); ++m)
    CHECK(back.coefficients()(0, m) == e.coefficients()(0, m));  // bitwise
  std::filesystem::remove(path);
}

TEST_CASE("evaluate reproduces a linear function") {
  const auto e = ChaosExpansion::from_modes(
      2, {{MultiIndex{0, 0}, scalar1(1.0)}, {MultiIndex{1, 0}, scalar1(2.0)}});
  const std::array<double, 2> xi = {0.25, -0.5};
  // psi_1(x) = sqrt(3) x
  CHECK(e.evaluate_scalar(xi) == doctest::Approx(1.0 + 2.0 * std::sqrt(3.0) * 0.25).epsilon(1e-14));
}
