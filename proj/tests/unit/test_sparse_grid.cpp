#include <doctest.h>

#include <cmath>
#include <set>

#include "porochaos/sparse_grid.hpp"

using namespace porochaos;

namespace {

std::set<std::pair<double, double>> node_set_2d(const SparseGrid& g) {
  std::set<std::pair<double, double>> s;
  for (int q = 0; q < g.node_count(); ++q) s.insert({g.nodes()(q, 0), g.nodes()(q, 1)});
  return s;
}

}  // namespace

TEST_CASE("one-dimensional Smolyak degenerates to the plain rule") {
  const SparseGrid g = SparseGrid::build(1, 2);
  const Rule1D r = cc_rule(2);
  REQUIRE(g.node_count() == r.count());
  std::set<double> got;
  for (int q = 0; q < g.node_count(); ++q) got.insert(g.nodes()(q, 0));
  for (double x : r.nodes) CHECK(got.count(x) == 1);
}

TEST_CASE("N=2, level 1 grid is the five-point cross") {
  const SparseGrid g = SparseGrid::build(2, 1);
  REQUIRE(g.node_count() == 5);
  const auto s = node_set_2d(g);
  CHECK(s.count({0.0, 0.0}) == 1);
  CHECK(s.count({1.0, 0.0}) == 1);
  CHECK(s.count({-1.0, 0.0}) == 1);
  CHECK(s.count({0.0, 1.0}) == 1);
  CHECK(s.count({0.0, -1.0}) == 1);
}

TEST_CASE("node counts for N=4 follow the classical Clenshaw-Curtis sequence") {
  const int expected[] = {1, 9, 41, 137, 401, 1105};
  for (int l = 0; l <= 5; ++l) CHECK(SparseGrid::build(4, l).node_count() == expected[l]);
}

TEST_CASE("collapsed weights sum to one") {
  for (int dim : {1, 2, 3, 4})
    for (int l = 0; l <= (dim == 4 ? 5 : 4); ++l) {
      const Eigen::VectorXd w = SparseGrid::build(dim, l).collapsed_weights();
      CHECK(std::abs(w.sum() - 1.0) < 1e-13);
    }
}

TEST_CASE("admissible sets are nested and node counts monotone") {
  for (int dim : {2, 4}) {
    int prev_nodes = 0;
    std::set<std::vector<int>> prev;
    for (int l = 0; l <= 5; ++l) {
      const SparseGrid g = SparseGrid::build(dim, l);
      CHECK(g.node_count() >= prev_nodes);
      prev_nodes = g.node_count();
      std::set<std::vector<int>> cur;
      for (int m = 0; m < g.admissible_set().size(); ++m)
        cur.insert(g.admissible_set()[m].degrees());
      for (const auto& k : prev) CHECK(cur.count(k) == 1);
      prev = std::move(cur);
    }
  }
}

TEST_CASE("discrete orthonormality holds on the admissible rectangle") {
  const SparseGrid g = SparseGrid::build(2, 3);
  for (const TensorRule& rule : g.tensor_rules()) {
    std::vector<int> k(2), l(2);
    for (k[0] = 0; k[0] <= rule.degree_caps[0]; ++k[0])
      for (k[1] = 0; k[1] <= rule.degree_caps[1]; ++k[1])
        for (l[0] = 0; l[0] <= rule.degree_caps[0]; ++l[0])
          for (l[1] = 0; l[1] <= rule.degree_caps[1]; ++l[1]) {
            const double v = discrete_orthonormality(rule, MultiIndex(k), MultiIndex(l));
            const double want = (k == l) ? 1.0 : 0.0;
            CHECK(std::abs(v - want) < 1e-12);
          }
  }
}

TEST_CASE("three-node rule aliases at degree 2: the boundary of admissibility") {
  // Explicit sum: psi_2(+-1) = sqrt(5), psi_2(0) = -sqrt(5)/2, weights {1/6,2/3,1/6}:
  // 5 (1/6 + 1/6) + 5/4 * 2/3 = 5/3 + 5/6 = 5/2.
  const SparseGrid g = SparseGrid::build(1, 1);
  REQUIRE(g.tensor_rules().size() == 1);
  const TensorRule& rule = g.tensor_rules().front();
  CHECK(rule.degree_caps[0] == 1);
  const double v = discrete_orthonormality(rule, MultiIndex{2}, MultiIndex{2});
  CHECK(v == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(std::abs(v - 1.0) > 0.1);
}

TEST_CASE("any rule returns exactly one for the zero pair") {
  const SparseGrid g = SparseGrid::build(3, 2);
  for (const TensorRule& rule : g.tensor_rules())
    CHECK(discrete_orthonormality(rule, MultiIndex{0, 0, 0}, MultiIndex{0, 0, 0}) ==
          doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("every unified node appears in at least one tensor rule") {
  const SparseGrid g = SparseGrid::build(3, 3);
  std::vector<bool> seen(static_cast<std::size_t>(g.node_count()), false);
  for (const TensorRule& rule : g.tensor_rules())
    for (int id : rule.unified_ids) seen[static_cast<std::size_t>(id)] = true;
  for (bool b : seen) CHECK(b);
}

TEST_CASE("smolyak coefficients alternate binomially") {
  const SparseGrid g = SparseGrid::build(2, 2);
  for (const TensorRule& rule : g.tensor_rules()) {
    const int deficit = 2 - (rule.levels[0] + rule.levels[1]);
    const int want = (deficit == 0) ? 1 : -1;  // C(1,0)=C(1,1)=1 with alternating sign
    CHECK(rule.coefficient == want);
  }
}
