#include <benchmark/benchmark.h>

#include <cmath>
#include <span>

#include "porochaos/psp.hpp"

using namespace porochaos;

namespace {

Eigen::VectorXd exp_payload_at_nodes(const SparseGrid& grid) {
  Eigen::VectorXd values(grid.node_count());
  for (int q = 0; q < grid.node_count(); ++q) {
    double s = 0.0;
    for (int j = 0; j < grid.dimension(); ++j) s += grid.nodes()(q, j);
    values(q) = std::exp(0.25 * s);
  }
  return values;
}

}  // namespace

static void BM_SparseGridBuild(benchmark::State& state) {
  const int level = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(SparseGrid::build(4, level));
  state.SetLabel("N=4");
}
BENCHMARK(BM_SparseGridBuild)->Arg(3)->Arg(4)->Arg(5);

static void BM_PspProjectScalar(benchmark::State& state) {
  const int level = static_cast<int>(state.range(0));
  const SparseGrid grid = SparseGrid::build(4, level);
  const Eigen::VectorXd values = exp_payload_at_nodes(grid);
  for (auto _ : state) benchmark::DoNotOptimize(psp_project(grid, values));
  state.SetLabel("N_q=" + std::to_string(grid.node_count()));
}
BENCHMARK(BM_PspProjectScalar)->Arg(3)->Arg(4)->Arg(5);

static void BM_PspProjectField(benchmark::State& state) {
  const int level = static_cast<int>(state.range(0));
  const Eigen::Index payload = state.range(1);
  const SparseGrid grid = SparseGrid::build(4, level);
  const Eigen::VectorXd scalar = exp_payload_at_nodes(grid);
  Eigen::MatrixXd values(payload, grid.node_count());
  for (Eigen::Index r = 0; r < payload; ++r) values.row(r) = (1.0 + 0.001 * r) * scalar.transpose();
  const ModelEvaluations evals = ModelEvaluations::from_matrix(values);
  for (auto _ : state) benchmark::DoNotOptimize(psp_project(grid, evals));
}
BENCHMARK(BM_PspProjectField)->Args({3, 4096})->Args({4, 4096});

static void BM_ExpansionEvaluate(benchmark::State& state) {
  const SparseGrid grid = SparseGrid::build(4, static_cast<int>(state.range(0)));
  const ChaosExpansion e = psp_project(grid, exp_payload_at_nodes(grid));
  const std::array<double, 4> xi = {0.31, -0.44, 0.87, -0.12};
  for (auto _ : state) benchmark::DoNotOptimize(e.evaluate_scalar(xi));
}
BENCHMARK(BM_ExpansionEvaluate)->Arg(3)->Arg(5);

BENCHMARK_MAIN();
