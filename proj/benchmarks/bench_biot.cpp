#include <benchmark/benchmark.h>

#include "porochaos/mms.hpp"
#include "porochaos/scenarios.hpp"

using namespace porochaos;

static void BM_Assemble(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto mesh = std::make_shared<TriMesh>(make_unit_square_crisscross(n));
  BiotScenario scn = make_injection_scenario(mesh);
  scn.sample = mms_reference_sample();
  const TaylorHoodSpace space(*mesh);
  for (auto _ : state) benchmark::DoNotOptimize(assemble(scn, space));
  state.SetLabel(std::to_string(mesh->triangle_count()) + " triangles");
}
BENCHMARK(BM_Assemble)->Arg(16)->Arg(32);

static void BM_FactorizeAndStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto mesh = std::make_shared<TriMesh>(make_unit_square_crisscross(n));
  BiotScenario scn = make_injection_scenario(mesh);
  scn.sample = mms_reference_sample();
  for (auto _ : state) {
    const BiotSolver solver(scn);
    benchmark::DoNotOptimize(solver.solve_transient());
  }
  state.SetLabel(std::to_string(mesh->triangle_count()) + " triangles, 10 steps");
}
BENCHMARK(BM_FactorizeAndStep)->Arg(8)->Arg(16)->Arg(32);

static void BM_StepOnly(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto mesh = std::make_shared<TriMesh>(make_unit_square_crisscross(n));
  BiotScenario scn = make_injection_scenario(mesh);
  scn.sample = mms_reference_sample();
  const BiotSolver solver(scn);
  FieldSolution s = solver.initial_state();
  for (auto _ : state) {
    s = solver.step(s, s.time + scn.dt());
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_StepOnly)->Arg(16)->Arg(32);
