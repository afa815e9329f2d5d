#include <benchmark/benchmark.h>

#include <vector>

#include "distdyn/contract.hpp"
#include "distdyn/dynamics.hpp"
#include "distdyn/rng.hpp"
#include "distdyn/scenario_io.hpp"

namespace {

using namespace distdyn;

ScenarioConfig bench_config(int horizon, ClosureMode mode) {
  ScenarioConfig config;
  config.horizon = horizon;
  config.initial_worker_capital = 100.0;
  config.initial_capitalist_capital = 1000.0;
  config.profit_rate_path = SeriesSpec::constant(0.05);
  config.wage_path = SeriesSpec::constant(100.0);
  config.propensities = Propensities{0.05, 0.5};
  config.mode = mode;
  if (mode == ClosureMode::contract) {
    config.contract_ratio = 0.2;
    config.carryover = true;
  }
  return config;
}

void BM_Restrict(benchmark::State& state) {
  Rng rng(42);
  std::vector<SavingsCapacity> capacities(1024);
  std::vector<double> ratios(1024);
  for (std::size_t i = 0; i < capacities.size(); ++i) {
    capacities[i] = {rng.log_uniform(1e-3, 1e6), rng.log_uniform(1e-3, 1e6)};
    ratios[i] = rng.log_uniform(1e-2, 1e2);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const RestrictedSavings r =
        restrict(capacities[i & 1023], ContractRatio(ratios[i & 1023]));
    benchmark::DoNotOptimize(r);
    ++i;
  }
}
BENCHMARK(BM_Restrict);

void BM_SimulateUnconstrained(benchmark::State& state) {
  const ScenarioConfig config =
      bench_config(static_cast<int>(state.range(0)), ClosureMode::unconstrained);
  for (auto _ : state) {
    const Trajectory traj = simulate(config);
    benchmark::DoNotOptimize(traj.cumulative_unsaved);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateUnconstrained)->Arg(100)->Arg(1000)->Arg(10000);

void BM_SimulateContract(benchmark::State& state) {
  const ScenarioConfig config =
      bench_config(static_cast<int>(state.range(0)), ClosureMode::contract);
  for (auto _ : state) {
    const Trajectory traj = simulate(config);
    benchmark::DoNotOptimize(traj.cumulative_unsaved);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateContract)->Arg(100)->Arg(1000)->Arg(10000);

void BM_TrajectoryToCsv(benchmark::State& state) {
  const Trajectory traj =
      simulate(bench_config(static_cast<int>(state.range(0)), ClosureMode::contract));
  for (auto _ : state) {
    const std::string csv = trajectory_to_csv(traj);
    benchmark::DoNotOptimize(csv.size());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TrajectoryToCsv)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
