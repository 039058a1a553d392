#include <benchmark/benchmark.h>

#include "gbinv/cost_model.hpp"
#include "gbinv/simulator.hpp"
#include "gbinv/special_functions.hpp"
#include "gbinv/stochastics.hpp"
#include "gbinv/sweep.hpp"

namespace {

constexpr gbinv::CostParams kCosts{40.0, 4.0, 0.02, 10.0, 300.0};

void BM_RegularizedLowerGamma(benchmark::State& state) {
  const auto s = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gbinv::regularized_lower_gamma(s, 0.98 * s));
}
BENCHMARK(BM_RegularizedLowerGamma)->Arg(5)->Arg(100)->Arg(10000)->Arg(1000000);

void BM_ComputeStatistics(benchmark::State& state) {
  const gbinv::AuctionParams params{state.range(0), 7.0, 14.0};
  for (auto _ : state) benchmark::DoNotOptimize(gbinv::compute_statistics(params));
}
BENCHMARK(BM_ComputeStatistics)->Arg(80)->Arg(100)->Arg(120);

void BM_TableSweep(benchmark::State& state) {
  gbinv::SweepSpec spec;
  spec.n_values = {80, 100, 120};
  spec.t_values = {6, 7, 8};
  spec.lambda_values = {14};
  spec.costs = kCosts;
  for (auto _ : state) benchmark::DoNotOptimize(gbinv::run_sweep(spec));
}
BENCHMARK(BM_TableSweep);

void BM_Simulate(benchmark::State& state) {
  gbinv::SimulationConfig config;
  config.num_cycles = static_cast<std::uint64_t>(state.range(0));
  config.draw_method = state.range(1) == 0 ? gbinv::DrawMethod::erlang : gbinv::DrawMethod::interarrival_sum;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gbinv::simulate({100, 7.0, 14.0}, kCosts, gbinv::Policy{500}, config));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Simulate)->Args({10000, 0})->Args({10000, 1})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
