// Serial reference vs OpenMP experiment on the 56-vertex six-part instance.

#include <benchmark/benchmark.h>

#include "kxcover/simulate.hpp"

namespace {

kxcover::SimConfig config(std::int64_t samples) {
  kxcover::SimConfig cfg;
  cfg.skeleton = kxcover::SkeletonGraph(
      6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 2}, {2, 4}, {1, 1}});
  cfg.allocation = kxcover::NodeAllocation({24, 7, 4, 11, 6, 4});
  cfg.probability = kxcover::EdgeProbability::parse("4logn/n");
  cfg.samples = samples;
  cfg.seed = 1;
  return cfg;
}

void BM_Serial(benchmark::State& state) {
  const auto cfg = config(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kxcover::run_experiment_serial(cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_OpenMP(benchmark::State& state) {
  const auto cfg = config(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(kxcover::run_experiment(cfg, threads));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_Serial)->Arg(500)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_OpenMP)
    ->ArgsProduct({{500}, {1, 2, 4, 8}})
    ->ArgNames({"samples", "threads"})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
