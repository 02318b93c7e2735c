// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "hnid/limits.hpp"
#include "hnid/runner.hpp"

namespace {

using namespace hnid;

void BM_SuiteSerial(benchmark::State& state) {
  const auto cells = enumerate_cells(static_cast<Suite>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_serial(cells));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cells.size()));
}

void BM_SuiteParallel(benchmark::State& state) {
  const auto cells = enumerate_cells(static_cast<Suite>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_parallel(cells));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cells.size()));
}

const std::vector<std::int64_t> kYs{10, 100, 1000, 10000, 100000};

void BM_DecaySerial(benchmark::State& state) {
  const auto fam = reflex_family(2, 1);
  const auto w = binomial_ratio_weights(4);
  for (auto _ : state) benchmark::DoNotOptimize(decay_probe(fam, w, 4, kYs));
}

void BM_DecayParallel(benchmark::State& state) {
  const auto fam = reflex_family(2, 1);
  const auto w = binomial_ratio_weights(4);
  for (auto _ : state) benchmark::DoNotOptimize(decay_probe_parallel(fam, w, 4, kYs));
}

}  // namespace

BENCHMARK(BM_SuiteSerial)
    ->Arg(static_cast<int>(Suite::kTable1))
    ->Arg(static_cast<int>(Suite::kFamilies))
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SuiteParallel)
    ->Arg(static_cast<int>(Suite::kTable1))
    ->Arg(static_cast<int>(Suite::kFamilies))
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DecaySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DecayParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
