#include <benchmark/benchmark.h>

#include "tauroot/dynkin.hpp"
#include "tauroot/root_search.hpp"

namespace {

const char* const kLabels[] = {"A4", "A6", "D4", "E6"};

void BM_FindRootsParallel(benchmark::State& state) {
  const auto q = tauroot::dynkin_quiver(kLabels[state.range(0)]);
  const int l = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(tauroot::find_tau_roots(q, l));
  state.SetLabel(kLabels[state.range(0)]);
}

void BM_FindRootsReference(benchmark::State& state) {
  const auto q = tauroot::dynkin_quiver(kLabels[state.range(0)]);
  const int l = static_cast<int>(state.range(1));
  // The reference walks every bounded delta; cap the bound so A6 stays tractable.
  for (auto _ : state) benchmark::DoNotOptimize(tauroot::find_tau_roots_reference(q, l, 2));
  state.SetLabel(kLabels[state.range(0)]);
}

void BM_FindRootsParallelBound2(benchmark::State& state) {
  const auto q = tauroot::dynkin_quiver(kLabels[state.range(0)]);
  const int l = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(tauroot::find_tau_roots(q, l, 2));
  state.SetLabel(kLabels[state.range(0)]);
}

}  // namespace

BENCHMARK(BM_FindRootsParallel)->ArgsProduct({{0, 1, 2, 3}, {2, 3}});
BENCHMARK(BM_FindRootsParallelBound2)->ArgsProduct({{0, 1, 2, 3}, {2, 3}});
BENCHMARK(BM_FindRootsReference)->ArgsProduct({{0, 1, 2, 3}, {2, 3}});

BENCHMARK_MAIN();
