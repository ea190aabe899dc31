#include <benchmark/benchmark.h>

#include "vtwin/graph.hpp"
#include "vtwin/morphisms.hpp"

namespace {

void BM_GraphAutomorphisms(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(vtwin::graph_automorphisms(n));
}
BENCHMARK(BM_GraphAutomorphisms)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_Chordal(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(vtwin::is_chordal(n));
}
BENCHMARK(BM_Chordal)->DenseRange(3, 8);

void BM_ThetaBraid(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  const vtwin::GroupEndo a = vtwin::theta(n, 1), b = vtwin::theta(n, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(vtwin::endo_power(vtwin::endo_compose(a, b), 3));
}
BENCHMARK(BM_ThetaBraid)->DenseRange(3, 6);

} // namespace

BENCHMARK_MAIN();
