#include <benchmark/benchmark.h>

#include "vtwin/random_words.hpp"
#include "vtwin/rewriting.hpp"

namespace {

void BM_RewriteRoundTrip(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  vtwin::Rng rng(vtwin::kDefaultSeed);
  std::vector<vtwin::VWord> words;
  for (int k = 0; k < 64; ++k)
    words.push_back(vtwin::expand_to_vtn(vtwin::random_raag_word(n, 15, rng)));
  std::size_t i = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(vtwin::rewrite_tau(words[i++ % words.size()]));
}
BENCHMARK(BM_RewriteRoundTrip)->DenseRange(3, 8);

void BM_Decompose(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  const int length = static_cast<int>(state.range(1));
  vtwin::Rng rng(vtwin::kDefaultSeed);
  const vtwin::VWord w = vtwin::random_vword(n, length, rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(vtwin::decompose(w));
}
BENCHMARK(BM_Decompose)->ArgsProduct({{4, 8}, {24, 256}});

} // namespace
