#include <benchmark/benchmark.h>

#include "vtwin/random_words.hpp"
#include "vtwin/raag.hpp"

namespace {

void BM_NormalForm(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  const int syllables = static_cast<int>(state.range(1));
  vtwin::Rng rng(vtwin::kDefaultSeed);
  std::vector<vtwin::RaagWord> words;
  for (int k = 0; k < 64; ++k)
    words.push_back(vtwin::random_raag_word(n, syllables, rng));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(vtwin::normal_form(words[i++ % words.size()]));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_NormalForm)->ArgsProduct({{4, 6, 8}, {16, 64, 256}});

void BM_RaagEqual(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  vtwin::Rng rng(vtwin::kDefaultSeed);
  const vtwin::RaagWord w = vtwin::random_raag_word(n, 64, rng);
  const vtwin::RaagWord v = vtwin::normal_form(w);
  for (auto _ : state)
    benchmark::DoNotOptimize(vtwin::raag_equal(w, v));
}
BENCHMARK(BM_RaagEqual)->Arg(4)->Arg(6);

} // namespace
