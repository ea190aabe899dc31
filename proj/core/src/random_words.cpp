#include "vtwin/random_words.hpp"

#include "vtwin/error.hpp"

namespace vtwin {

RaagWord random_raag_word(int n, int max_syllables, Rng &rng, int max_abs_exp) {
  if (max_syllables < 0 || max_abs_exp < 1)
    throw Error(Errc::invalid_input, "bad random word bounds");
  std::uniform_int_distribution<int> len(0, max_syllables);
  std::uniform_int_distribution<int> gen(0, generator_count(n) - 1);
  std::uniform_int_distribution<int> mag(1, max_abs_exp);
  std::bernoulli_distribution negative(0.5);
  std::vector<Syllable> out;
  const int count = len(rng);
  for (int k = 0; k < count; ++k) {
    const LambdaGen g = generator_at(n, gen(rng));
    const int e = mag(rng);
    out.push_back({g, negative(rng) ? -e : e});
  }
  return RaagWord(n, std::move(out));
}

VWord random_vword(int n, int length, Rng &rng) {
  if (length < 0)
    throw Error(Errc::invalid_input, "negative length");
  std::uniform_int_distribution<int> pick(0, 2 * (n - 1) - 1);
  std::vector<VGen> out;
  out.reserve(static_cast<std::size_t>(length));
  for (int k = 0; k < length; ++k) {
    const int c = pick(rng);
    out.push_back(c < n - 1 ? VGen::s(c + 1) : VGen::r(c - (n - 1) + 1));
  }
  return VWord(n, std::move(out));
}

} // namespace vtwin
