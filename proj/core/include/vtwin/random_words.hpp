#pragma once

#include <cstdint>
#include <random>

#include "vtwin/raag.hpp"
#include "vtwin/word.hpp"

namespace vtwin {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

// Up to max_syllables syllables, exponents in [-max_abs_exp, max_abs_exp]
// without 0. Adjacent syllables may share a generator.
RaagWord random_raag_word(int n, int max_syllables, Rng &rng,
                          int max_abs_exp = 3);

// Exactly `length` letters chosen uniformly from the 2(n-1) generators.
VWord random_vword(int n, int length, Rng &rng);

} // namespace vtwin
