#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>

#include <gtest/gtest.h>

#include "vtwin/random_words.hpp"

namespace vtwin::test {

// Runs `body` on `count` generated cases; reports the first failing case.
template <class Gen, class Body>
void for_all(std::uint64_t seed, int count, Gen gen, Body body) {
  Rng rng(seed);
  for (int k = 0; k < count; ++k) {
    auto value = gen(rng);
    SCOPED_TRACE("case " + std::to_string(k) + " seed " + std::to_string(seed));
    body(value);
    if (::testing::Test::HasFailure())
      return;
  }
}

inline int pick(Rng &rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

} // namespace vtwin::test
