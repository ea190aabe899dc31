#include <algorithm>
#include <deque>
#include <set>
#include <utility>

#include "support.hpp"
#include "vtwin/error.hpp"
#include "vtwin/raag.hpp"

using namespace vtwin;
using vtwin::test::for_all;
using vtwin::test::pick;

namespace {

RaagWord R(int n, const char *text) { return RaagWord::parse(n, text); }

// Letter-level words: (generator, +-1).
using Letter = std::pair<LambdaGen, int>;
using Letters = std::vector<Letter>;

Letters letters_of(const RaagWord &w) {
  Letters out;
  for (const Syllable &s : w.syllables())
    for (std::int64_t k = 0; k < std::llabs(s.exp); ++k)
      out.push_back({s.gen, s.exp > 0 ? 1 : -1});
  return out;
}

RaagWord from_letters(int n, const Letters &ls) {
  std::vector<Syllable> syl;
  for (const Letter &l : ls)
    syl.push_back({l.first, l.second});
  return RaagWord(n, std::move(syl));
}

// Closure under swapping adjacent commuting letters and deleting adjacent
// inverse pairs; the lex-least shortest word is the canonical form.
Letters bfs_canonical(const Letters &start) {
  std::set<Letters> seen{start};
  std::deque<Letters> queue{start};
  while (!queue.empty()) {
    Letters w = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      const Letter a = w[k], b = w[k + 1];
      Letters next;
      if (a.first == b.first && a.second == -b.second) {
        next = w;
        next.erase(next.begin() + k, next.begin() + k + 2);
      } else if (a.first != b.first && commute(a.first, b.first)) {
        next = w;
        std::swap(next[k], next[k + 1]);
      } else {
        continue;
      }
      if (seen.insert(next).second)
        queue.push_back(next);
    }
  }
  std::size_t shortest = start.size();
  for (const Letters &w : seen)
    shortest = std::min(shortest, w.size());
  const Letters *best = nullptr;
  for (const Letters &w : seen)
    if (w.size() == shortest && (!best || w < *best))
      best = &w;
  return *best;
}

Letters random_letters(int n, int len, Rng &rng) {
  const auto gens = generators(n);
  Letters out;
  for (int k = 0; k < len; ++k)
    out.push_back({gens[pick(rng, 0, static_cast<int>(gens.size()) - 1)],
                   pick(rng, 0, 1) ? 1 : -1});
  return out;
}

auto raag_gen(int max_n, int max_syl) {
  return [=](Rng &rng) {
    const int n = pick(rng, 2, max_n);
    return random_raag_word(n, max_syl, rng);
  };
}

} // namespace

TEST(Raag, ParseAndPrint) {
  EXPECT_EQ(R(4, "L1.2 L3.4^-1").str(), "L1.2 L3.4^-1");
  EXPECT_EQ(R(4, "L2.4^3").str(), "L2.4^3");
  EXPECT_EQ(R(4, "L2.4^+2").str(), "L2.4^2");
  EXPECT_EQ(R(4, "").str(), "");
  EXPECT_EQ(R(3, "L1.2 L1.3").letter_count(), 2);
}

TEST(Raag, ParseErrorPositions) {
  auto pos_of = [](int n, const char *text) -> long {
    try {
      RaagWord::parse(n, text);
    } catch (const ParseError &e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  EXPECT_EQ(pos_of(4, "L1.2 X"), 5);
  EXPECT_EQ(pos_of(4, "L12"), 3);
  EXPECT_EQ(pos_of(4, "L1.2 L2.1"), 5);
  EXPECT_EQ(pos_of(4, "L1.5"), 0);
  EXPECT_EQ(pos_of(4, "L1.2^0"), 5);
  EXPECT_EQ(pos_of(4, "L1.2^"), 5);
  EXPECT_EQ(pos_of(4, "L1.2x"), 4);
  EXPECT_THROW(R(3, "L1.2") * R(4, "L1.2"), Error);
  EXPECT_THROW(RaagWord(1), Error);
}

TEST(Raag, GeneratorIndexing) {
  for (int n = 2; n <= 8; ++n) {
    const auto gens = generators(n);
    ASSERT_EQ(static_cast<int>(gens.size()), generator_count(n));
    EXPECT_TRUE(std::is_sorted(gens.begin(), gens.end()));
    for (int k = 0; k < generator_count(n); ++k) {
      EXPECT_EQ(generator_index(n, gens[k]), k);
      EXPECT_EQ(generator_at(n, k), gens[k]);
    }
  }
  EXPECT_TRUE(commute({1, 2}, {3, 4}));
  EXPECT_FALSE(commute({1, 2}, {2, 3}));
  EXPECT_FALSE(commute({1, 3}, {1, 4}));
}

TEST(NormalForm, Examples) {
  EXPECT_EQ(normal_form(R(4, "L3.4 L1.2")).str(), "L1.2 L3.4");
  EXPECT_EQ(normal_form(R(4, "L1.2 L3.4 L1.2^-1")).str(), "L3.4");
  EXPECT_EQ(normal_form(R(4, "L1.2 L2.3 L1.2^-1")).str(), "L1.2 L2.3 L1.2^-1");
  EXPECT_EQ(normal_form(R(4, "L1.2^2 L1.2^-5")).str(), "L1.2^-3");
  EXPECT_EQ(normal_form(R(5, "L2.5 L1.3 L2.5^-1 L1.3^-1")).str(), "");
  EXPECT_EQ(normal_form(R(5, "L4.5 L2.3 L1.4")).str(), "L2.3 L4.5 L1.4");
}

TEST(NormalForm, MatchesCommutationClassOracle) {
  for_all(31, 400,
          [](Rng &rng) {
            const int n = pick(rng, 2, 5);
            return std::pair{n, random_letters(n, pick(rng, 0, 6), rng)};
          },
          [](const auto &c) {
            const auto &[n, ls] = c;
            const Letters want = bfs_canonical(ls);
            EXPECT_EQ(letters_of(normal_form(from_letters(n, ls))), want)
                << from_letters(n, ls).str();
          });
}

TEST(NormalForm, Idempotent) {
  for_all(32, 300, raag_gen(7, 12), [](const RaagWord &w) {
    const RaagWord a = normal_form(w);
    EXPECT_EQ(normal_form(a), a);
  });
}

TEST(NormalForm, InvariantUnderSwapAndCancellation) {
  for_all(33, 300, raag_gen(6, 10), [](const RaagWord &w) {
    const int n = w.strands();
    const RaagWord base = normal_form(w);
    std::vector<Syllable> syl(w.syllables().begin(), w.syllables().end());
    // one commuting swap, if any
    for (std::size_t k = 0; k + 1 < syl.size(); ++k)
      if (commute(syl[k].gen, syl[k + 1].gen)) {
        auto swapped = syl;
        std::swap(swapped[k], swapped[k + 1]);
        EXPECT_EQ(normal_form(RaagWord(n, swapped)), base);
        break;
      }
    // insert g g^{-1} in the middle
    auto grown = syl;
    const LambdaGen g = generator_at(n, static_cast<int>(syl.size()) % generator_count(n));
    grown.insert(grown.begin() + static_cast<long>(syl.size() / 2), {{g, 2}, {g, -2}});
    EXPECT_EQ(normal_form(RaagWord(n, grown)), base);
  });
}

TEST(NormalForm, InverseCancels) {
  for_all(34, 300, raag_gen(7, 12), [](const RaagWord &w) {
    EXPECT_TRUE(normal_form(w * w.inverse()).empty());
    EXPECT_TRUE(normal_form(w.inverse() * w).empty());
    EXPECT_TRUE(raag_equal(w, normal_form(w)));
  });
}

TEST(NormalForm, NoAdjacentSameGenerator) {
  for_all(35, 300, raag_gen(7, 14), [](const RaagWord &w) {
    const RaagWord a = normal_form(w);
    for (std::size_t k = 0; k + 1 < a.size(); ++k)
      EXPECT_NE(a.syllables()[k].gen, a.syllables()[k + 1].gen);
    for (const Syllable &s : a.syllables())
      EXPECT_NE(s.exp, 0);
  });
}

TEST(Abelianize, Examples) {
  const AbelianImage a = abelianize(R(4, "L1.2^3 L3.4 L1.2^-1 L2.3^-2"));
  EXPECT_EQ(a[(LambdaGen{1, 2})], 2);
  EXPECT_EQ(a[(LambdaGen{3, 4})], 1);
  EXPECT_EQ(a[(LambdaGen{2, 3})], -2);
  EXPECT_EQ(a[(LambdaGen{1, 4})], 0);
  EXPECT_TRUE(abelianize(R(4, "L1.2 L2.3 L1.2^-1 L2.3^-1")).is_zero());
  EXPECT_EQ(abelianize(R(5, "")).counts().size(), 10u);
}

TEST(Abelianize, InvariantUnderNormalForm) {
  for_all(36, 300, raag_gen(7, 12), [](const RaagWord &w) {
    EXPECT_EQ(abelianize(normal_form(w)), abelianize(w));
    AbelianImage sum = abelianize(w);
    sum += abelianize(w.inverse());
    EXPECT_TRUE(sum.is_zero());
  });
}

TEST(ExpandToVtn, Examples) {
  EXPECT_EQ(lambda_word(3, {1, 2}), VWord::parse(3, "s1 r1"));
  EXPECT_EQ(lambda_word(3, {1, 3}), VWord::parse(3, "r2 s1 r1 r2"));
  EXPECT_EQ(lambda_word(4, {1, 4}), VWord::parse(4, "r3 r2 s1 r1 r2 r3"));
  EXPECT_EQ(lambda_word(4, {2, 4}), VWord::parse(4, "r3 s2 r2 r3"));
  EXPECT_EQ(expand_to_vtn(R(3, "L1.2^-1")), VWord::parse(3, "r1 s1"));
  EXPECT_EQ(expand_to_vtn(R(3, "L1.2^2")), VWord::parse(3, "s1 r1 s1 r1"));
  EXPECT_TRUE(expand_to_vtn(R(3, "")).empty());
}

TEST(Raag, CenterTrivialBounded) {
  // Exhaustive over words of at most four +-1 syllables.
  for (int n : {3, 4, 5}) {
    const auto gens = generators(n);
    Letters alphabet;
    for (LambdaGen g : gens)
      for (int s : {1, -1})
        alphabet.push_back({g, s});
    std::vector<Letters> frontier{{}};
    std::size_t central = 0, checked = 0;
    for (int len = 1; len <= 4; ++len) {
      std::vector<Letters> next;
      for (const Letters &w : frontier)
        for (const Letter &l : alphabet) {
          if (!w.empty() && w.back().first == l.first && w.back().second == -l.second)
            continue;
          Letters v = w;
          v.push_back(l);
          next.push_back(v);
          const RaagWord rw = normal_form(from_letters(n, v));
          if (rw.empty())
            continue;
          ++checked;
          bool all = true;
          for (LambdaGen g : gens)
            if (!normal_form(commutator(rw, RaagWord::generator(n, g))).empty()) {
              all = false;
              break;
            }
          central += all;
        }
      frontier = std::move(next);
    }
    EXPECT_GT(checked, 0u);
    EXPECT_EQ(central, 0u) << "n=" << n;
  }
}
