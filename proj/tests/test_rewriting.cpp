#include "support.hpp"
#include "vtwin/error.hpp"
#include "vtwin/rewriting.hpp"

using namespace vtwin;
using vtwin::test::for_all;
using vtwin::test::pick;

namespace {

VWord W(int n, const char *text) { return VWord::parse(n, text); }
RaagWord R(int n, const char *text) { return RaagWord::parse(n, text); }

// Multiplies by the inverse coset word so the result lies in the kernel.
VWord to_kernel(const VWord &w) {
  return w * invert(schreier_word(schreier_tuple(pi_image(w))));
}

auto kernel_gen(int max_n, int max_len) {
  return [=](Rng &rng) {
    const int n = pick(rng, 2, max_n);
    return to_kernel(random_vword(n, pick(rng, 0, max_len), rng));
  };
}

VWord rho_word(int n, int len, Rng &rng) {
  std::vector<VGen> ls;
  for (int k = 0; k < len; ++k)
    ls.push_back(VGen::r(pick(rng, 1, n - 1)));
  return VWord(n, ls);
}

} // namespace

TEST(Gamma, Examples) {
  EXPECT_TRUE(gamma(Perm(3), VGen::r(1)).empty());
  EXPECT_EQ(gamma(Perm(3), VGen::s(2)), R(3, "L2.3"));
  EXPECT_EQ(gamma(Perm::transposition(3, 1, 2), VGen::s(1)), R(3, "L1.2^-1"));
  EXPECT_EQ(gamma(Perm::transposition(3, 2, 3), VGen::s(1)), R(3, "L1.3"));
  EXPECT_EQ(gamma(Perm::transposition(3, 1, 3), VGen::s(1)), R(3, "L2.3^-1"));
}

TEST(RewriteTau, Examples) {
  EXPECT_EQ(rewrite_tau(W(3, "s1 r1")), R(3, "L1.2"));
  EXPECT_EQ(rewrite_tau(W(3, "r1 s1")), R(3, "L1.2^-1"));
  EXPECT_EQ(rewrite_tau(W(3, "r1 s1 r1 s1")), R(3, "L1.2^-2"));
  EXPECT_EQ(rewrite_tau(W(3, "r2 s1 r1 r2")), R(3, "L1.3"));
  EXPECT_TRUE(rewrite_tau(W(3, "s1 s1")).empty());
  EXPECT_TRUE(rewrite_tau(W(3, "")).empty());
  try {
    rewrite_tau(W(3, "s1"));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::not_in_kernel);
  }
}

TEST(RewriteTau, InvertsExpansion) {
  for_all(41, 400,
          [](Rng &rng) { return random_raag_word(pick(rng, 2, 6), 15, rng); },
          [](const RaagWord &w) {
            EXPECT_EQ(rewrite_tau(expand_to_vtn(w)), normal_form(w)) << w.str();
          });
}

TEST(RewriteTau, Homomorphism) {
  for_all(42, 300,
          [](Rng &rng) {
            const int n = pick(rng, 2, 6);
            return std::pair{to_kernel(random_vword(n, pick(rng, 0, 14), rng)),
                             to_kernel(random_vword(n, pick(rng, 0, 14), rng))};
          },
          [](const auto &uv) {
            EXPECT_EQ(rewrite_tau(uv.first * uv.second),
                      normal_form(rewrite_tau(uv.first) * rewrite_tau(uv.second)));
            EXPECT_EQ(rewrite_tau(invert(uv.first)), normal_form(rewrite_tau(uv.first).inverse()));
          });
}

TEST(RewriteTau, KillsConjugatedRelators) {
  for (int n = 2; n <= 4; ++n)
    for (const Relator &r : defining_relators(n).relators)
      for (const Perm &p : all_permutations(n)) {
        const VWord m = schreier_word(schreier_tuple(p));
        EXPECT_TRUE(rewrite_tau(m * r.word * invert(m)).empty())
            << to_string(r.family) << " " << r.word.str() << " by " << m.str();
      }
}

TEST(RewriteTau, ConjugationByRhoActsLetterwise) {
  for_all(43, 300,
          [](Rng &rng) {
            const int n = pick(rng, 2, 6);
            return std::pair{to_kernel(random_vword(n, pick(rng, 0, 12), rng)),
                             rho_word(n, pick(rng, 0, 6), rng)};
          },
          [](const auto &c) {
            const auto &[w, mu] = c;
            const int n = w.strands();
            const Perm sigma = pi_image(mu);
            std::vector<Syllable> moved;
            const RaagWord before = rewrite_tau(w);
            for (const Syllable &s : before.syllables()) {
              const SignedLambda x = act(sigma, {s.gen.i, s.gen.j, 1});
              moved.push_back({{x.i, x.j}, s.exp * x.sign});
            }
            EXPECT_EQ(rewrite_tau(mu * w * invert(mu)), normal_form(RaagWord(n, moved)));
          });
}

TEST(Decompose, Examples) {
  const Decomposition d = decompose(W(4, "s1"));
  EXPECT_EQ(d.pure, R(4, "L1.2"));
  EXPECT_EQ(d.perm.images(), (std::vector<int>{2, 1, 3, 4}));
  const Decomposition e = decompose(W(3, "r1 r2"));
  EXPECT_TRUE(e.pure.empty());
  EXPECT_EQ(e.perm, pi_image(W(3, "r1 r2")));
}

TEST(Decompose, Reassembles) {
  for_all(44, 300,
          [](Rng &rng) { return random_vword(pick(rng, 2, 6), pick(rng, 0, 16), rng); },
          [](const VWord &w) {
            const Decomposition d = decompose(w);
            EXPECT_EQ(d.perm, pi_image(w));
            const VWord back = expand_to_vtn(d.pure) * schreier_word(schreier_tuple(d.perm));
            EXPECT_TRUE(vt_equal(back, w));
            EXPECT_EQ(normal_form(d.pure), d.pure);
          });
}

TEST(VtEqual, Examples) {
  EXPECT_TRUE(vt_equal(W(3, "s1 s1"), W(3, "")));
  EXPECT_TRUE(vt_equal(W(3, "r1 r2 r1"), W(3, "r2 r1 r2")));
  EXPECT_FALSE(vt_equal(W(3, "s1 s2"), W(3, "s2 s1")));
  EXPECT_FALSE(vt_equal(W(3, "s1"), W(3, "r1")));
  EXPECT_TRUE(vt_equal(W(4, "s1 s3"), W(4, "s3 s1")));
  EXPECT_TRUE(vt_equal(W(3, "r1 r2 s1"), W(3, "s2 r1 r2")));
  EXPECT_TRUE(vt_is_identity(W(4, "s1 s3 s1 s3")));
  EXPECT_FALSE(vt_is_identity(W(3, "s1 s2 s1 s2")));
  EXPECT_THROW(vt_equal(W(3, "s1"), W(4, "s1")), Error);
}

TEST(VtEqual, InsertingRelatorKeepsElement) {
  for_all(45, 300,
          [](Rng &rng) {
            const int n = pick(rng, 3, 6);
            const VWord w = random_vword(n, pick(rng, 0, 14), rng);
            const auto rels = defining_relators(n).relators;
            const VWord &r = rels[pick(rng, 0, static_cast<int>(rels.size()) - 1)].word;
            const std::size_t cut = pick(rng, 0, static_cast<int>(w.size()));
            std::vector<VGen> ls(w.letters().begin(), w.letters().begin() + cut);
            ls.insert(ls.end(), r.letters().begin(), r.letters().end());
            ls.insert(ls.end(), w.letters().begin() + cut, w.letters().end());
            return std::pair{w, VWord(n, ls)};
          },
          [](const auto &c) { EXPECT_TRUE(vt_equal(c.first, c.second)); });
}
