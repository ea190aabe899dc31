#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vtwin/word.hpp"

namespace vtwin {

// Generator lambda_{i,j} of PVT_n, 1 <= i < j <= n. The derived ordering is
// lexicographic on (i, j), which is the total order used by normal_form().
struct LambdaGen {
  int i;
  int j;

  friend constexpr auto operator<=>(const LambdaGen &,
                                    const LambdaGen &) = default;
};

std::string to_string(LambdaGen g);

constexpr int generator_count(int n) { return n * (n - 1) / 2; }
int generator_index(int n, LambdaGen g);
LambdaGen generator_at(int n, int index);
std::vector<LambdaGen> generators(int n);

// Distinct generators commute iff their index pairs are disjoint.
constexpr bool commute(LambdaGen a, LambdaGen b) {
  return a.i != b.i && a.i != b.j && a.j != b.i && a.j != b.j;
}

struct Syllable {
  LambdaGen gen;
  std::int64_t exp;

  friend bool operator==(const Syllable &, const Syllable &) = default;
};

class RaagWord {
public:
  explicit RaagWord(int strands, std::vector<Syllable> syllables = {});

  static RaagWord generator(int strands, LambdaGen g, std::int64_t exp = 1);

  // Tokens `L<i>.<j>` with an optional `^<int>` exponent, e.g.
  // `L1.2 L3.4^-1`.
  static RaagWord parse(int strands, std::string_view text);

  int strands() const { return strands_; }
  std::span<const Syllable> syllables() const { return syllables_; }
  std::size_t size() const { return syllables_.size(); }
  bool empty() const { return syllables_.empty(); }
  std::int64_t letter_count() const;

  RaagWord inverse() const;
  std::string str() const;

  RaagWord &operator*=(const RaagWord &rhs);
  friend RaagWord operator*(RaagWord lhs, const RaagWord &rhs) {
    return lhs *= rhs;
  }

  // Syntactic equality; use raag_equal() for equality in the group.
  friend bool operator==(const RaagWord &, const RaagWord &) = default;

private:
  int strands_;
  std::vector<Syllable> syllables_;
};

RaagWord power(const RaagWord &w, std::int64_t k);
RaagWord commutator(const RaagWord &a, const RaagWord &b);

// Fully reduced and canonical: cancels across commuting blocks, then emits
// the least available generator first. Equal group elements give identical
// results.
RaagWord normal_form(const RaagWord &w);

bool raag_equal(const RaagWord &u, const RaagWord &v);

class AbelianImage {
public:
  explicit AbelianImage(int strands);

  std::int64_t operator[](LambdaGen g) const;
  std::span<const std::int64_t> counts() const { return counts_; }
  bool is_zero() const;

  AbelianImage &operator+=(const AbelianImage &rhs);
  friend bool operator==(const AbelianImage &, const AbelianImage &) = default;

private:
  friend AbelianImage abelianize(const RaagWord &w);

  int strands_;
  std::vector<std::int64_t> counts_;
};

AbelianImage abelianize(const RaagWord &w);

// lambda_{i,i+1} = s_i rho_i and
// lambda_{i,j} = rho_{j-1} ... rho_{i+1} lambda_{i,i+1} rho_{i+1} ... rho_{j-1}.
VWord lambda_word(int n, LambdaGen g);
VWord expand_to_vtn(const RaagWord &w);

} // namespace vtwin
