#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vtwin {

enum class GenKind : std::uint8_t { S, R };

// A generator s_i or rho_i of the virtual twin group. Every generator is an
// involution, so words carry no exponents.
struct VGen {
  GenKind kind;
  int index;

  static constexpr VGen s(int i) { return {GenKind::S, i}; }
  static constexpr VGen r(int i) { return {GenKind::R, i}; }

  constexpr bool is_s() const { return kind == GenKind::S; }

  friend constexpr auto operator<=>(const VGen &, const VGen &) = default;
};

std::string to_string(VGen g);

// Word over s_1..s_{n-1}, rho_1..rho_{n-1}. Letters are stored as written;
// use free_reduce() for the reduced representative.
class VWord {
public:
  explicit VWord(int strands, std::vector<VGen> letters = {});

  // Whitespace separated `s<i>` / `r<i>` tokens; the empty string is the
  // identity.
  static VWord parse(int strands, std::string_view text);

  int strands() const { return strands_; }
  std::span<const VGen> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  std::string str() const;

  VWord &operator*=(const VWord &rhs);
  friend VWord operator*(VWord lhs, const VWord &rhs) { return lhs *= rhs; }

  friend bool operator==(const VWord &, const VWord &) = default;

private:
  int strands_;
  std::vector<VGen> letters_;
};

VWord free_reduce(const VWord &w);

// Letters are involutions, so the inverse is the reversed word.
VWord invert(const VWord &w);

// w^k for any integer k; negative powers use invert().
VWord power(const VWord &w, int k);

// [a, b] = a^{-1} b^{-1} a b.
VWord commutator(const VWord &a, const VWord &b);

enum class RelationFamily {
  s_square,
  s_far_commute,
  r_square,
  r_far_commute,
  r_braid,
  mixed_far_commute,
  mixed_twist,
};

const char *to_string(RelationFamily family) noexcept;

struct Relator {
  RelationFamily family;
  VWord word;
};

struct RelatorSet {
  int strands;
  std::vector<Relator> relators;
};

// One relator per instance of the defining relations of VT_n. The mixed
// twist relation rho_i rho_{i+1} s_i = s_{i+1} rho_i rho_{i+1} is stored as
// rho_i rho_{i+1} s_i rho_{i+1} rho_i s_{i+1}.
RelatorSet defining_relators(int n);

} // namespace vtwin
