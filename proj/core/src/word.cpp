#include "vtwin/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "vtwin/error.hpp"

namespace vtwin {

namespace {

void check_strands(int n) {
  if (n < 2)
    throw Error(Errc::invalid_strand_count,
                "strand count must be at least 2, got " + std::to_string(n));
}

void check_letter(int n, VGen g) {
  if (g.index < 1 || g.index > n - 1)
    throw Error(Errc::invalid_input, "letter " + to_string(g) +
                                         " out of range for n = " +
                                         std::to_string(n));
}

} // namespace

std::string to_string(VGen g) {
  return (g.is_s() ? "s" : "r") + std::to_string(g.index);
}

VWord::VWord(int strands, std::vector<VGen> letters)
    : strands_(strands), letters_(std::move(letters)) {
  check_strands(strands_);
  for (VGen g : letters_)
    check_letter(strands_, g);
}

VWord VWord::parse(int strands, std::string_view text) {
  check_strands(strands);
  std::vector<VGen> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    const char head = text[pos];
    if (head != 's' && head != 'r')
      throw ParseError(start, std::string("expected 's' or 'r', found '") +
                                  head + "'");
    ++pos;
    std::size_t end = pos;
    while (end < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[end])))
      ++end;
    if (end == pos)
      throw ParseError(pos, "expected a generator index");
    int index = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, index);
    if (ec != std::errc{})
      throw ParseError(pos, "generator index out of range");
    if (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])))
      throw ParseError(end, "unexpected character after generator");
    if (index < 1 || index > strands - 1)
      throw ParseError(start, "index " + std::to_string(index) +
                                  " outside 1.." + std::to_string(strands - 1));
    letters.push_back({head == 's' ? GenKind::S : GenKind::R, index});
    pos = end;
  }
  return VWord(strands, std::move(letters));
}

std::string VWord::str() const {
  std::string out;
  for (VGen g : letters_) {
    if (!out.empty())
      out += ' ';
    out += to_string(g);
  }
  return out;
}

VWord &VWord::operator*=(const VWord &rhs) {
  if (rhs.strands_ != strands_)
    throw Error(Errc::invalid_input, "strand counts differ");
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

VWord free_reduce(const VWord &w) {
  std::vector<VGen> out;
  out.reserve(w.size());
  for (VGen g : w.letters()) {
    if (!out.empty() && out.back() == g)
      out.pop_back();
    else
      out.push_back(g);
  }
  return VWord(w.strands(), std::move(out));
}

VWord invert(const VWord &w) {
  std::vector<VGen> letters(w.letters().rbegin(), w.letters().rend());
  return VWord(w.strands(), std::move(letters));
}

VWord power(const VWord &w, int k) {
  const VWord base = k < 0 ? invert(w) : w;
  VWord out(w.strands());
  for (int t = 0; t < std::abs(k); ++t)
    out *= base;
  return out;
}

VWord commutator(const VWord &a, const VWord &b) {
  return invert(a) * invert(b) * a * b;
}

const char *to_string(RelationFamily family) noexcept {
  switch (family) {
  case RelationFamily::s_square:
    return "s-square";
  case RelationFamily::s_far_commute:
    return "s-far-commute";
  case RelationFamily::r_square:
    return "r-square";
  case RelationFamily::r_far_commute:
    return "r-far-commute";
  case RelationFamily::r_braid:
    return "r-braid";
  case RelationFamily::mixed_far_commute:
    return "mixed-far-commute";
  case RelationFamily::mixed_twist:
    return "mixed-twist";
  }
  return "unknown";
}

RelatorSet defining_relators(int n) {
  check_strands(n);
  using F = RelationFamily;
  RelatorSet set{n, {}};
  auto add = [&](F family, std::vector<VGen> letters) {
    set.relators.push_back({family, VWord(n, std::move(letters))});
  };
  const auto s = VGen::s;
  const auto r = VGen::r;

  for (int i = 1; i <= n - 1; ++i)
    add(F::s_square, {s(i), s(i)});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      add(F::s_far_commute, {s(i), s(j), s(i), s(j)});
  for (int i = 1; i <= n - 1; ++i)
    add(F::r_square, {r(i), r(i)});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      add(F::r_far_commute, {r(i), r(j), r(i), r(j)});
  for (int i = 1; i <= n - 2; ++i)
    add(F::r_braid, {r(i), r(i + 1), r(i), r(i + 1), r(i), r(i + 1)});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j)
      if (std::abs(i - j) >= 2)
        add(F::mixed_far_commute, {r(i), s(j), r(i), s(j)});
  for (int i = 1; i <= n - 2; ++i)
    add(F::mixed_twist, {r(i), r(i + 1), s(i), r(i + 1), r(i), s(i + 1)});
  return set;
}

} // namespace vtwin
