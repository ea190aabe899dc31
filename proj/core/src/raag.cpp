#include "vtwin/raag.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <queue>

#include "vtwin/error.hpp"

namespace vtwin {

namespace {

void check_strands(int n) {
  if (n < 2)
    throw Error(Errc::invalid_strand_count,
                "strand count must be at least 2, got " + std::to_string(n));
}

void check_gen(int n, LambdaGen g) {
  if (g.i < 1 || g.i >= g.j || g.j > n)
    throw Error(Errc::invalid_input, "generator " + to_string(g) +
                                         " invalid for n = " + std::to_string(n));
}

// Appends s to a syllable-reduced word, cancelling or merging across the
// block of syllables that commute with it. Removing a syllable g^k whose
// right neighbours all commute with g cannot create a new reducible pair, so
// the output stays reduced.
void push_reduced(std::vector<Syllable> &out, Syllable s) {
  if (s.exp == 0)
    return;
  for (std::size_t k = out.size(); k-- > 0;) {
    if (out[k].gen == s.gen) {
      out[k].exp += s.exp;
      if (out[k].exp == 0)
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(k));
      return;
    }
    if (!commute(out[k].gen, s.gen))
      break;
  }
  out.push_back(s);
}

std::int64_t read_int(std::string_view text, std::size_t &pos) {
  const std::size_t start = pos;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
    ++pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
    ++pos;
  std::int64_t value = 0;
  const char *first = text.data() + start;
  if (start < pos && *first == '+')
    ++first;
  auto [ptr, ec] = std::from_chars(first, text.data() + pos, value);
  if (ec != std::errc{} || ptr != text.data() + pos)
    throw ParseError(start, "expected an integer");
  return value;
}

} // namespace

std::string to_string(LambdaGen g) {
  return "L" + std::to_string(g.i) + "." + std::to_string(g.j);
}

int generator_index(int n, LambdaGen g) {
  check_gen(n, g);
  // Rows i = 1..g.i-1 contribute n - i generators each.
  const int before = (g.i - 1) * n - (g.i - 1) * g.i / 2;
  return before + (g.j - g.i - 1);
}

LambdaGen generator_at(int n, int index) {
  if (index < 0 || index >= generator_count(n))
    throw Error(Errc::invalid_input, "generator index out of range");
  for (int i = 1; i < n; ++i) {
    const int row = n - i;
    if (index < row)
      return {i, i + 1 + index};
    index -= row;
  }
  throw Error(Errc::invalid_input, "generator index out of range");
}

std::vector<LambdaGen> generators(int n) {
  check_strands(n);
  std::vector<LambdaGen> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      out.push_back({i, j});
  return out;
}

RaagWord::RaagWord(int strands, std::vector<Syllable> syllables)
    : strands_(strands), syllables_(std::move(syllables)) {
  check_strands(strands_);
  for (const Syllable &s : syllables_) {
    check_gen(strands_, s.gen);
    if (s.exp == 0)
      throw Error(Errc::invalid_input, "syllable exponent must be nonzero");
  }
}

RaagWord RaagWord::generator(int strands, LambdaGen g, std::int64_t exp) {
  if (exp == 0)
    return RaagWord(strands);
  return RaagWord(strands, {{g, exp}});
}

RaagWord RaagWord::parse(int strands, std::string_view text) {
  check_strands(strands);
  std::vector<Syllable> syllables;
  std::size_t pos = 0;
  auto digits = [&](std::size_t &p) {
    const std::size_t start = p;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p])))
      ++p;
    if (p == start)
      throw ParseError(start, "expected an index");
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + p, value);
    if (ec != std::errc{})
      throw ParseError(start, "index out of range");
    return value;
  };
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    if (text[pos] != 'L')
      throw ParseError(pos, std::string("expected 'L', found '") + text[pos] + "'");
    ++pos;
    const int i = digits(pos);
    if (pos >= text.size() || text[pos] != '.')
      throw ParseError(pos, "expected '.'");
    ++pos;
    const int j = digits(pos);
    std::int64_t exp = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      exp = read_int(text, pos);
      if (exp == 0)
        throw ParseError(pos - 1, "exponent must be nonzero");
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
      throw ParseError(pos, "unexpected character after generator");
    if (i < 1 || i >= j || j > strands)
      throw ParseError(start, "generator L" + std::to_string(i) + "." +
                                  std::to_string(j) + " invalid for n = " +
                                  std::to_string(strands));
    syllables.push_back({{i, j}, exp});
  }
  return RaagWord(strands, std::move(syllables));
}

std::int64_t RaagWord::letter_count() const {
  std::int64_t total = 0;
  for (const Syllable &s : syllables_)
    total += std::llabs(s.exp);
  return total;
}

RaagWord RaagWord::inverse() const {
  std::vector<Syllable> out(syllables_.rbegin(), syllables_.rend());
  for (Syllable &s : out)
    s.exp = -s.exp;
  return RaagWord(strands_, std::move(out));
}

std::string RaagWord::str() const {
  std::string out;
  for (const Syllable &s : syllables_) {
    if (!out.empty())
      out += ' ';
    out += to_string(s.gen);
    if (s.exp != 1)
      out += "^" + std::to_string(s.exp);
  }
  return out;
}

RaagWord &RaagWord::operator*=(const RaagWord &rhs) {
  if (rhs.strands_ != strands_)
    throw Error(Errc::invalid_input, "strand counts differ");
  syllables_.insert(syllables_.end(), rhs.syllables_.begin(), rhs.syllables_.end());
  return *this;
}

RaagWord power(const RaagWord &w, std::int64_t k) {
  const RaagWord base = k < 0 ? w.inverse() : w;
  RaagWord out(w.strands());
  for (std::int64_t t = 0; t < std::llabs(k); ++t)
    out *= base;
  return out;
}

RaagWord commutator(const RaagWord &a, const RaagWord &b) {
  return a.inverse() * b.inverse() * a * b;
}

RaagWord normal_form(const RaagWord &w) {
  std::vector<Syllable> reduced;
  reduced.reserve(w.size());
  for (const Syllable &s : w.syllables())
    push_reduced(reduced, s);

  // Lexicographically least linearisation of the dependence order: syllable
  // p must precede q when p < q and they share or fail to commute on a
  // generator.
  const std::size_t m = reduced.size();
  std::vector<std::vector<std::size_t>> successors(m);
  std::vector<std::size_t> pending(m, 0);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = p + 1; q < m; ++q)
      if (!commute(reduced[p].gen, reduced[q].gen)) {
        successors[p].push_back(q);
        ++pending[q];
      }

  using Key = std::pair<LambdaGen, std::size_t>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> ready;
  for (std::size_t p = 0; p < m; ++p)
    if (pending[p] == 0)
      ready.push({reduced[p].gen, p});

  std::vector<Syllable> out;
  out.reserve(m);
  while (!ready.empty()) {
    const std::size_t p = ready.top().second;
    ready.pop();
    out.push_back(reduced[p]);
    for (std::size_t q : successors[p])
      if (--pending[q] == 0)
        ready.push({reduced[q].gen, q});
  }
  return RaagWord(w.strands(), std::move(out));
}

bool raag_equal(const RaagWord &u, const RaagWord &v) {
  if (u.strands() != v.strands())
    throw Error(Errc::invalid_input, "strand counts differ");
  return normal_form(u) == normal_form(v);
}

AbelianImage::AbelianImage(int strands)
    : strands_(strands),
      counts_(static_cast<std::size_t>(generator_count(strands)), 0) {
  check_strands(strands);
}

std::int64_t AbelianImage::operator[](LambdaGen g) const {
  return counts_[static_cast<std::size_t>(generator_index(strands_, g))];
}

bool AbelianImage::is_zero() const {
  for (std::int64_t c : counts_)
    if (c != 0)
      return false;
  return true;
}

AbelianImage &AbelianImage::operator+=(const AbelianImage &rhs) {
  if (rhs.strands_ != strands_)
    throw Error(Errc::invalid_input, "strand counts differ");
  for (std::size_t k = 0; k < counts_.size(); ++k)
    counts_[k] += rhs.counts_[k];
  return *this;
}

AbelianImage abelianize(const RaagWord &w) {
  AbelianImage image(w.strands());
  for (const Syllable &s : w.syllables())
    image.counts_[static_cast<std::size_t>(generator_index(w.strands(), s.gen))] += s.exp;
  return image;
}

VWord lambda_word(int n, LambdaGen g) {
  check_gen(n, g);
  std::vector<VGen> letters;
  for (int k = g.j - 1; k > g.i; --k)
    letters.push_back(VGen::r(k));
  letters.push_back(VGen::s(g.i));
  letters.push_back(VGen::r(g.i));
  for (int k = g.i + 1; k <= g.j - 1; ++k)
    letters.push_back(VGen::r(k));
  return VWord(n, std::move(letters));
}

VWord expand_to_vtn(const RaagWord &w) {
  VWord out(w.strands());
  for (const Syllable &s : w.syllables())
    out *= power(lambda_word(w.strands(), s.gen), static_cast<int>(s.exp));
  return free_reduce(out);
}

} // namespace vtwin
