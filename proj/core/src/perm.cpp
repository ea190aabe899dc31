#include "vtwin/perm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <set>

#include "vtwin/error.hpp"

namespace vtwin {

namespace {

void check_size(int n) {
  if (n < 1)
    throw Error(Errc::invalid_strand_count,
                "permutation degree must be positive, got " + std::to_string(n));
}

std::size_t skip_space(std::string_view text, std::size_t pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
    ++pos;
  return pos;
}

// Reads a decimal point at `pos`; returns the position after it.
std::size_t read_point(std::string_view text, std::size_t pos, int n,
                       int &point) {
  std::size_t end = pos;
  while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end])))
    ++end;
  if (end == pos)
    throw ParseError(pos, "expected a point");
  auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, point);
  if (ec != std::errc{} || point < 1 || point > n)
    throw ParseError(pos, "point outside 1.." + std::to_string(n));
  return end;
}

} // namespace

Perm::Perm(int n) : images_(static_cast<std::size_t>(std::max(n, 0))) {
  check_size(n);
  std::iota(images_.begin(), images_.end(), 1);
}

Perm Perm::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  check_size(n);
  std::vector<char> seen(images.size(), 0);
  for (int x : images) {
    if (x < 1 || x > n || seen[x - 1])
      throw Error(Errc::invalid_input, "image list is not a bijection");
    seen[x - 1] = 1;
  }
  Perm p(n);
  p.images_ = std::move(images);
  return p;
}

Perm Perm::transposition(int n, int a, int b) {
  Perm p(n);
  if (a < 1 || a > n || b < 1 || b > n)
    throw Error(Errc::invalid_input, "transposition point out of range");
  std::swap(p.images_[a - 1], p.images_[b - 1]);
  return p;
}

Perm Perm::parse(int n, std::string_view text) {
  check_size(n);
  std::size_t pos = skip_space(text, 0);
  if (pos == text.size())
    throw ParseError(pos, "empty permutation");

  if (text[pos] == '[') {
    std::vector<int> images;
    pos = skip_space(text, pos + 1);
    while (pos < text.size() && text[pos] != ']') {
      if (!images.empty()) {
        if (text[pos] != ',')
          throw ParseError(pos, "expected ','");
        pos = skip_space(text, pos + 1);
      }
      int point = 0;
      pos = skip_space(text, read_point(text, pos, n, point));
      images.push_back(point);
    }
    if (pos == text.size())
      throw ParseError(pos, "missing ']'");
    if (skip_space(text, pos + 1) != text.size())
      throw ParseError(pos + 1, "trailing characters");
    if (static_cast<int>(images.size()) != n)
      throw ParseError(0, "expected " + std::to_string(n) + " images");
    try {
      return from_images(std::move(images));
    } catch (const Error &e) {
      throw ParseError(0, e.what());
    }
  }

  // Product of cycles, composed left to right.
  Perm result(n);
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw ParseError(pos, "expected '(' or '['");
    std::vector<int> cycle;
    pos = skip_space(text, pos + 1);
    while (pos < text.size() && text[pos] != ')') {
      if (text[pos] == ',') {
        pos = skip_space(text, pos + 1);
        continue;
      }
      int point = 0;
      const std::size_t at = pos;
      pos = skip_space(text, read_point(text, pos, n, point));
      if (std::find(cycle.begin(), cycle.end(), point) != cycle.end())
        throw ParseError(at, "repeated point in cycle");
      cycle.push_back(point);
    }
    if (pos == text.size())
      throw ParseError(pos, "missing ')'");
    Perm c(n);
    for (std::size_t k = 0; k < cycle.size(); ++k)
      c.images_[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
    result = result * c;
    pos = skip_space(text, pos + 1);
  }
  return result;
}

Perm Perm::inverse() const {
  Perm p(size());
  for (int x = 1; x <= size(); ++x)
    p.images_[images_[x - 1] - 1] = x;
  return p;
}

bool Perm::is_identity() const {
  for (int x = 1; x <= size(); ++x)
    if (images_[x - 1] != x)
      return false;
  return true;
}

bool Perm::is_even() const {
  std::vector<char> seen(images_.size(), 0);
  int transpositions = 0;
  for (int x = 1; x <= size(); ++x) {
    if (seen[x - 1])
      continue;
    int length = 0;
    for (int y = x; !seen[y - 1]; y = images_[y - 1]) {
      seen[y - 1] = 1;
      ++length;
    }
    transpositions += length - 1;
  }
  return transpositions % 2 == 0;
}

std::string Perm::str() const {
  std::string out = "[";
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (k)
      out += ',';
    out += std::to_string(images_[k]);
  }
  return out + "]";
}

std::string Perm::cycles() const {
  std::string out;
  std::vector<char> seen(images_.size(), 0);
  for (int x = 1; x <= size(); ++x) {
    if (seen[x - 1] || images_[x - 1] == x)
      continue;
    out += '(';
    for (int y = x; !seen[y - 1]; y = images_[y - 1]) {
      if (y != x)
        out += ' ';
      out += std::to_string(y);
      seen[y - 1] = 1;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Perm operator*(const Perm &a, const Perm &b) {
  if (a.size() != b.size())
    throw Error(Errc::invalid_input, "permutation degrees differ");
  Perm p(a.size());
  for (int x = 1; x <= a.size(); ++x)
    p.images_[x - 1] = b(a(x));
  return p;
}

std::vector<Perm> all_permutations(int n) {
  check_size(n);
  std::vector<int> row(static_cast<std::size_t>(n));
  std::iota(row.begin(), row.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(Perm::from_images(row));
  } while (std::next_permutation(row.begin(), row.end()));
  return out;
}

Perm pi_image(const VWord &w) {
  std::vector<int> images(static_cast<std::size_t>(w.strands()));
  std::iota(images.begin(), images.end(), 1);
  for (VGen g : w.letters()) {
    const int a = g.index;
    const int b = g.index + 1;
    for (int &y : images) {
      if (y == a)
        y = b;
      else if (y == b)
        y = a;
    }
  }
  return Perm::from_images(std::move(images));
}

SignedLambda SignedLambda::ordered(int a, int b) {
  if (a == b)
    throw Error(Errc::invalid_input, "lambda needs two distinct indices");
  return a < b ? SignedLambda{a, b, 1} : SignedLambda{b, a, -1};
}

std::pair<int, int> SignedLambda::head_tail() const {
  return sign > 0 ? std::pair{i, j} : std::pair{j, i};
}

std::string to_string(const SignedLambda &x) {
  std::string out = "L" + std::to_string(x.i) + "." + std::to_string(x.j);
  if (x.sign < 0)
    out += "^-1";
  return out;
}

SignedLambda act(const Perm &sigma, SignedLambda x) {
  if (x.i < 1 || x.j > sigma.size() || x.i >= x.j)
    throw Error(Errc::invalid_input, "lambda index outside the permutation degree");
  // Conjugating by a rho-word with image sigma transports indices by
  // sigma^{-1} under the left-to-right product.
  const Perm inv = sigma.inverse();
  const auto [a, b] = x.head_tail();
  return SignedLambda::ordered(inv(a), inv(b));
}

SchreierTuple schreier_tuple(const Perm &sigma) {
  const int n = sigma.size();
  if (n < 2)
    throw Error(Errc::invalid_strand_count, "schreier tuple needs n >= 2");
  SchreierTuple t{n, std::vector<int>(static_cast<std::size_t>(n - 1), 0)};
  Perm residual = sigma;
  for (int k = n - 1; k >= 1; --k) {
    // The block for k sends k+1 to i_k + 1 and every earlier block fixes
    // k+1, so i_k is read off the residual permutation.
    const int ik = residual(k + 1) - 1;
    t.indices[k - 1] = ik;
    std::vector<VGen> block;
    for (int m = k; m > ik; --m)
      block.push_back(VGen::r(m));
    residual = residual * pi_image(VWord(n, std::move(block))).inverse();
  }
  if (!residual.is_identity())
    throw Error(Errc::invalid_input, "schreier peeling did not terminate at the identity");
  return t;
}

VWord schreier_word(const SchreierTuple &t) {
  if (static_cast<int>(t.indices.size()) != t.strands - 1)
    throw Error(Errc::invalid_input, "schreier tuple has the wrong length");
  std::vector<VGen> letters;
  for (int k = 1; k <= t.strands - 1; ++k) {
    const int ik = t.indices[k - 1];
    if (ik < 0 || ik > k)
      throw Error(Errc::invalid_input, "schreier index out of range");
    for (int m = k; m > ik; --m)
      letters.push_back(VGen::r(m));
  }
  return VWord(t.strands, std::move(letters));
}

DiagonalOrbitReport diagonal_orbit_check(int n) {
  if (n < 4)
    throw Error(Errc::not_applicable,
                "disjoint lambda pairs need n >= 4, got " + std::to_string(n));
  using Pair = std::pair<SignedLambda, SignedLambda>;
  std::vector<Pair> elements;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        for (int d = 1; d <= n; ++d) {
          const std::set<int> distinct{a, b, c, d};
          if (distinct.size() == 4)
            elements.push_back(
                {SignedLambda::ordered(a, b), SignedLambda::ordered(c, d)});
        }
  std::map<Pair, std::size_t> index;
  for (std::size_t k = 0; k < elements.size(); ++k)
    index.emplace(elements[k], k);

  const std::vector<Perm> group = all_permutations(n);
  std::vector<char> visited(elements.size(), 0);
  std::size_t orbits = 0;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    if (visited[k])
      continue;
    ++orbits;
    for (const Perm &sigma : group) {
      const Pair image{act(sigma, elements[k].first),
                       act(sigma, elements[k].second)};
      visited[index.at(image)] = 1;
    }
  }

  const Pair base{SignedLambda{1, 2, 1}, SignedLambda{n - 1, n, 1}};
  std::size_t stabiliser = 0;
  for (const Perm &sigma : group)
    if (Pair{act(sigma, base.first), act(sigma, base.second)} == base)
      ++stabiliser;

  return {n, elements.size(), orbits, stabiliser};
}

} // namespace vtwin
