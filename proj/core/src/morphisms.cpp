#include "vtwin/morphisms.hpp"

#include <algorithm>
#include <cctype>

#include "vtwin/error.hpp"

namespace vtwin {

namespace {

void check_same(int a, int b) {
  if (a != b)
    throw Error(Errc::invalid_input, "strand counts differ: " + std::to_string(a) +
                                         " vs " + std::to_string(b));
}

RaagWord gen_word(int n, LambdaGen g, std::int64_t exp = 1) {
  return RaagWord::generator(n, g, exp);
}

std::vector<RaagWord> apply_all(const GroupEndo &outer,
                                const std::vector<RaagWord> &words) {
  std::vector<RaagWord> out;
  out.reserve(words.size());
  for (const RaagWord &w : words)
    out.push_back(endo_apply(outer, w));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

// Builds an automorphism from a generator map and the map of its inverse.
template <class Fwd, class Bwd>
GroupEndo make_auto(int n, Fwd forward, Bwd backward) {
  std::vector<RaagWord> images;
  std::vector<RaagWord> inverse_images;
  for (LambdaGen g : generators(n)) {
    images.push_back(forward(g));
    inverse_images.push_back(backward(g));
  }
  GroupEndo e(n, std::move(images));
  e.certify_inverse(GroupEndo(n, std::move(inverse_images)));
  return e;
}

} // namespace

GroupEndo::GroupEndo(int strands, std::vector<RaagWord> images)
    : strands_(strands), images_(std::move(images)) {
  if (strands_ < 2)
    throw Error(Errc::invalid_strand_count,
                "strand count must be at least 2, got " + std::to_string(strands_));
  if (images_.size() != static_cast<std::size_t>(generator_count(strands_)))
    throw Error(Errc::invalid_input, "expected one image per generator");
  for (RaagWord &w : images_) {
    check_same(strands_, w.strands());
    w = normal_form(w);
  }
}

GroupEndo GroupEndo::identity(int strands) {
  std::vector<RaagWord> images;
  for (LambdaGen g : generators(strands))
    images.push_back(gen_word(strands, g));
  GroupEndo e(strands, images);
  e.inverse_images_ = std::move(images);
  return e;
}

GroupEndo GroupEndo::parse(int strands, std::string_view text) {
  std::vector<RaagWord> images;
  for (LambdaGen g : generators(strands))
    images.push_back(gen_word(strands, g));
  std::vector<char> seen(images.size(), 0);

  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos)
      line_end = text.size();
    const std::string_view line = text.substr(line_start, line_end - line_start);
    if (!trim(line).empty()) {
      const std::size_t arrow = line.find("->");
      if (arrow == std::string_view::npos)
        throw ParseError(line_start, "expected '->'");
      RaagWord lhs(strands), rhs(strands);
      try {
        lhs = RaagWord::parse(strands, line.substr(0, arrow));
      } catch (const ParseError &e) {
        throw ParseError(line_start + e.position(), e.detail());
      }
      try {
        rhs = RaagWord::parse(strands, line.substr(arrow + 2));
      } catch (const ParseError &e) {
        throw ParseError(line_start + arrow + 2 + e.position(), e.detail());
      }
      if (lhs.size() != 1 || lhs.syllables()[0].exp != 1)
        throw ParseError(line_start, "left side must be a single generator");
      const int index = generator_index(strands, lhs.syllables()[0].gen);
      if (seen[index])
        throw ParseError(line_start, "generator " + lhs.str() + " listed twice");
      seen[index] = 1;
      images[index] = rhs;
    }
    line_start = line_end + 1;
  }
  return GroupEndo(strands, std::move(images));
}

const RaagWord &GroupEndo::image(LambdaGen g) const {
  return images_[generator_index(strands_, g)];
}

GroupEndo GroupEndo::inverse() const {
  if (!inverse_images_)
    throw Error(Errc::not_applicable, "no inverse has been certified");
  GroupEndo inv(strands_, *inverse_images_);
  inv.inverse_images_ = images_;
  return inv;
}

void GroupEndo::certify_inverse(const GroupEndo &candidate) {
  check_same(strands_, candidate.strands_);
  const std::vector<RaagWord> there = apply_all(*this, candidate.images_);
  const std::vector<RaagWord> back = apply_all(candidate, images_);
  const std::vector<LambdaGen> gens = generators(strands_);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const RaagWord g = gen_word(strands_, gens[k]);
    if (there[k] != g || back[k] != g)
      throw Error(Errc::invalid_input,
                  "candidate is not an inverse at " + to_string(gens[k]));
  }
  inverse_images_ = candidate.images_;
}

void GroupEndo::attach_inverse(std::vector<RaagWord> inverse_images) {
  inverse_images_ = std::move(inverse_images);
}

std::string GroupEndo::str() const {
  std::string out;
  const std::vector<LambdaGen> gens = generators(strands_);
  for (std::size_t k = 0; k < gens.size(); ++k)
    out += to_string(gens[k]) + " -> " + images_[k].str() + "\n";
  return out;
}

RaagWord endo_apply(const GroupEndo &e, const RaagWord &w) {
  check_same(e.strands(), w.strands());
  RaagWord out(e.strands());
  for (const Syllable &s : w.syllables())
    out *= power(e.image(s.gen), s.exp);
  return normal_form(out);
}

GroupEndo endo_compose(const GroupEndo &outer, const GroupEndo &inner) {
  check_same(outer.strands(), inner.strands());
  GroupEndo out(outer.strands(), apply_all(outer, inner.images()));
  if (outer.is_automorphism() && inner.is_automorphism()) {
    const GroupEndo outer_inv = outer.inverse();
    const GroupEndo inner_inv = inner.inverse();
    out.attach_inverse(apply_all(inner_inv, outer_inv.images()));
  }
  return out;
}

GroupEndo endo_power(const GroupEndo &e, int k) {
  const GroupEndo base = k < 0 ? e.inverse() : e;
  GroupEndo out = GroupEndo::identity(e.strands());
  for (int t = 0; t < std::abs(k); ++t)
    out = endo_compose(base, out);
  return out;
}

bool endo_equal(const GroupEndo &a, const GroupEndo &b) {
  check_same(a.strands(), b.strands());
  return a.images() == b.images();
}

bool endo_is_identity(const GroupEndo &e) {
  return endo_equal(e, GroupEndo::identity(e.strands()));
}

RaagWord f_map(int n, const RaagWord &w) {
  if (n < 3)
    throw Error(Errc::invalid_strand_count, "f_map needs n >= 3");
  check_same(n, w.strands());
  std::vector<Syllable> kept;
  for (const Syllable &s : w.syllables())
    if (s.gen.j != n)
      kept.push_back(s);
  return normal_form(RaagWord(n - 1, std::move(kept)));
}

RaagWord include(int n, const RaagWord &w) {
  check_same(n - 1, w.strands());
  return RaagWord(n, std::vector<Syllable>(w.syllables().begin(), w.syllables().end()));
}

RaagWord u_generator(int n, const RaagWord &mu, int i) {
  if (i < 1 || i > n - 1)
    throw Error(Errc::invalid_input, "index " + std::to_string(i) + " out of range");
  const RaagWord m = include(n, mu);
  return normal_form(m * gen_word(n, {i, n}) * m.inverse());
}

RaagWord alpha(int n, std::int64_t e) {
  if (n < 3)
    throw Error(Errc::invalid_strand_count, "alpha needs n >= 3");
  const LambdaGen a{n - 2, n - 1};
  return normal_form(gen_word(n, a, -e) * gen_word(n, {n - 1, n}) * gen_word(n, a, e));
}

GroupEndo perm_auto(const Perm &sigma) {
  const int n = sigma.size();
  const Perm inv = sigma.inverse();
  auto by = [n](const Perm &p) {
    return [n, p](LambdaGen g) {
      const SignedLambda x = act(p, SignedLambda{g.i, g.j, 1});
      return gen_word(n, {x.i, x.j}, x.sign);
    };
  };
  return make_auto(n, by(sigma), by(inv));
}

GroupEndo theta(int n, int k) {
  if (k < 1 || k > n - 1)
    throw Error(Errc::invalid_input, "theta index " + std::to_string(k) + " out of range");
  return endo_compose(inversion(n, {k, k + 1}),
                      perm_auto(Perm::transposition(n, k, k + 1)));
}

GroupEndo inversion(int n, LambdaGen g) {
  generator_index(n, g);
  auto flip = [n, g](LambdaGen a) { return gen_word(n, a, a == g ? -1 : 1); };
  return make_auto(n, flip, flip);
}

GroupEndo inner(int n, const RaagWord &g) {
  check_same(n, g.strands());
  const RaagWord gi = g.inverse();
  return make_auto(
      n, [&](LambdaGen a) { return gi * gen_word(n, a) * g; },
      [&](LambdaGen a) { return g * gen_word(n, a) * gi; });
}

GroupEndo partial_conj(int n, LambdaGen v, const VertexSet &component_union) {
  VertexSet c = component_union;
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  std::size_t covered = 0;
  for (const VertexSet &comp : components_minus_star(n, v)) {
    std::size_t hits = 0;
    for (LambdaGen a : comp)
      hits += std::binary_search(c.begin(), c.end(), a) ? 1 : 0;
    if (hits != 0 && hits != comp.size())
      throw Error(Errc::not_a_component_union,
                  "set splits a component of the complement of st(" +
                      to_string(v) + ")");
    covered += hits;
  }
  if (covered != c.size())
    throw Error(Errc::not_a_component_union,
                "set meets st(" + to_string(v) + ")");
  const RaagWord w = gen_word(n, v);
  const RaagWord wi = gen_word(n, v, -1);
  auto in_c = [&](LambdaGen a) { return std::binary_search(c.begin(), c.end(), a); };
  return make_auto(
      n,
      [&](LambdaGen a) { return in_c(a) ? wi * gen_word(n, a) * w : gen_word(n, a); },
      [&](LambdaGen a) { return in_c(a) ? w * gen_word(n, a) * wi : gen_word(n, a); });
}

GroupEndo transvection(int n, LambdaGen a, LambdaGen b) {
  if (!dominates(n, a, b))
    throw Error(Errc::domination_violation,
                to_string(a) + " is not dominated by " + to_string(b));
  return make_auto(
      n,
      [&](LambdaGen x) { return x == a ? gen_word(n, a) * gen_word(n, b) : gen_word(n, x); },
      [&](LambdaGen x) {
        return x == a ? gen_word(n, a) * gen_word(n, b, -1) : gen_word(n, x);
      });
}

GroupEndo graph_auto(int n, const std::vector<int> &vertex_images) {
  const DefGraph g(n);
  const int count = g.vertex_count();
  if (vertex_images.size() != static_cast<std::size_t>(count))
    throw Error(Errc::invalid_input, "expected one image per vertex");
  std::vector<int> preimage(static_cast<std::size_t>(count), -1);
  for (int v = 0; v < count; ++v) {
    const int w = vertex_images[v];
    if (w < 0 || w >= count || preimage[w] >= 0)
      throw Error(Errc::invalid_input, "vertex images are not a permutation");
    preimage[w] = v;
  }
  for (int u = 0; u < count; ++u)
    for (int v = u + 1; v < count; ++v)
      if (g.adjacent(u, v) != g.adjacent(vertex_images[u], vertex_images[v]))
        throw Error(Errc::invalid_input, "vertex map does not preserve adjacency");
  return make_auto(
      n, [&](LambdaGen a) { return gen_word(n, g.vertex(vertex_images[generator_index(n, a)])); },
      [&](LambdaGen a) { return gen_word(n, g.vertex(preimage[generator_index(n, a)])); });
}

} // namespace vtwin
