#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vtwin/graph.hpp"
#include "vtwin/perm.hpp"
#include "vtwin/raag.hpp"

namespace vtwin {

// Endomorphism of PVT_n given by the image of every generator. It is an
// automorphism only once an explicit inverse has been attached.
class GroupEndo {
public:
  GroupEndo(int strands, std::vector<RaagWord> images);

  static GroupEndo identity(int strands);

  // One line per generator: `L<i>.<j> -> <raag word>`. Generators that are
  // not listed map to themselves.
  static GroupEndo parse(int strands, std::string_view text);

  int strands() const { return strands_; }
  const RaagWord &image(LambdaGen g) const;
  const std::vector<RaagWord> &images() const { return images_; }

  bool is_automorphism() const { return inverse_images_.has_value(); }
  GroupEndo inverse() const;

  // Attaches `candidate` as the inverse after checking both composites are
  // the identity; throws invalid_input otherwise.
  void certify_inverse(const GroupEndo &candidate);

  std::string str() const;

private:
  friend GroupEndo endo_compose(const GroupEndo &, const GroupEndo &);
  void attach_inverse(std::vector<RaagWord> inverse_images);

  int strands_;
  std::vector<RaagWord> images_;
  std::optional<std::vector<RaagWord>> inverse_images_;
};

RaagWord endo_apply(const GroupEndo &e, const RaagWord &w);

// outer o inner: apply `inner` first. Composites of automorphisms carry the
// composite inverse.
GroupEndo endo_compose(const GroupEndo &outer, const GroupEndo &inner);
GroupEndo endo_power(const GroupEndo &e, int k);
bool endo_equal(const GroupEndo &a, const GroupEndo &b);
bool endo_is_identity(const GroupEndo &e);

// f_n: deletes lambda_{i,n}; the result lives over n - 1 strands.
RaagWord f_map(int n, const RaagWord &w);
// i_n: PVT_{n-1} -> PVT_n.
RaagWord include(int n, const RaagWord &w);
// mu lambda_{i,n} mu^{-1} for mu over n - 1 strands.
RaagWord u_generator(int n, const RaagWord &mu, int i);
// lambda_{n-2,n-1}^{-e} lambda_{n-1,n} lambda_{n-2,n-1}^{e}.
RaagWord alpha(int n, std::int64_t e);

// Conjugation by rho-words: generator-wise act(sigma, .).
GroupEndo perm_auto(const Perm &sigma);
// iota_{lambda_{k,k+1}} o perm_auto(rho_k).
GroupEndo theta(int n, int k);
GroupEndo inversion(int n, LambdaGen g);
// a -> g^{-1} a g on every generator.
GroupEndo inner(int n, const RaagWord &g);
// a -> v^{-1} a v for a in C. C must be a union of components of the
// complement of st(v).
GroupEndo partial_conj(int n, LambdaGen v, const VertexSet &component_union);
// a -> a b; requires dominates(n, a, b).
GroupEndo transvection(int n, LambdaGen a, LambdaGen b);
// Generator permutation induced by a graph automorphism (vertex images as
// returned by graph_automorphisms).
GroupEndo graph_auto(int n, const std::vector<int> &vertex_images);

} // namespace vtwin
