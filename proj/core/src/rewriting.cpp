#include "vtwin/rewriting.hpp"

#include "vtwin/error.hpp"

namespace vtwin {

namespace {

RaagWord signed_lambda_word(int n, SignedLambda x) {
  return RaagWord::generator(n, LambdaGen{x.i, x.j}, x.sign);
}

} // namespace

RaagWord gamma(const Perm &mu, VGen a) {
  const int n = mu.size();
  if (!a.is_s())
    return RaagWord(n);
  return signed_lambda_word(n, act(mu, SignedLambda{a.index, a.index + 1, 1}));
}

RaagWord rewrite_tau(const VWord &w) {
  const int n = w.strands();
  Perm sigma(n);
  std::vector<Syllable> emitted;
  emitted.reserve(w.size());
  for (VGen a : w.letters()) {
    if (a.is_s()) {
      const SignedLambda x = act(sigma, SignedLambda{a.index, a.index + 1, 1});
      emitted.push_back({LambdaGen{x.i, x.j}, x.sign});
    }
    sigma = sigma * Perm::transposition(n, a.index, a.index + 1);
  }
  if (!sigma.is_identity())
    throw Error(Errc::not_in_kernel,
                "word maps to " + sigma.str() + ", not the identity");
  return normal_form(RaagWord(n, std::move(emitted)));
}

bool vt_is_identity(const VWord &w) {
  if (!pi_image(w).is_identity())
    return false;
  return rewrite_tau(w).empty();
}

bool vt_equal(const VWord &u, const VWord &v) {
  if (u.strands() != v.strands())
    throw Error(Errc::invalid_input, "words over different strand counts");
  return vt_is_identity(u * invert(v));
}

Decomposition decompose(const VWord &w) {
  const Perm sigma = pi_image(w);
  const VWord coset = schreier_word(schreier_tuple(sigma));
  return {rewrite_tau(w * invert(coset)), sigma};
}

} // namespace vtwin
