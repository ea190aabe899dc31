#pragma once

#include "vtwin/perm.hpp"
#include "vtwin/raag.hpp"
#include "vtwin/word.hpp"

namespace vtwin {

// gamma(mu, a) = (mu a)(bar(mu a))^{-1}: trivial for rho letters, the single
// signed lambda act(mu, lambda_{i,i+1}) for a = s_i.
RaagWord gamma(const Perm &mu, VGen a);

// Reidemeister-Schreier rewriting of a word in PVT_n into the lambda
// generators. Throws not_in_kernel when pi_image(w) is not the identity.
RaagWord rewrite_tau(const VWord &w);

bool vt_is_identity(const VWord &w);
bool vt_equal(const VWord &u, const VWord &v);

// w = expand_to_vtn(pure) * schreier_word(schreier_tuple(perm)).
struct Decomposition {
  RaagWord pure;
  Perm perm;
};

Decomposition decompose(const VWord &w);

} // namespace vtwin
