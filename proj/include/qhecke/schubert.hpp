#ifndef QHECKE_SCHUBERT_HPP
#define QHECKE_SCHUBERT_HPP

#include "qhecke/hecke.hpp"

namespace qhecke {

// Schubert basis of the coinvariant algebra Sym(t*)/(invariants), indexed by
// the Weyl enumeration order.  The top class is prod(alpha)/|W|; lower ones
// come from Demazure operators along reduced words of w^{-1} w0.
struct SchubertBasis {
    std::vector<Poly> sigma; // degree of sigma[w] is l(w)
};

SchubertBasis schubert_basis(const RootSystem &rs);

// Coefficients of the class of f in the Schubert basis: c_w = (d_w f)(0).
std::vector<Rational> expand_in_schubert(const RootSystem &rs, const Poly &f);

// duality (d_v sigma_w)(0) = delta_{v,w}
CheckList check_schubert_duality(const RootSystem &rs, const SchubertBasis &sb);

} // namespace qhecke

#endif
