#include "qhecke/schubert.hpp"

namespace qhecke {

SchubertBasis schubert_basis(const RootSystem &rs) {
    const WeylGroup &W = rs.weyl();
    HeckeAlgebra H(rs, Flavor::Nil);
    const int n = W.size();

    Poly top = H.one_poly();
    for (const auto &a : rs.positive()) {
        IVec wt = a.wt;
        top = top * H.x_poly(wt);
    }
    top = top * Rational(1, n);

    SchubertBasis sb;
    sb.sigma.assign(n, Poly(H.nvars()));
    int w0 = W.longest();
    for (int w = 0; w < n; ++w) {
        int v = W.mult(W.inverse(w), w0); // w^{-1} w0
        sb.sigma[w] = H.act_word(W.word(v), top);
    }
    return sb;
}

std::vector<Rational> expand_in_schubert(const RootSystem &rs, const Poly &f) {
    const WeylGroup &W = rs.weyl();
    HeckeAlgebra H(rs, Flavor::Nil);
    std::vector<Rational> coeffs(W.size());
    std::vector<Rational> zero(H.nvars(), Rational(0));
    for (int w = 0; w < W.size(); ++w)
        coeffs[w] = H.act_word(W.word(w), f).eval(zero);
    return coeffs;
}

CheckList check_schubert_duality(const RootSystem &rs, const SchubertBasis &sb) {
    CheckList out;
    const WeylGroup &W = rs.weyl();
    HeckeAlgebra H(rs, Flavor::Nil);
    std::vector<Rational> zero(H.nvars(), Rational(0));
    bool ok = true;
    std::string witness;
    for (int v = 0; v < W.size() && ok; ++v)
        for (int w = 0; w < W.size(); ++w) {
            Rational c = H.act_word(W.word(v), sb.sigma[w]).eval(zero);
            Rational expect(v == w ? 1 : 0);
            if (c != expect) {
                ok = false;
                witness = "(v,w)=(" + std::to_string(v) + "," + std::to_string(w) +
                          ") got " + c.str();
                break;
            }
        }
    out.add(rs.label() + ": Schubert duality (d_v sigma_w)(0) = delta", ok, witness);
    // degrees and sigma_e = 1
    bool deg_ok = sb.sigma[0] == H.one_poly();
    for (int w = 0; w < W.size(); ++w)
        if (sb.sigma[w].degree() != W.length(w)) deg_ok = false;
    out.add(rs.label() + ": Schubert degrees l(w), sigma_e = 1", deg_ok);
    return out;
}

} // namespace qhecke
