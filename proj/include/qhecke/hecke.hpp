#ifndef QHECKE_HECKE_HPP
#define QHECKE_HECKE_HPP

#include "qhecke/check.hpp"
#include "qhecke/matrix.hpp"
#include "qhecke/poly.hpp"
#include "qhecke/ratfunc.hpp"
#include "qhecke/root_system.hpp"

#include <map>
#include <optional>

namespace qhecke {

enum class Flavor { Ht, Nil };

// Normal-ordered element sum_w f_w(x,t) w (or f_w wbar for the nil flavor):
// coefficients always sit to the left of the group part.  Equality of algebra
// elements is coefficient-wise equality in this form.
struct HeckeElement {
    Flavor flavor = Flavor::Ht;
    std::map<int, Poly> terms; // Weyl index -> coefficient in Sym(t*)[t]

    bool is_zero() const { return terms.empty(); }
    void add(int w, const Poly &c);

    friend HeckeElement operator+(const HeckeElement &a, const HeckeElement &b);
    friend HeckeElement operator-(const HeckeElement &a, const HeckeElement &b);
    HeckeElement operator-() const;
    HeckeElement scaled(const Poly &c) const;
    HeckeElement scaled(const Rational &c) const;
    friend bool operator==(const HeckeElement &a, const HeckeElement &b) {
        return a.flavor == b.flavor && a.terms == b.terms;
    }
    std::string str(const std::vector<std::string> &names = {}) const;
};

// The graded affine Hecke algebra H_t (flavor Ht) or its nil degeneration
// (flavor Nil), together with the polynomial module M_t = Sym(t*)[t],
// respectively Mbar = Sym(t*).
//
// Variable layout of all coefficients: x_0..x_{r-1} are the fundamental
// weight coordinates, variable r is t (unused in the nil flavor).
class HeckeAlgebra {
  public:
    HeckeAlgebra(const RootSystem &rs, Flavor flavor)
        : rs_(&rs), W_(&rs.weyl()), flavor_(flavor), nvars_(rs.rank() + 1) {}

    const RootSystem &rs() const { return *rs_; }
    const WeylGroup &weyl() const { return *W_; }
    Flavor flavor() const { return flavor_; }
    int nvars() const { return nvars_; }

    // polynomials for weights
    Poly x_poly(const IVec &wt) const;
    Poly x_poly(const QVec &wt) const;
    Poly alpha_poly(int i) const; // simple root alpha_i as a linear form
    Poly t_poly() const { return Poly::variable(nvars_, nvars_ - 1); }
    Poly one_poly() const { return Poly::constant(nvars_, Rational(1)); }

    // elements
    HeckeElement zero() const { return HeckeElement{flavor_, {}}; }
    HeckeElement one() const { return group(W_->identity()); }
    HeckeElement group(int w) const;
    HeckeElement x(const IVec &wt) const;
    HeckeElement x(const QVec &wt) const;
    HeckeElement reflection(int root_idx) const { return group(W_->reflection(root_idx)); }

    // normal-ordered product
    HeckeElement multiply(const HeckeElement &a, const HeckeElement &b) const;
    HeckeElement commutator(const HeckeElement &a, const HeckeElement &b) const;
    HeckeElement conjugate(int w, const HeckeElement &h) const; // w h w^{-1}

    // substitution f^w (f composed with the action of w)
    Poly subst_simple(int i, const Poly &f) const;
    Poly subst_w(int w, const Poly &f) const;
    // Demazure operator (f - f^{s_i}) / alpha_i
    Poly demazure(int i, const Poly &f) const;

    // module action: Hecke reflection on M_t (Ht) or Demazure on Mbar (Nil)
    Poly act_simple(int i, const Poly &f) const;
    Poly act_word(const std::vector<int> &word, const Poly &f) const;
    Poly act_group(int w, const Poly &f) const { return act_word(W_->word(w), f); }
    Poly act_element(const HeckeElement &h, const Poly &f) const;

    // order m_ij of s_i s_j
    int braid_order(int i, int j) const;

  private:
    // normal-orders w * g as sum_u h_u * u
    std::map<int, Poly> push_group(int w, const Poly &g) const;
    int group_mult(int u, int v, bool &vanished) const;

    const RootSystem *rs_;
    const WeylGroup *W_;
    Flavor flavor_;
    int nvars_;
};

// Relation suite of the algebra: exact normal-ordered identities plus module
// operator identities on arguments spanning degree <= 2 l(w0) (the module
// operators of a bond (i,j) are linear over the variables they do not touch,
// so two-variable arguments span the full check).
CheckList check_relations(const RootSystem &rs, Flavor flavor);

// All reduced words of every w give the same module operator; non-reduced
// compositions act by zero (nil flavor).
CheckList check_nil_well_defined(const RootSystem &rs);

// ---------------------------------------------------------------------------
// principal series

// |W|-dimensional module with generator matrices over F; basis w (x) 1 in the
// Weyl enumeration order.  Column j of a matrix holds the coefficients of the
// image of basis vector j.
template <typename F>
struct FiniteModuleT {
    Flavor flavor = Flavor::Ht;
    std::vector<Matrix<F>> x; // matrices of x_{omega_k}, k = 0..r-1
    std::vector<Matrix<F>> s; // matrices of the simple generators
    int dim() const { return x.empty() ? 0 : x[0].rows(); }
};

using FiniteModule = FiniteModuleT<RatFunc>;
using FiniteModuleQ = FiniteModuleT<Rational>;

// Principal series M_{a,t} (Ht) or Mbar_a (Nil) with symbolic (a, t):
// matrices over the fraction field of Q[a_1..a_r, t] (entries here are in
// fact polynomial).  Variable layout: a_1..a_r then t.
FiniteModule principal_series(const RootSystem &rs, Flavor flavor);

// Specialization at a rational point (a, t).
FiniteModuleQ specialize(const FiniteModule &m, const QVec &a, const Rational &t);

// The W-orbit model of M_{xi,t} at a rational point a (generic: all
// <alpha_i, w(a)> nonzero): functions on the orbit {w(a)} with the same
// generator action.  Throws Error at non-generic points.
FiniteModuleQ orbit_model(const RootSystem &rs, Flavor flavor, const QVec &a,
                          const Rational &t);

// Solves T rho_M(g) = rho_N(g) T over all generators; returns an invertible
// solution if one exists.
std::optional<Matrix<Rational>> find_intertwiner(const FiniteModuleQ &M,
                                                 const FiniteModuleQ &N);

// Generator matrices satisfy the defining relations exactly; `T` is the
// element of F playing the role of t in the cross relation (the symbolic t
// for RatFunc matrices, its specialized value for Rational ones, 1 for nil).
template <typename F>
CheckList check_module_relations(const RootSystem &rs, const FiniteModuleT<F> &m,
                                 const F &one, const F &T);

} // namespace qhecke

#endif
