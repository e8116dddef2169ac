#ifndef QHECKE_POLY_HPP
#define QHECKE_POLY_HPP

#include "qhecke/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qhecke {

// Exponent vector; all monomials of a Poly share the same length.
using Mono = std::vector<int32_t>;

inline int mono_degree(const Mono &m) {
    int d = 0;
    for (int32_t e : m) d += e;
    return d;
}

// Graded lexicographic order: total degree first, then lex with variable 0
// most significant.  This is the canonical term order of the project; all
// serialization and leading-term logic derives from it.
struct GrlexLess {
    bool operator()(const Mono &a, const Mono &b) const {
        int da = mono_degree(a), db = mono_degree(b);
        if (da != db) return da < db;
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

// Sparse multivariate polynomial over Rational with a fixed variable count.
// No zero coefficients are stored.  Variable meaning is the caller's
// convention; the usual layout is (x_1..x_r, t) with optional trailing q.
class Poly {
  public:
    using TermMap = std::map<Mono, Rational, GrlexLess>;

    Poly() : nvars_(0) {}
    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly constant(int nvars, const Rational &c);
    static Poly variable(int nvars, int var);
    static Poly monomial(int nvars, const Mono &m, const Rational &c);
    // sum_j coeffs[j] * x_j
    static Poly linear(int nvars, const std::vector<Rational> &coeffs);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term (coefficient of the zero monomial).
    Rational constant_term() const;
    int degree() const; // total degree; -1 for the zero polynomial
    int degree_in(int var) const;
    size_t term_count() const { return terms_.size(); }
    const TermMap &terms() const { return terms_; }

    const Mono &leading_mono() const;
    const Rational &leading_coeff() const;
    Rational coeff(const Mono &m) const;

    void add_term(const Mono &m, const Rational &c);

    Poly &operator+=(const Poly &o);
    Poly &operator-=(const Poly &o);
    friend Poly operator+(Poly a, const Poly &b) { return a += b; }
    friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
    friend Poly operator-(const Poly &a);
    friend Poly operator*(const Poly &a, const Poly &b);
    Poly &operator*=(const Poly &o) { *this = *this * o; return *this; }
    friend Poly operator*(const Poly &a, const Rational &c);
    friend Poly operator*(const Rational &c, const Poly &a) { return a * c; }

    friend bool operator==(const Poly &a, const Poly &b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly &a, const Poly &b) { return !(a == b); }

    Poly pow(int e) const;

    // Substitutes images[j] for variable j (all at once).
    Poly subst(const std::vector<Poly> &images) const;
    // Full evaluation.
    Rational eval(const std::vector<Rational> &point) const;
    // Evaluate one variable, keeping the ring (the variable goes unused).
    Poly eval_var(int var, const Rational &value) const;
    // Reinterpret in a ring with more variables (appended).
    Poly extended(int new_nvars) const;

    Poly derivative(int var) const;

    // Coefficients of powers of `var`, as polynomials with var's exponent
    // zeroed out.  Missing degrees are absent.
    std::map<int, Poly> coeffs_in(int var) const;
    // Inverse of coeffs_in.
    static Poly from_coeffs_in(int nvars, int var, const std::map<int, Poly> &cs);

    // gcd of all coefficients, nonnegative; 0 for the zero polynomial.
    Rational content() const;
    // this / content, with the leading coefficient made positive.
    Poly primitive_part() const;

    std::string str(const std::vector<std::string> &names = {}) const;

  private:
    int nvars_;
    TermMap terms_;
};

// Exact division: returns q with q*g == f, throws NotDivisible otherwise.
Poly exact_divide(const Poly &f, const Poly &g);

// Division with remainder by the leading term of g (grlex): f = q*g + r where
// no monomial of r is divisible by the leading monomial of g.
void divide_qr(const Poly &f, const Poly &g, Poly &q, Poly &r);

// Multivariate gcd over Q, primitive with positive leading coefficient.
// gcd(0,0) = 0; the gcd of two nonzero polynomials is normalized primitive.
Poly poly_gcd(const Poly &a, const Poly &b);

} // namespace qhecke

#endif
