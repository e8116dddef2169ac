#ifndef QHECKE_RATFUNC_HPP
#define QHECKE_RATFUNC_HPP

#include "qhecke/poly.hpp"

namespace qhecke {

// Rational function num/den, reduced by the full multivariate gcd at
// construction and normalized so the denominator is monic in grlex.  Keeping
// fractions fully reduced makes flatness and curvature checks return literal
// zero rather than an unreduced zero-equivalent.
class RatFunc {
  public:
    RatFunc() : num_(0), den_(Poly::constant(0, Rational(1))) {}
    RatFunc(Poly num, Poly den);
    explicit RatFunc(const Poly &num) : num_(num), den_(Poly::constant(num.nvars(), Rational(1))) {}
    static RatFunc constant(int nvars, const Rational &c) {
        return RatFunc(Poly::constant(nvars, c));
    }
    static RatFunc zero(int nvars) { return RatFunc(Poly(nvars)); }

    const Poly &num() const { return num_; }
    const Poly &den() const { return den_; }
    int nvars() const { return num_.nvars(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc &a, const RatFunc &b);
    friend RatFunc operator-(const RatFunc &a, const RatFunc &b);
    friend RatFunc operator*(const RatFunc &a, const RatFunc &b);
    friend RatFunc operator/(const RatFunc &a, const RatFunc &b);
    RatFunc &operator+=(const RatFunc &o) { return *this = *this + o; }
    RatFunc &operator-=(const RatFunc &o) { return *this = *this - o; }
    RatFunc &operator*=(const RatFunc &o) { return *this = *this * o; }
    RatFunc &operator/=(const RatFunc &o) { return *this = *this / o; }
    friend RatFunc operator*(const RatFunc &a, const Rational &c) {
        RatFunc r = a;
        r.num_ = r.num_ * c;
        if (c.is_zero()) return RatFunc(r.num_);
        return r;
    }
    friend RatFunc operator*(const Rational &c, const RatFunc &a) { return a * c; }

    friend bool operator==(const RatFunc &a, const RatFunc &b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc &a, const RatFunc &b) { return !(a == b); }

    RatFunc inverse() const;
    // Evaluation; throws Error on a denominator zero.
    Rational eval(const std::vector<Rational> &point) const;
    RatFunc eval_var(int var, const Rational &value) const;
    // Substitutes polynomial images for the variables.
    RatFunc subst(const std::vector<Poly> &images) const;
    RatFunc extended(int new_nvars) const;

    std::string str(const std::vector<std::string> &names = {}) const;

  private:
    Poly num_, den_;
};

} // namespace qhecke

#endif
