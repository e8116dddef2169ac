#include "qhecke/ratfunc.hpp"

#include "qhecke/errors.hpp"

namespace qhecke {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("RatFunc: zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.nvars(), Rational(1));
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = exact_divide(num_, g);
        den_ = exact_divide(den_, g);
    }
    // monic denominator
    Rational lc = den_.leading_coeff();
    if (!lc.is_one()) {
        Rational inv = lc.inverse();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc operator+(const RatFunc &a, const RatFunc &b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc &a, const RatFunc &b) {
    if (b.is_zero()) return a;
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc &a, const RatFunc &b) {
    if (a.is_zero() || b.is_zero()) return RatFunc::zero(a.nvars() ? a.nvars() : b.nvars());
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc &a, const RatFunc &b) {
    if (b.is_zero()) throw Error("RatFunc: division by zero");
    if (a.is_zero()) return a;
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw Error("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
}

Rational RatFunc::eval(const std::vector<Rational> &point) const {
    Rational d = den_.eval(point);
    if (d.is_zero()) throw Error("RatFunc::eval: denominator vanishes");
    return num_.eval(point) / d;
}

RatFunc RatFunc::eval_var(int var, const Rational &value) const {
    return RatFunc(num_.eval_var(var, value), den_.eval_var(var, value));
}

RatFunc RatFunc::subst(const std::vector<Poly> &images) const {
    return RatFunc(num_.subst(images), den_.subst(images));
}

RatFunc RatFunc::extended(int new_nvars) const {
    RatFunc r;
    r.num_ = num_.extended(new_nvars);
    r.den_ = den_.extended(new_nvars);
    return r;
}

std::string RatFunc::str(const std::vector<std::string> &names) const {
    if (is_polynomial()) {
        if (den_.leading_coeff().is_one()) return num_.str(names);
    }
    return "(" + num_.str(names) + ")/(" + den_.str(names) + ")";
}

} // namespace qhecke
