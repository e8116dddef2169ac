#include "qhecke/rational.hpp"

#include "qhecke/errors.hpp"

#include <ostream>

namespace qhecke {

Rational Rational::parse(const std::string &s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw Error("Rational::parse: bad literal '" + s + "'");
    q.canonicalize();
    return Rational(q);
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream &operator<<(std::ostream &os, const Rational &r) {
    return os << r.v_;
}

Rational rat_gcd(const Rational &a, const Rational &b) {
    if (a.is_zero())
        return b.abs();
    if (b.is_zero())
        return a.abs();
    mpz_class n, d;
    mpz_gcd(n.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
    mpz_lcm(d.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
}

} // namespace qhecke
