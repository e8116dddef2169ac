#ifndef QHECKE_RATIONAL_HPP
#define QHECKE_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace qhecke {

// Arbitrary-precision rational, canonical form (gcd 1, positive denominator).
// Thin wrapper over GMP's mpq_class; construction canonicalizes, arithmetic
// stays canonical.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) : v_(n, d) { v_.canonicalize(); }
    explicit Rational(const mpq_class &q) : v_(q) { v_.canonicalize(); }
    explicit Rational(const mpz_class &z) : v_(z) {}

    // Parses "n" or "n/d".
    static Rational parse(const std::string &s);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    const mpz_class &num() const { return v_.get_num(); }
    const mpz_class &den() const { return v_.get_den(); }
    const mpq_class &raw() const { return v_; }

    Rational &operator+=(const Rational &o) { v_ += o.v_; return *this; }
    Rational &operator-=(const Rational &o) { v_ -= o.v_; return *this; }
    Rational &operator*=(const Rational &o) { v_ *= o.v_; return *this; }
    Rational &operator/=(const Rational &o) { v_ /= o.v_; return *this; }

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    friend Rational operator-(const Rational &a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational &a, const Rational &b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational &a, const Rational &b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational &a, const Rational &b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational &a, const Rational &b) { return a.v_ > b.v_; }

    Rational inverse() const { return Rational(1) / *this; }
    Rational abs() const { Rational r; r.v_ = ::abs(v_); return r; }

    // "n" when the denominator is 1, otherwise "n/d".
    std::string str() const;

    friend std::ostream &operator<<(std::ostream &os, const Rational &r);

  private:
    mpq_class v_;
};

// gcd normalized to be nonnegative; gcd(0,0) = 0.  For rationals this is the
// positive generator of the fractional ideal (a,b): gcd of numerators over
// lcm of denominators.
Rational rat_gcd(const Rational &a, const Rational &b);

} // namespace qhecke

#endif
