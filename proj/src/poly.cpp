#include "qhecke/poly.hpp"

#include "qhecke/errors.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace qhecke {

Poly Poly::constant(int nvars, const Rational &c) {
    Poly p(nvars);
    if (!c.is_zero()) p.terms_.emplace(Mono(nvars, 0), c);
    return p;
}

Poly Poly::variable(int nvars, int var) {
    assert(var >= 0 && var < nvars);
    Poly p(nvars);
    Mono m(nvars, 0);
    m[var] = 1;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

Poly Poly::monomial(int nvars, const Mono &m, const Rational &c) {
    assert((int)m.size() == nvars);
    Poly p(nvars);
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
}

Poly Poly::linear(int nvars, const std::vector<Rational> &coeffs) {
    assert((int)coeffs.size() <= nvars);
    Poly p(nvars);
    for (size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j].is_zero()) continue;
        Mono m(nvars, 0);
        m[j] = 1;
        p.terms_.emplace(std::move(m), coeffs[j]);
    }
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0;
}

Rational Poly::constant_term() const {
    if (terms_.empty()) return Rational(0);
    const auto it = terms_.begin();
    if (mono_degree(it->first) == 0) return it->second;
    return Rational(0);
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    return mono_degree(terms_.rbegin()->first);
}

int Poly::degree_in(int var) const {
    int d = 0;
    for (const auto &[m, c] : terms_) d = std::max(d, (int)m[var]);
    return terms_.empty() ? -1 : d;
}

const Mono &Poly::leading_mono() const {
    assert(!terms_.empty());
    return terms_.rbegin()->first;
}

const Rational &Poly::leading_coeff() const {
    assert(!terms_.empty());
    return terms_.rbegin()->second;
}

Rational Poly::coeff(const Mono &m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Mono &m, const Rational &c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly &Poly::operator+=(const Poly &o) {
    if (nvars_ != o.nvars_) {
        // 0-variable constants interoperate as scalars
        if (nvars_ == 0 && is_constant()) {
            Rational c = constant_term();
            *this = o;
            add_term(Mono(nvars_, 0), c);
            return *this;
        }
        if (o.nvars_ == 0 && o.is_constant()) {
            add_term(Mono(nvars_, 0), o.constant_term());
            return *this;
        }
        assert(false && "Poly::operator+=: variable count mismatch");
    }
    for (const auto &[m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly &Poly::operator-=(const Poly &o) {
    *this += -o;
    return *this;
}

Poly operator-(const Poly &a) {
    Poly r(a.nvars_);
    for (const auto &[m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly operator*(const Poly &a, const Poly &b) {
    if (a.nvars_ != b.nvars_) {
        if (a.nvars_ == 0 && a.is_constant()) return b * a.constant_term();
        if (b.nvars_ == 0 && b.is_constant()) return a * b.constant_term();
        assert(a.is_zero() || b.is_zero());
    }
    Poly r(a.nvars_ ? a.nvars_ : b.nvars_);
    Mono m(r.nvars_, 0);
    for (const auto &[ma, ca] : a.terms_) {
        for (const auto &[mb, cb] : b.terms_) {
            for (int i = 0; i < r.nvars_; ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Poly operator*(const Poly &a, const Rational &c) {
    Poly r(a.nvars_);
    if (c.is_zero()) return r;
    for (const auto &[m, cc] : a.terms_) r.terms_.emplace(m, cc * c);
    return r;
}

Poly Poly::pow(int e) const {
    assert(e >= 0);
    Poly r = Poly::constant(nvars_, Rational(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = (e >>= 1) ? base * base : base;
    }
    return r;
}

Poly Poly::subst(const std::vector<Poly> &images) const {
    assert((int)images.size() == nvars_);
    int out_nvars = nvars_;
    for (const auto &im : images)
        if (!im.is_zero()) out_nvars = im.nvars();
    Poly r(out_nvars);
    // power cache per variable
    std::vector<std::vector<Poly>> powers(nvars_);
    auto power = [&](int j, int e) -> const Poly & {
        auto &tab = powers[j];
        if (tab.empty()) tab.push_back(Poly::constant(out_nvars, Rational(1)));
        while ((int)tab.size() <= e) tab.push_back(tab.back() * images[j]);
        return tab[e];
    };
    for (const auto &[m, c] : terms_) {
        Poly t = Poly::constant(out_nvars, c);
        for (int j = 0; j < nvars_; ++j)
            if (m[j] > 0) t = t * power(j, m[j]);
        r += t;
    }
    return r;
}

Rational Poly::eval(const std::vector<Rational> &point) const {
    assert((int)point.size() == nvars_);
    Rational r(0);
    for (const auto &[m, c] : terms_) {
        Rational t = c;
        for (int j = 0; j < nvars_; ++j)
            for (int e = 0; e < m[j]; ++e) t *= point[j];
        r += t;
    }
    return r;
}

Poly Poly::eval_var(int var, const Rational &value) const {
    Poly r(nvars_);
    for (const auto &[m, c] : terms_) {
        Rational t = c;
        for (int e = 0; e < m[var]; ++e) t *= value;
        Mono mm = m;
        mm[var] = 0;
        r.add_term(mm, t);
    }
    return r;
}

Poly Poly::extended(int new_nvars) const {
    assert(new_nvars >= nvars_);
    Poly r(new_nvars);
    for (const auto &[m, c] : terms_) {
        Mono mm(new_nvars, 0);
        std::copy(m.begin(), m.end(), mm.begin());
        r.terms_.emplace(std::move(mm), c);
    }
    return r;
}

Poly Poly::derivative(int var) const {
    Poly r(nvars_);
    for (const auto &[m, c] : terms_) {
        if (m[var] == 0) continue;
        Mono mm = m;
        mm[var] -= 1;
        r.add_term(mm, c * Rational(m[var]));
    }
    return r;
}

std::map<int, Poly> Poly::coeffs_in(int var) const {
    std::map<int, Poly> cs;
    for (const auto &[m, c] : terms_) {
        Mono mm = m;
        int e = mm[var];
        mm[var] = 0;
        auto [it, inserted] = cs.emplace(e, Poly(nvars_));
        it->second.add_term(mm, c);
    }
    return cs;
}

Poly Poly::from_coeffs_in(int nvars, int var, const std::map<int, Poly> &cs) {
    Poly r(nvars);
    for (const auto &[e, p] : cs) {
        for (const auto &[m, c] : p.terms()) {
            Mono mm = m;
            mm[var] += e;
            r.add_term(mm, c);
        }
    }
    return r;
}

Rational Poly::content() const {
    Rational g(0);
    for (const auto &[m, c] : terms_) g = rat_gcd(g, c);
    return g;
}

Poly Poly::primitive_part() const {
    if (terms_.empty()) return *this;
    Rational g = content();
    if (leading_coeff().sign() < 0) g = -g;
    Poly r(nvars_);
    for (const auto &[m, c] : terms_) r.terms_.emplace(m, c / g);
    return r;
}

std::string Poly::str(const std::vector<std::string> &names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print leading terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto &[m, c] = *it;
        Rational ac = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool printed_coeff = false;
        if (!ac.is_one() || mono_degree(m) == 0) {
            os << ac.str();
            printed_coeff = true;
        }
        for (int j = 0; j < nvars_; ++j) {
            if (m[j] == 0) continue;
            if (printed_coeff) os << "*";
            if ((int)names.size() > j)
                os << names[j];
            else
                os << "x" << j;
            if (m[j] > 1) os << "^" << m[j];
            printed_coeff = true;
        }
    }
    return os.str();
}

void divide_qr(const Poly &f, const Poly &g, Poly &q, Poly &r) {
    if (g.is_zero()) throw Error("divide_qr: division by zero polynomial");
    q = Poly(f.nvars());
    r = f;
    const Mono &lg = g.leading_mono();
    const Rational &cg = g.leading_coeff();
    while (!r.is_zero()) {
        // find the largest monomial of r divisible by lg
        bool reduced = false;
        for (auto it = r.terms().rbegin(); it != r.terms().rend(); ++it) {
            const Mono &m = it->first;
            bool div = true;
            for (size_t j = 0; j < m.size(); ++j)
                if (m[j] < lg[j]) { div = false; break; }
            if (!div) continue;
            Mono mq(m.size());
            for (size_t j = 0; j < m.size(); ++j) mq[j] = m[j] - lg[j];
            Rational cq = it->second / cg;
            q.add_term(mq, cq);
            r -= Poly::monomial(f.nvars(), mq, cq) * g;
            reduced = true;
            break;
        }
        if (!reduced) break;
    }
}

Poly exact_divide(const Poly &f, const Poly &g) {
    if (g.is_zero()) throw NotDivisible("division by zero polynomial");
    if (f.is_zero()) return Poly(f.nvars());
    Poly q, r;
    divide_qr(f, g, q, r);
    if (!r.is_zero())
        throw NotDivisible("remainder is nonzero (" + r.str() + ")");
    return q;
}

namespace {

// variables actually occurring in p
std::vector<int> support(const Poly &p) {
    std::vector<char> seen(p.nvars(), 0);
    for (const auto &[m, c] : p.terms())
        for (int j = 0; j < p.nvars(); ++j)
            if (m[j] > 0) seen[j] = 1;
    std::vector<int> vars;
    for (int j = 0; j < p.nvars(); ++j)
        if (seen[j]) vars.push_back(j);
    return vars;
}

// Pseudo-remainder of f by g viewed as univariate in `var`:
// lc(g)^(df-dg+1) * f = q*g + prem.
Poly pseudo_rem(const Poly &f, const Poly &g, int var) {
    auto fc = f.coeffs_in(var);
    auto gc = g.coeffs_in(var);
    int dg = gc.rbegin()->first;
    const Poly &lg = gc.rbegin()->second;
    std::map<int, Poly> rc = fc;
    auto deg_of = [](const std::map<int, Poly> &cs) {
        return cs.empty() ? -1 : cs.rbegin()->first;
    };
    while (deg_of(rc) >= dg) {
        int dr = deg_of(rc);
        Poly lr = rc.rbegin()->second;
        // rc = lg*rc - lr * g * var^(dr-dg)
        std::map<int, Poly> next;
        for (auto &[e, p] : rc) {
            Poly t = p * lg;
            if (!t.is_zero()) next[e] = std::move(t);
        }
        for (const auto &[e, p] : gc) {
            int ee = e + dr - dg;
            Poly t = p * lr;
            auto it = next.find(ee);
            if (it == next.end()) {
                if (!t.is_zero()) next[ee] = -t;
            } else {
                it->second -= t;
                if (it->second.is_zero()) next.erase(it);
            }
        }
        next.erase(dr);
        rc = std::move(next);
    }
    return Poly::from_coeffs_in(f.nvars(), var, rc);
}

// content of f with respect to `var`: gcd of the coefficient polynomials
Poly content_in(const Poly &f, int var) {
    Poly g(f.nvars());
    for (const auto &[e, p] : f.coeffs_in(var)) {
        g = poly_gcd(g, p);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

} // namespace

Poly poly_gcd(const Poly &a, const Poly &b) {
    if (a.is_zero()) return b.is_zero() ? b : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    if (a.is_constant() || b.is_constant())
        return Poly::constant(a.nvars(), Rational(1));

    auto sa = support(a), sb = support(b);
    // main variable: last variable present in either
    int var = std::max(sa.back(), sb.back());
    bool in_a = std::binary_search(sa.begin(), sa.end(), var);
    bool in_b = std::binary_search(sb.begin(), sb.end(), var);
    if (!in_a || !in_b) {
        // var occurs in only one of them: gcd divides that one's content
        const Poly &with = in_a ? a : b;
        const Poly &without = in_a ? b : a;
        return poly_gcd(content_in(with, var), without);
    }

    Poly ca = content_in(a, var), cb = content_in(b, var);
    Poly f = exact_divide(a, ca).primitive_part();
    Poly g = exact_divide(b, cb).primitive_part();
    if (f.degree_in(var) < g.degree_in(var)) std::swap(f, g);

    // primitive PRS
    while (true) {
        Poly r = pseudo_rem(f, g, var);
        if (r.is_zero()) break;
        r = exact_divide(r, content_in(r, var)).primitive_part();
        f = std::move(g);
        g = std::move(r);
        if (g.degree_in(var) == 0) {
            g = Poly::constant(a.nvars(), Rational(1));
            break;
        }
    }
    Poly cont = poly_gcd(ca, cb);
    return (g * cont).primitive_part();
}

} // namespace qhecke
