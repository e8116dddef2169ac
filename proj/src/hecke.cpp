#include "qhecke/hecke.hpp"

#include "qhecke/errors.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace qhecke {

void HeckeElement::add(int w, const Poly &c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

HeckeElement operator+(const HeckeElement &a, const HeckeElement &b) {
    HeckeElement r = a;
    for (const auto &[w, c] : b.terms) r.add(w, c);
    return r;
}

HeckeElement operator-(const HeckeElement &a, const HeckeElement &b) {
    HeckeElement r = a;
    for (const auto &[w, c] : b.terms) r.add(w, -c);
    return r;
}

HeckeElement HeckeElement::operator-() const {
    HeckeElement r{flavor, {}};
    for (const auto &[w, c] : terms) r.terms.emplace(w, -c);
    return r;
}

HeckeElement HeckeElement::scaled(const Poly &c) const {
    HeckeElement r{flavor, {}};
    for (const auto &[w, p] : terms) r.add(w, p * c);
    return r;
}

HeckeElement HeckeElement::scaled(const Rational &c) const {
    HeckeElement r{flavor, {}};
    for (const auto &[w, p] : terms) r.add(w, p * c);
    return r;
}

std::string HeckeElement::str(const std::vector<std::string> &names) const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[w, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str(names) << ")*" << (flavor == Flavor::Nil ? "wbar" : "w") << w;
    }
    return os.str();
}

// ---------------------------------------------------------------------------

Poly HeckeAlgebra::x_poly(const IVec &wt) const {
    std::vector<Rational> cs(wt.size());
    for (size_t i = 0; i < wt.size(); ++i) cs[i] = Rational(wt[i]);
    return Poly::linear(nvars_, cs);
}

Poly HeckeAlgebra::x_poly(const QVec &wt) const {
    return Poly::linear(nvars_, wt);
}

Poly HeckeAlgebra::alpha_poly(int i) const {
    IVec wt(rs_->rank());
    for (int j = 0; j < rs_->rank(); ++j) wt[j] = rs_->cartan()[i][j];
    return x_poly(wt);
}

HeckeElement HeckeAlgebra::group(int w) const {
    HeckeElement h{flavor_, {}};
    h.terms.emplace(w, one_poly());
    return h;
}

HeckeElement HeckeAlgebra::x(const IVec &wt) const {
    HeckeElement h{flavor_, {}};
    h.add(W_->identity(), x_poly(wt));
    return h;
}

HeckeElement HeckeAlgebra::x(const QVec &wt) const {
    HeckeElement h{flavor_, {}};
    h.add(W_->identity(), x_poly(wt));
    return h;
}

Poly HeckeAlgebra::subst_simple(int i, const Poly &f) const {
    // s_i fixes every coordinate except x_i, which maps to x_i - alpha_i
    Poly li = Poly::variable(nvars_, i) - alpha_poly(i);
    Poly r(nvars_);
    std::vector<Poly> powers = {one_poly()};
    for (const auto &[m, c] : f.terms()) {
        while ((int)powers.size() <= m[i]) powers.push_back(powers.back() * li);
        Mono rest = m;
        rest[i] = 0;
        r += Poly::monomial(nvars_, rest, c) * powers[m[i]];
    }
    return r;
}

Poly HeckeAlgebra::subst_w(int w, const Poly &f) const {
    const int r = rs_->rank();
    int wi = W_->inverse(w);
    std::vector<Poly> images(nvars_);
    for (int k = 0; k < r; ++k) {
        IVec ek(r, 0);
        ek[k] = 1;
        images[k] = x_poly(W_->act_weight(wi, ek));
    }
    images[r] = t_poly();
    return f.subst(images);
}

Poly HeckeAlgebra::demazure(int i, const Poly &f) const {
    return exact_divide(f - subst_simple(i, f), alpha_poly(i));
}

Poly HeckeAlgebra::act_simple(int i, const Poly &f) const {
    if (flavor_ == Flavor::Nil) return demazure(i, f);
    // s_i(f) = f - (f - f^{s_i})(1 - t/alpha_i), polynomial by divisibility
    Poly g = f - subst_simple(i, f);
    Poly h = exact_divide(g, alpha_poly(i));
    return f - g + t_poly() * h;
}

Poly HeckeAlgebra::act_word(const std::vector<int> &word, const Poly &f) const {
    Poly r = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = act_simple(*it, r);
    return r;
}

Poly HeckeAlgebra::act_element(const HeckeElement &h, const Poly &f) const {
    Poly r(nvars_);
    for (const auto &[w, c] : h.terms) r += c * act_group(w, f);
    return r;
}

int HeckeAlgebra::group_mult(int u, int v, bool &vanished) const {
    vanished = false;
    int uv = W_->mult(u, v);
    if (flavor_ == Flavor::Nil &&
        W_->length(uv) != W_->length(u) + W_->length(v)) {
        vanished = true;
        return 0;
    }
    return uv;
}

std::map<int, Poly> HeckeAlgebra::push_group(int w, const Poly &g) const {
    // normal-orders w * g by pushing the reduced word through one letter at a
    // time: s_i h = h^{s_i} s_i + T d_i(h), with T = t for Ht and 1 for Nil
    std::map<int, Poly> state;
    state.emplace(W_->identity(), g);
    const auto &word = W_->word(w);
    Poly T = (flavor_ == Flavor::Ht) ? t_poly() : one_poly();
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        int i = *it;
        std::map<int, Poly> next;
        auto add = [&next](int u, const Poly &c) {
            if (c.is_zero()) return;
            auto [jt, inserted] = next.emplace(u, c);
            if (!inserted) {
                jt->second += c;
                if (jt->second.is_zero()) next.erase(jt);
            }
        };
        for (const auto &[u, h] : state) {
            bool vanished = false;
            int siu = group_mult(W_->simple(i), u, vanished);
            if (!vanished) add(siu, subst_simple(i, h));
            add(u, T * demazure(i, h));
        }
        state = std::move(next);
    }
    return state;
}

HeckeElement HeckeAlgebra::multiply(const HeckeElement &a, const HeckeElement &b) const {
    if (a.flavor != flavor_ || b.flavor != flavor_)
        throw Error("HeckeAlgebra::multiply: flavor mismatch");
    HeckeElement r{flavor_, {}};
    for (const auto &[w, f] : a.terms) {
        for (const auto &[v, g] : b.terms) {
            if (w == W_->identity()) {
                r.add(v, f * g);
                continue;
            }
            auto pushed = push_group(w, g);
            for (const auto &[u, h] : pushed) {
                bool vanished = false;
                int uv = group_mult(u, v, vanished);
                if (vanished) continue;
                r.add(uv, f * h);
            }
        }
    }
    return r;
}

HeckeElement HeckeAlgebra::commutator(const HeckeElement &a, const HeckeElement &b) const {
    return multiply(a, b) - multiply(b, a);
}

HeckeElement HeckeAlgebra::conjugate(int w, const HeckeElement &h) const {
    return multiply(group(w), multiply(h, group(W_->inverse(w))));
}

int HeckeAlgebra::braid_order(int i, int j) const {
    int p = rs_->cartan()[i][j] * rs_->cartan()[j][i];
    switch (p) {
        case 0: return 2;
        case 1: return 3;
        case 2: return 4;
        case 3: return 6;
    }
    throw Error("braid_order: bad Cartan product");
}

// ---------------------------------------------------------------------------

namespace {

// monomials x_i^p x_j^q of total degree <= deg; the module operators of the
// bond (i,j) are linear over every variable they do not touch, so these
// arguments span the operator identity on the whole degree window
std::vector<Poly> two_var_args(int nvars, int i, int j, int deg) {
    std::vector<Poly> args;
    for (int d = 0; d <= deg; ++d)
        for (int p = 0; p <= d; ++p) {
            Mono m(nvars, 0);
            m[i] += p;
            m[j] += d - p;
            args.push_back(Poly::monomial(nvars, m, Rational(1)));
        }
    return args;
}

std::vector<Poly> one_var_args(int nvars, int i, int deg) {
    std::vector<Poly> args;
    for (int d = 0; d <= deg; ++d) {
        Mono m(nvars, 0);
        m[i] = d;
        args.push_back(Poly::monomial(nvars, m, Rational(1)));
    }
    return args;
}

} // namespace

CheckList check_relations(const RootSystem &rs, Flavor flavor) {
    CheckList out;
    HeckeAlgebra H(rs, flavor);
    const WeylGroup &W = rs.weyl();
    const int r = rs.rank();
    const int D = 2 * W.length(W.longest());
    const bool nil = (flavor == Flavor::Nil);
    const std::string tag = (nil ? "nil" : "Ht") + std::string(" ") + rs.label();
    Poly T = nil ? H.one_poly() : H.t_poly();

    // (b)/(a') commutativity of the x's, as normal-ordered products
    for (int k = 0; k < r; ++k)
        for (int l = k; l < r; ++l) {
            IVec ek(r, 0), el(r, 0);
            ek[k] = 1;
            el[l] = 1;
            HeckeElement d = H.multiply(H.x(ek), H.x(el)) - H.multiply(H.x(el), H.x(ek));
            out.add(tag + ": x commutativity (" + std::to_string(k) + "," + std::to_string(l) + ")",
                    d.is_zero(), d.str());
        }

    // (c)/(b') involutivity resp. nilpotency of the generators
    for (int i = 0; i < r; ++i) {
        HeckeElement s = H.group(W.simple(i));
        HeckeElement ss = H.multiply(s, s);
        bool pass = nil ? ss.is_zero() : (ss == H.one());
        out.add(tag + ": generator square, i=" + std::to_string(i), pass, ss.str());
    }

    // braid relations, algebra level
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            int m = H.braid_order(i, j);
            auto word_prod = [&](int a, int b) {
                HeckeElement p = H.one();
                for (int k = 0; k < m; ++k) p = H.multiply(p, H.group(W.simple(k % 2 ? b : a)));
                return p;
            };
            HeckeElement lhs = word_prod(i, j), rhs = word_prod(j, i);
            bool pass = (lhs == rhs) && (!nil || !lhs.is_zero());
            out.add(tag + ": braid (" + std::to_string(i) + "," + std::to_string(j) +
                        "), m=" + std::to_string(m),
                    pass, (lhs - rhs).str());
        }

    // (d)/(c') cross relation s_i x_lam - x_{s_i(lam)} s_i = T (alpha_i^vee, lam)
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < r; ++k) {
            IVec ek(r, 0);
            ek[k] = 1;
            HeckeElement s = H.group(W.simple(i));
            HeckeElement lhs = H.multiply(s, H.x(ek)) - H.multiply(H.x(rs.reflect_weight(i, ek)), s);
            HeckeElement rhs = H.one().scaled(T * Rational(k == i ? 1 : 0));
            HeckeElement d = lhs - rhs;
            out.add(tag + ": cross relation (i=" + std::to_string(i) + ", k=" + std::to_string(k) + ")",
                    d.is_zero(), d.str());
        }

    // associativity on pseudo-random generator combinations
    {
        std::mt19937 rng(20240 + (nil ? 1 : 0) + 100 * r);
        std::uniform_int_distribution<int> pick(0, 2 * r - 1), cf(-3, 3);
        auto rand_elem = [&]() {
            HeckeElement h = H.zero();
            for (int k = 0; k < 3; ++k) {
                int p = pick(rng);
                HeckeElement g;
                if (p < r) {
                    g = H.group(W.simple(p));
                } else {
                    IVec e(r, 0);
                    e[p - r] = 1;
                    g = H.x(e);
                }
                h = h + g.scaled(Rational(cf(rng)));
            }
            return h;
        };
        bool ok = true;
        std::string witness;
        for (int it = 0; it < 4 && ok; ++it) {
            HeckeElement a = rand_elem(), b = rand_elem(), c = rand_elem();
            HeckeElement d = H.multiply(H.multiply(a, b), c) - H.multiply(a, H.multiply(b, c));
            if (!d.is_zero()) {
                ok = false;
                witness = d.str();
            }
        }
        out.add(tag + ": associativity of normal-ordered products", ok, witness);
    }

    // module operator identities up to degree 2 l(w0)
    const int nv = H.nvars();
    for (int i = 0; i < r; ++i) {
        bool ok = true;
        std::string witness;
        for (const Poly &f : one_var_args(nv, i, D)) {
            Poly twice = H.act_simple(i, H.act_simple(i, f));
            Poly expect = nil ? Poly(nv) : f;
            if (twice != expect) {
                ok = false;
                witness = "arg " + f.str() + " -> " + twice.str();
                break;
            }
        }
        out.add(tag + ": module generator square, i=" + std::to_string(i), ok, witness);
    }
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            int m = H.braid_order(i, j);
            std::vector<int> w1, w2;
            for (int k = 0; k < m; ++k) {
                w1.push_back(k % 2 ? j : i);
                w2.push_back(k % 2 ? i : j);
            }
            bool ok = true;
            std::string witness;
            for (const Poly &f : two_var_args(nv, i, j, D)) {
                Poly a = H.act_word(w1, f), b = H.act_word(w2, f);
                if (a != b) {
                    ok = false;
                    witness = "arg " + f.str() + ": " + (a - b).str();
                    break;
                }
            }
            out.add(tag + ": module braid (" + std::to_string(i) + "," + std::to_string(j) + ")",
                    ok, witness);
        }
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < r; ++k) {
            IVec ek(r, 0);
            ek[k] = 1;
            Poly xk = H.x_poly(ek);
            Poly xs = H.x_poly(rs.reflect_weight(i, ek));
            bool ok = true;
            std::string witness;
            int other = (k != i) ? k : (r > 1 ? (i + 1) % r : 0);
            auto args = (r == 1) ? one_var_args(nv, 0, D) : two_var_args(nv, i, other, D);
            for (const Poly &f : args) {
                Poly lhs = H.act_simple(i, xk * f) - xs * H.act_simple(i, f);
                Poly rhs = T * Rational(k == i ? 1 : 0) * f;
                if (lhs != rhs) {
                    ok = false;
                    witness = "arg " + f.str() + ": " + (lhs - rhs).str();
                    break;
                }
            }
            out.add(tag + ": module cross relation (i=" + std::to_string(i) +
                        ", k=" + std::to_string(k) + ")",
                    ok, witness);
        }

    return out;
}

CheckList check_nil_well_defined(const RootSystem &rs) {
    CheckList out;
    HeckeAlgebra H(rs, Flavor::Nil);
    const WeylGroup &W = rs.weyl();
    const int r = rs.rank();
    const int D = 2 * W.length(W.longest());
    const int nv = H.nvars();

    // all t-free monomials of total degree <= D
    std::vector<Poly> args;
    std::vector<Mono> monos;
    Mono cur(nv, 0);
    std::function<void(int, int)> gen = [&](int var, int budget) {
        if (var == r) {
            monos.push_back(cur);
            return;
        }
        for (int e = 0; e <= budget; ++e) {
            cur[var] = e;
            gen(var + 1, budget - e);
        }
        cur[var] = 0;
    };
    gen(0, D);
    for (const auto &m : monos) args.push_back(Poly::monomial(nv, m, Rational(1)));

    for (int w = 0; w < W.size(); ++w) {
        auto words = W.all_reduced_words(w);
        bool ok = true;
        std::string witness;
        for (const Poly &f : args) {
            Poly ref = H.act_word(words[0], f);
            for (size_t k = 1; k < words.size() && ok; ++k) {
                if (H.act_word(words[k], f) != ref) {
                    ok = false;
                    witness = "w" + std::to_string(w) + " arg " + f.str();
                }
            }
            if (!ok) break;
        }
        out.add(rs.label() + " nil well-defined: w" + std::to_string(w) + " (" +
                    std::to_string(words.size()) + " reduced words)",
                ok, witness);

        // non-reduced compositions act by zero
        for (int i = 0; i < r; ++i) {
            int siw = W.mult(W.simple(i), w);
            if (W.length(siw) >= W.length(w) + 1) continue;
            std::vector<int> word = {i};
            const auto &ww = W.word(w);
            word.insert(word.end(), ww.begin(), ww.end());
            bool zok = true;
            std::string zwitness;
            for (const Poly &f : args) {
                Poly z = H.act_word(word, f);
                if (!z.is_zero()) {
                    zok = false;
                    zwitness = "arg " + f.str() + " -> " + z.str();
                    break;
                }
            }
            HeckeElement prod = H.multiply(H.group(W.simple(i)), H.group(w));
            if (!prod.is_zero()) zok = false;
            out.add(rs.label() + " nil zero beyond reduced length: s" + std::to_string(i) +
                        " * w" + std::to_string(w),
                    zok, zwitness);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

FiniteModule principal_series(const RootSystem &rs, Flavor flavor) {
    const WeylGroup &W = rs.weyl();
    const int r = rs.rank();
    const int n = W.size();
    const int nv = r + 1; // (a_1..a_r, t)
    const bool nil = (flavor == Flavor::Nil);

    FiniteModule M;
    M.flavor = flavor;

    // simple generators: s_i (w x 1) = (s_i w) x 1; the nil flavor drops the
    // term when the length goes down
    M.s.assign(r, Matrix<RatFunc>(n, n, RatFunc::zero(nv)));
    for (int i = 0; i < r; ++i)
        for (int u = 0; u < n; ++u) {
            int su = W.mult(W.simple(i), u);
            if (nil && W.length(su) < W.length(u)) continue;
            M.s[i].at(su, u) = RatFunc::constant(nv, Rational(1));
        }

    // x_{omega_k} columns by recursion in length order:
    // x_lam (w x 1) = s_i [x_{s_i lam}(v x 1)] + T <lam, alpha_i^vee> (v x 1)
    // where w = s_i v reduced
    std::vector<std::vector<std::vector<Poly>>> cols(
        r, std::vector<std::vector<Poly>>(n, std::vector<Poly>(n, Poly(nv))));
    Poly T = nil ? Poly::constant(nv, Rational(1)) : Poly::variable(nv, r);
    for (int k = 0; k < r; ++k) cols[k][0][0] = Poly::variable(nv, k);
    for (int w = 1; w < n; ++w) {
        int i = W.word(w)[0];
        int v = W.mult(W.simple(i), w);
        for (int k = 0; k < r; ++k) {
            // s_i omega_k = omega_k - delta_{ik} alpha_i
            std::vector<Poly> vec = cols[k][v];
            if (k == i)
                for (int j = 0; j < r; ++j)
                    for (int u = 0; u < n; ++u) {
                        if (cols[j][v][u].is_zero() || rs.cartan()[i][j] == 0) continue;
                        vec[u] -= Rational(rs.cartan()[i][j]) * cols[j][v][u];
                    }
            // apply s_i to the column
            std::vector<Poly> img(n, Poly(nv));
            for (int u = 0; u < n; ++u) {
                if (vec[u].is_zero()) continue;
                int su = W.mult(W.simple(i), u);
                if (nil && W.length(su) < W.length(u)) continue;
                img[su] += vec[u];
            }
            if (k == i) img[v] += T; // <omega_k, alpha_i^vee> = delta_{ki}
            cols[k][w] = std::move(img);
        }
    }
    M.x.assign(r, Matrix<RatFunc>(n, n, RatFunc::zero(nv)));
    for (int k = 0; k < r; ++k)
        for (int w = 0; w < n; ++w)
            for (int u = 0; u < n; ++u)
                if (!cols[k][w][u].is_zero()) M.x[k].at(u, w) = RatFunc(cols[k][w][u]);
    return M;
}

FiniteModuleQ specialize(const FiniteModule &m, const QVec &a, const Rational &t) {
    std::vector<Rational> point(a.begin(), a.end());
    point.push_back(t);
    FiniteModuleQ q;
    q.flavor = m.flavor;
    auto conv = [&](const Matrix<RatFunc> &src) {
        Matrix<Rational> dst(src.rows(), src.cols());
        for (int i = 0; i < src.rows(); ++i)
            for (int j = 0; j < src.cols(); ++j)
                if (!src.at(i, j).is_zero()) dst.at(i, j) = src.at(i, j).eval(point);
        return dst;
    };
    for (const auto &xm : m.x) q.x.push_back(conv(xm));
    for (const auto &sm : m.s) q.s.push_back(conv(sm));
    return q;
}

FiniteModuleQ orbit_model(const RootSystem &rs, Flavor flavor, const QVec &a,
                          const Rational &t) {
    const WeylGroup &W = rs.weyl();
    const int r = rs.rank();
    const int n = W.size();
    const bool nil = (flavor == Flavor::Nil);

    FiniteModuleQ M;
    M.flavor = flavor;
    M.x.assign(r, Matrix<Rational>(n, n));
    for (int w = 0; w < n; ++w) {
        QVec wa = W.act_coweight(w, a);
        for (int k = 0; k < r; ++k) M.x[k].at(w, w) = wa[k]; // <omega_k, w(a)>
    }
    M.s.assign(r, Matrix<Rational>(n, n));
    for (int i = 0; i < r; ++i) {
        QVec alpha(r);
        for (int j = 0; j < r; ++j) alpha[j] = Rational(rs.cartan()[i][j]);
        for (int w = 0; w < n; ++w) {
            QVec wa = W.act_coweight(w, a);
            Rational c = RootSystem::pair(alpha, wa); // <alpha_i, w(a)>
            if (c.is_zero())
                throw Error("orbit_model: point not generic, <alpha_i, w(a)> = 0");
            int sw = W.mult(W.simple(i), w);
            if (nil) {
                // (sbar_i F)_w = (F_w - F_{s_i w}) / <alpha_i, w(a)>
                M.s[i].at(w, w) += c.inverse();
                M.s[i].at(w, sw) -= c.inverse();
            } else {
                // (s_i F)_w = F_{s_i w} + t (F_w - F_{s_i w}) / <alpha_i, w(a)>
                M.s[i].at(w, sw) += Rational(1) - t / c;
                M.s[i].at(w, w) += t / c;
            }
        }
    }
    return M;
}

std::optional<Matrix<Rational>> find_intertwiner(const FiniteModuleQ &M,
                                                 const FiniteModuleQ &N) {
    const int n = M.dim();
    if (n != N.dim()) throw Error("find_intertwiner: dimension mismatch");
    std::vector<const Matrix<Rational> *> gens_m, gens_n;
    for (const auto &g : M.x) gens_m.push_back(&g);
    for (const auto &g : M.s) gens_m.push_back(&g);
    for (const auto &g : N.x) gens_n.push_back(&g);
    for (const auto &g : N.s) gens_n.push_back(&g);

    const int unknowns = n * n;
    Matrix<Rational> A((int)gens_m.size() * unknowns, unknowns);
    int row = 0;
    for (size_t g = 0; g < gens_m.size(); ++g) {
        const auto &gm = *gens_m[g];
        const auto &gn = *gens_n[g];
        // (T gm - gn T)[i][j]: coefficient of T[p][q]
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                for (int q = 0; q < n; ++q) A.at(row, i * n + q) += gm.at(q, j);
                for (int p = 0; p < n; ++p) A.at(row, p * n + j) -= gn.at(i, p);
                ++row;
            }
    }
    auto basis = nullspace(A, Rational(1));
    if (basis.empty()) return std::nullopt;
    auto as_matrix = [&](const std::vector<Rational> &v) {
        Matrix<Rational> T(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) T.at(i, j) = v[i * n + j];
        return T;
    };
    for (const auto &v : basis) {
        Matrix<Rational> T = as_matrix(v);
        if (!det(T).is_zero()) return T;
    }
    std::mt19937 rng(97531);
    std::uniform_int_distribution<int> cf(-5, 5);
    for (int tries = 0; tries < 32; ++tries) {
        std::vector<Rational> v(unknowns, Rational(0));
        for (const auto &b : basis) {
            Rational c(cf(rng));
            for (int k = 0; k < unknowns; ++k) v[k] += c * b[k];
        }
        Matrix<Rational> T = as_matrix(v);
        if (!det(T).is_zero()) return T;
    }
    return std::nullopt;
}

template <typename F>
CheckList check_module_relations(const RootSystem &rs, const FiniteModuleT<F> &m,
                                 const F &one, const F &T) {
    CheckList out;
    const int r = rs.rank();
    const bool nil = (m.flavor == Flavor::Nil);
    const int n = m.dim();
    Matrix<F> id = Matrix<F>::identity(n, one);
    HeckeAlgebra H(rs, m.flavor);
    const std::string tag = rs.label() + (nil ? " nil matrices" : " Ht matrices");

    for (int k = 0; k < r; ++k)
        for (int l = k + 1; l < r; ++l)
            out.add(tag + ": x commutativity", (m.x[k] * m.x[l] - m.x[l] * m.x[k]).is_zero());
    for (int i = 0; i < r; ++i) {
        Matrix<F> ss = m.s[i] * m.s[i];
        out.add(tag + ": generator square", nil ? ss.is_zero() : (ss - id).is_zero());
    }
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            int mm = H.braid_order(i, j);
            Matrix<F> a = id, b = id;
            for (int k = 0; k < mm; ++k) {
                a = a * (k % 2 ? m.s[j] : m.s[i]);
                b = b * (k % 2 ? m.s[i] : m.s[j]);
            }
            out.add(tag + ": braid", (a - b).is_zero());
        }
    // cross relation: s_i x_k - x_{s_i omega_k} s_i = T delta_ik
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < r; ++k) {
            IVec ek(r, 0);
            ek[k] = 1;
            IVec se = rs.reflect_weight(i, ek);
            Matrix<F> xs(n, n);
            for (int j = 0; j < r; ++j)
                if (se[j] != 0) xs = xs + m.x[j].scaled(Rational(se[j]));
            Matrix<F> lhs = m.s[i] * m.x[k] - xs * m.s[i];
            Matrix<F> rhs(n, n);
            if (k == i) rhs = id.scaled(T);
            out.add(tag + ": cross relation", (lhs - rhs).is_zero());
        }
    return out;
}

template CheckList check_module_relations<RatFunc>(const RootSystem &, const FiniteModuleT<RatFunc> &, const RatFunc &, const RatFunc &);
template CheckList check_module_relations<Rational>(const RootSystem &, const FiniteModuleT<Rational> &, const Rational &, const Rational &);

} // namespace qhecke
