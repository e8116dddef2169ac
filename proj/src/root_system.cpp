#include "qhecke/root_system.hpp"

#include "qhecke/errors.hpp"
#include "qhecke/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <memory>
#include <set>

namespace qhecke {

namespace {

// expected number of positive roots per type, as a build cross-check
int expected_positive(char type, int r) {
    switch (type) {
        case 'A': return r * (r + 1) / 2;
        case 'B':
        case 'C': return r * r;
        case 'D': return r * (r - 1);
        case 'E': return r == 6 ? 36 : (r == 7 ? 63 : 120);
        case 'F': return 24;
        case 'G': return 6;
    }
    return -1;
}

size_t expected_order(char type, int r) {
    auto fact = [](int n) { size_t f = 1; for (int i = 2; i <= n; ++i) f *= i; return f; };
    switch (type) {
        case 'A': return fact(r + 1);
        case 'B':
        case 'C': return (size_t(1) << r) * fact(r);
        case 'D': return (size_t(1) << (r - 1)) * fact(r);
        case 'E': return r == 6 ? 51840ull : (r == 7 ? 2903040ull : 696729600ull);
        case 'F': return 1152;
        case 'G': return 12;
    }
    return 0;
}

} // namespace

RootSystem::~RootSystem() = default;
RootSystem::RootSystem(RootSystem &&) noexcept = default;
RootSystem &RootSystem::operator=(RootSystem &&) noexcept = default;

RootSystem RootSystem::build(const std::string &label) {
    if (label.size() < 2) throw UnsupportedType("bad label '" + label + "'");
    char t = label[0];
    int r = 0;
    try {
        r = std::stoi(label.substr(1));
    } catch (...) {
        throw UnsupportedType("bad label '" + label + "'");
    }
    return build(t, r);
}

RootSystem RootSystem::build(char type, int rank) {
    bool ok = (type == 'A' && rank >= 1) || (type == 'B' && rank >= 2) ||
              (type == 'C' && rank >= 2) || (type == 'D' && rank >= 3) ||
              (type == 'E' && rank >= 6 && rank <= 8) || (type == 'F' && rank == 4) ||
              (type == 'G' && rank == 2);
    if (!ok)
        throw UnsupportedType(std::string(1, type) + std::to_string(rank));

    RootSystem rs;
    rs.type_ = type;
    rs.rank_ = rank;
    const int r = rank;
    rs.len2_.assign(r, Rational(1));
    std::vector<std::pair<int, int>> edges; // single bonds between equal lengths
    switch (type) {
        case 'A':
            for (int i = 0; i + 1 < r; ++i) edges.emplace_back(i, i + 1);
            break;
        case 'B': // alpha_1..alpha_{r-1} long, alpha_r short
            for (int i = 0; i + 2 < r; ++i) edges.emplace_back(i, i + 1);
            for (int i = 0; i + 1 < r; ++i) rs.len2_[i] = Rational(2);
            break;
        case 'C': // alpha_1..alpha_{r-1} short, alpha_r long
            for (int i = 0; i + 2 < r; ++i) edges.emplace_back(i, i + 1);
            rs.len2_[r - 1] = Rational(2);
            break;
        case 'D':
            for (int i = 0; i + 3 < r; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(r - 3, r - 2);
            edges.emplace_back(r - 3, r - 1);
            break;
        case 'E':
            // Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 attached to 4
            edges = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}};
            if (r >= 7) edges.emplace_back(5, 6);
            if (r == 8) edges.emplace_back(6, 7);
            break;
        case 'F': // alpha_1, alpha_2 long; alpha_3, alpha_4 short
            edges = {{0, 1}, {2, 3}};
            rs.len2_[0] = rs.len2_[1] = Rational(2);
            break;
        case 'G': // alpha_1 short, alpha_2 long
            rs.len2_[1] = Rational(3);
            break;
    }

    // Gram matrix of simple roots
    rs.gram_.assign(r, QVec(r, Rational(0)));
    for (int i = 0; i < r; ++i) rs.gram_[i][i] = rs.len2_[i];
    for (auto [i, j] : edges) {
        if (rs.len2_[i] != rs.len2_[j]) throw Error("internal: bad edge");
        Rational v = Rational(0) - rs.len2_[i] / Rational(2);
        rs.gram_[i][j] = rs.gram_[j][i] = v;
    }
    // double/triple bonds
    if (type == 'B' || type == 'C') rs.gram_[r - 2][r - 1] = rs.gram_[r - 1][r - 2] = Rational(-1);
    if (type == 'F') rs.gram_[1][2] = rs.gram_[2][1] = Rational(-1);
    if (type == 'G') rs.gram_[0][1] = rs.gram_[1][0] = Rational(-3, 2);

    // cartan_[i][j] = 2 (a_i, a_j) / (a_j, a_j)
    rs.cartan_.assign(r, std::vector<int>(r, 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            Rational c = Rational(2) * rs.gram_[i][j] / rs.len2_[j];
            if (c.den() != 1) throw Error("internal: non-integral Cartan entry");
            rs.cartan_[i][j] = (int)c.num().get_si();
        }

    rs.simply_laced_ = true;
    for (int i = 0; i < r; ++i)
        if (rs.len2_[i] != rs.len2_[0]) rs.simply_laced_ = false;

    rs.generate_roots();
    rs.validate();
    return rs;
}

void RootSystem::generate_roots() {
    const int r = rank_;
    std::set<IVec> seen;
    std::deque<Root> queue;
    for (int i = 0; i < r; ++i) {
        Root a;
        a.wt.assign(cartan_[i].begin(), cartan_[i].end());
        a.sr.assign(r, 0);
        a.sr[i] = 1;
        a.cowt.assign(r, 0);
        a.cowt[i] = 1;
        a.len2 = len2_[i];
        queue.push_back(a);
        seen.insert(a.sr);
    }
    while (!queue.empty()) {
        Root a = queue.front();
        queue.pop_front();
        positive_.push_back(a);
        for (int i = 0; i < r; ++i) {
            Root b = a;
            int p = a.wt[i]; // <alpha, alpha_i^vee>
            for (int j = 0; j < r; ++j) b.wt[j] -= p * cartan_[i][j];
            b.sr[i] -= p;
            int pc = 0; // <alpha_i, alpha^vee>
            for (int k = 0; k < r; ++k) pc += cartan_[i][k] * a.cowt[k];
            b.cowt[i] -= pc;
            bool nonneg = true, nonzero = false;
            for (int j = 0; j < r; ++j) {
                if (b.sr[j] < 0) nonneg = false;
                if (b.sr[j] != 0) nonzero = true;
            }
            if (!nonneg || !nonzero) continue;
            if (seen.insert(b.sr).second) queue.push_back(b);
        }
    }
    std::sort(positive_.begin(), positive_.end(), [](const Root &a, const Root &b) {
        int ha = a.root_height(), hb = b.root_height();
        if (ha != hb) return ha < hb;
        return a.sr < b.sr;
    });
    // long/short classification; with a single length everything counts long
    Rational maxlen(0);
    for (const auto &a : positive_)
        if (maxlen < a.len2) maxlen = a.len2;
    for (auto &a : positive_) a.is_long = (a.len2 == maxlen);
}

void RootSystem::validate() const {
    if ((int)positive_.size() != expected_positive(type_, rank_))
        throw Error("root generation: wrong number of positive roots for " + label());
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) {
            if (gram_[i][j] != gram_[j][i]) throw Error("Gram not symmetric");
            if (Rational(cartan_[i][j]) * len2_[j] != Rational(2) * gram_[i][j])
                throw Error("Cartan/Gram mismatch");
        }
    // sum of positive roots = 2 rho
    IVec sum(rank_, 0);
    for (const auto &a : positive_)
        for (int j = 0; j < rank_; ++j) sum[j] += a.wt[j];
    for (int j = 0; j < rank_; ++j)
        if (sum[j] != 2) throw Error("sum of positive roots is not 2rho");
    for (const auto &a : positive_) {
        // (alpha, alpha) recomputed via the Gram matrix in simple-root coords
        Rational n2(0);
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j)
                n2 += Rational(a.sr[i]) * gram_[i][j] * Rational(a.sr[j]);
        if (n2 != a.len2) throw Error("root length mismatch");
        if (pair(a.wt, a.cowt) != 2) throw Error("<alpha, alpha^vee> != 2");
    }
}

Rational RootSystem::pair(const QVec &wt, const QVec &cowt) {
    Rational s(0);
    for (size_t i = 0; i < wt.size(); ++i) s += wt[i] * cowt[i];
    return s;
}

int RootSystem::pair(const IVec &wt, const IVec &cowt) {
    int s = 0;
    for (size_t i = 0; i < wt.size(); ++i) s += wt[i] * cowt[i];
    return s;
}

Rational RootSystem::form_weights(const QVec &a, const QVec &b) const {
    // omega-coords to alpha-coords: c = Cartan^T m  =>  m = C^{-T} c
    Matrix<Rational> ct(rank_, rank_);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) ct.at(i, j) = Rational(cartan_[j][i]);
    auto ma = solve_linear(ct, a);
    Matrix<Rational> ct2(rank_, rank_);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) ct2.at(i, j) = Rational(cartan_[j][i]);
    auto mb = solve_linear(ct2, b);
    Rational s(0);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) s += ma[i] * gram_[i][j] * mb[j];
    return s;
}

Rational RootSystem::form_coweights(const QVec &a, const QVec &b) const {
    // (alpha_i^vee, alpha_j^vee) = 4 (alpha_i, alpha_j) / (len2_i len2_j)
    Rational s(0);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            s += a[i] * b[j] * Rational(4) * gram_[i][j] / (len2_[i] * len2_[j]);
    return s;
}

Rational RootSystem::coroot_norm2(const Root &r) const {
    QVec c(rank_);
    for (int j = 0; j < rank_; ++j) c[j] = Rational(r.cowt[j]);
    return form_coweights(c, c);
}

QVec RootSystem::rho_covector() const {
    QVec rv(rank_, Rational(0));
    for (const auto &a : positive_)
        for (int j = 0; j < rank_; ++j) rv[j] += Rational(a.cowt[j], 2);
    return rv;
}

IVec RootSystem::reflect_weight(int i, const IVec &wt) const {
    IVec r = wt;
    int p = wt[i];
    for (int j = 0; j < rank_; ++j) r[j] -= p * cartan_[i][j];
    return r;
}

QVec RootSystem::reflect_weight(int i, const QVec &wt) const {
    QVec r = wt;
    Rational p = wt[i];
    for (int j = 0; j < rank_; ++j) r[j] -= p * Rational(cartan_[i][j]);
    return r;
}

QVec RootSystem::reflect_coweight(int i, const QVec &c) const {
    QVec r = c;
    Rational p(0);
    for (int k = 0; k < rank_; ++k) p += Rational(cartan_[i][k]) * c[k];
    r[i] -= p;
    return r;
}

bool RootSystem::in_r_plus_prime(const Root &a) const {
    if (simply_laced_) return true;
    if (a.is_long) return true;
    for (int i = 0; i < rank_; ++i)
        if (a.sr[i] != 0 && len2_[i] != Rational(1)) return false;
    return true;
}

std::vector<int> RootSystem::r_plus_prime() const {
    std::vector<int> out;
    for (int i = 0; i < (int)positive_.size(); ++i)
        if (in_r_plus_prime(positive_[i])) out.push_back(i);
    return out;
}

std::optional<int> RootSystem::find_root_by_sr(const IVec &sr) const {
    for (int i = 0; i < (int)positive_.size(); ++i)
        if (positive_[i].sr == sr) return i;
    return std::nullopt;
}

const WeylGroup &RootSystem::weyl() const {
    if (!weyl_) weyl_ = std::make_unique<WeylGroup>(*this);
    return *weyl_;
}

// ---------------------------------------------------------------------------

WeylGroup::WeylGroup(const RootSystem &rs, size_t bound) : rs_(&rs) {
    const int r = rs.rank();
    size_t order = expected_order(rs.type(), r);
    if (order > bound)
        throw GroupTooLarge(rs.label() + " has |W| = " + std::to_string(order));

    auto flatten = [&](const std::vector<IVec> &m) {
        std::vector<int> f;
        f.reserve(r * r);
        for (const auto &row : m) f.insert(f.end(), row.begin(), row.end());
        return f;
    };

    // simple reflection matrices
    std::vector<std::vector<IVec>> swt(r), scw(r);
    for (int i = 0; i < r; ++i) {
        swt[i].assign(r, IVec(r, 0));
        scw[i].assign(r, IVec(r, 0));
        for (int j = 0; j < r; ++j) {
            swt[i][j][j] = 1;
            scw[i][j][j] = 1;
        }
        // weights: (s_i x)_j = x_j - x_i cartan[i][j]
        for (int j = 0; j < r; ++j) swt[i][j][i] -= rs.cartan()[i][j];
        // coweights: (s_i c)_i = c_i - sum_k cartan[i][k] c_k
        for (int k = 0; k < r; ++k) scw[i][i][k] -= rs.cartan()[i][k];
    }
    auto matmul = [&](const std::vector<IVec> &a, const std::vector<IVec> &b) {
        std::vector<IVec> c(r, IVec(r, 0));
        for (int i = 0; i < r; ++i)
            for (int k = 0; k < r; ++k) {
                int aik = a[i][k];
                if (!aik) continue;
                for (int j = 0; j < r; ++j) c[i][j] += aik * b[k][j];
            }
        return c;
    };

    WeylElement id;
    id.wt_mat.assign(r, IVec(r, 0));
    id.cowt_mat.assign(r, IVec(r, 0));
    for (int j = 0; j < r; ++j) id.wt_mat[j][j] = id.cowt_mat[j][j] = 1;
    elems_.push_back(id);
    index_[flatten(id.wt_mat)] = 0;

    for (size_t head = 0; head < elems_.size(); ++head) {
        for (int i = 0; i < r; ++i) {
            auto wt = matmul(elems_[head].wt_mat, swt[i]);
            auto key = flatten(wt);
            if (index_.count(key)) continue;
            WeylElement e;
            e.wt_mat = std::move(wt);
            e.cowt_mat = matmul(elems_[head].cowt_mat, scw[i]);
            e.word = elems_[head].word;
            e.word.push_back(i);
            e.length = elems_[head].length + 1;
            index_[key] = (int)elems_.size();
            elems_.push_back(std::move(e));
            if (elems_.size() > order) throw Error("Weyl enumeration overflow");
        }
    }
    if (elems_.size() != order)
        throw Error("Weyl enumeration found " + std::to_string(elems_.size()) +
                    " elements, expected " + std::to_string(order));

    simple_.resize(r);
    for (int i = 0; i < r; ++i) simple_[i] = index_.at(flatten(swt[i]));

    // inverses: product of simple matrices along the reversed word
    for (auto &e : elems_) {
        auto m = id.wt_mat;
        for (auto it = e.word.rbegin(); it != e.word.rend(); ++it) m = matmul(m, swt[*it]);
        e.inverse = index_.at(flatten(m));
    }

    // reflections: s_alpha = 1 - <., alpha^vee> alpha
    reflections_.resize(rs.num_positive());
    for (int a = 0; a < rs.num_positive(); ++a) {
        const Root &rt = rs.root(a);
        std::vector<IVec> m(r, IVec(r, 0));
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k)
                m[j][k] = (j == k ? 1 : 0) - rt.wt[j] * rt.cowt[k];
        auto it = index_.find(flatten(m));
        if (it == index_.end()) throw Error("reflection not found in W");
        reflections_[a] = it->second;
    }

    for (int i = 0; i < size(); ++i)
        if (elems_[i].length > elems_[longest_].length) longest_ = i;
}

void WeylGroup::build_table() const {
    if (table_built_) return;
    const int n = size();
    const int r = rs_->rank();
    mult_table_.assign((size_t)n * n, -1);
    std::vector<std::vector<int>> right_mult(n, std::vector<int>(r));
    for (int a = 0; a < n; ++a)
        for (int i = 0; i < r; ++i) {
            const auto &ma = elems_[a].wt_mat;
            const auto &ms = elems_[simple_[i]].wt_mat;
            std::vector<int> key(r * r, 0);
            for (int x = 0; x < r; ++x)
                for (int k = 0; k < r; ++k) {
                    int v = ma[x][k];
                    if (!v) continue;
                    for (int y = 0; y < r; ++y) key[x * r + y] += v * ms[k][y];
                }
            right_mult[a][i] = index_.at(key);
        }
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            int cur = a;
            for (int i : elems_[b].word) cur = right_mult[cur][i];
            mult_table_[(size_t)a * n + b] = cur;
        }
    }
    table_built_ = true;
}

int WeylGroup::mult(int a, int b) const {
    build_table();
    return mult_table_[(size_t)a * size() + b];
}

IVec WeylGroup::act_weight(int w, const IVec &wt) const {
    const auto &m = elems_[w].wt_mat;
    IVec r(wt.size(), 0);
    for (size_t j = 0; j < wt.size(); ++j)
        for (size_t k = 0; k < wt.size(); ++k) r[j] += m[j][k] * wt[k];
    return r;
}

QVec WeylGroup::act_weight(int w, const QVec &wt) const {
    const auto &m = elems_[w].wt_mat;
    QVec r(wt.size(), Rational(0));
    for (size_t j = 0; j < wt.size(); ++j)
        for (size_t k = 0; k < wt.size(); ++k) r[j] += Rational(m[j][k]) * wt[k];
    return r;
}

IVec WeylGroup::act_coweight(int w, const IVec &c) const {
    const auto &m = elems_[w].cowt_mat;
    IVec r(c.size(), 0);
    for (size_t j = 0; j < c.size(); ++j)
        for (size_t k = 0; k < c.size(); ++k) r[j] += m[j][k] * c[k];
    return r;
}

QVec WeylGroup::act_coweight(int w, const QVec &c) const {
    const auto &m = elems_[w].cowt_mat;
    QVec r(c.size(), Rational(0));
    for (size_t j = 0; j < c.size(); ++j)
        for (size_t k = 0; k < c.size(); ++k) r[j] += Rational(m[j][k]) * c[k];
    return r;
}

std::pair<int, int> WeylGroup::act_root(int w, int root_idx) const {
    IVec img = act_weight(w, rs_->root(root_idx).wt);
    for (int i = 0; i < rs_->num_positive(); ++i) {
        if (rs_->root(i).wt == img) return {i, +1};
        bool neg = true;
        for (size_t j = 0; j < img.size(); ++j)
            if (rs_->root(i).wt[j] != -img[j]) { neg = false; break; }
        if (neg) return {i, -1};
    }
    throw Error("act_root: image is not a root");
}

std::vector<int> WeylGroup::inversions(int w) const {
    std::vector<int> inv;
    int wi = inverse(w);
    for (int a = 0; a < rs_->num_positive(); ++a)
        if (act_root(wi, a).second < 0) inv.push_back(a);
    return inv;
}

std::vector<std::vector<int>> WeylGroup::all_reduced_words(int w) const {
    if (w == 0) return {{}};
    std::vector<std::vector<int>> out;
    const int r = rs_->rank();
    for (int i = 0; i < r; ++i) {
        int sw = mult(simple_[i], w);
        if (elems_[sw].length != elems_[w].length - 1) continue;
        for (auto &tail : all_reduced_words(sw)) {
            std::vector<int> word;
            word.reserve(tail.size() + 1);
            word.push_back(i);
            word.insert(word.end(), tail.begin(), tail.end());
            out.push_back(std::move(word));
        }
    }
    return out;
}

int WeylGroup::lookup_wt_mat(const std::vector<IVec> &m) const {
    std::vector<int> f;
    for (const auto &row : m) f.insert(f.end(), row.begin(), row.end());
    auto it = index_.find(f);
    if (it == index_.end()) throw Error("lookup_wt_mat: not an element");
    return it->second;
}

// ---------------------------------------------------------------------------

std::vector<LengthLemmaRow> length_lemma_check(const RootSystem &rs) {
    const WeylGroup &W = rs.weyl();
    std::vector<LengthLemmaRow> rows;
    for (int a = 0; a < rs.num_positive(); ++a) {
        const Root &rt = rs.root(a);
        LengthLemmaRow row;
        row.root_idx = a;
        row.refl_length = W.length(W.reflection(a));
        row.two_rho_pair = 2 * rt.coroot_height();
        row.in_prime = rs.in_r_plus_prime(rt);
        row.equality = (row.refl_length == row.two_rho_pair - 1);
        bool bound = row.refl_length <= row.two_rho_pair - 1;
        row.ok = bound && (row.equality == row.in_prime);
        rows.push_back(row);
    }
    return rows;
}

} // namespace qhecke
