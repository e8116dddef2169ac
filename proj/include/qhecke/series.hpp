#ifndef QHECKE_SERIES_HPP
#define QHECKE_SERIES_HPP

#include "qhecke/errors.hpp"
#include "qhecke/rational.hpp"

#include <cassert>
#include <map>
#include <vector>

namespace qhecke {

// Coroot-lattice vector, coordinates in simple coroots.
using Lattice = std::vector<int32_t>;

inline int height(const Lattice &b) {
    int h = 0;
    for (int32_t x : b) h += x;
    return h;
}

struct LatticeLess {
    bool operator()(const Lattice &a, const Lattice &b) const {
        int ha = height(a), hb = height(b);
        if (ha != hb) return ha < hb;
        return a < b;
    }
};

// Truncated series graded by the coroot lattice.  Coefficients are exact for
// every beta with floor <= height(beta) <= trunc; heights below the floor are
// exactly zero (a Laurent window), heights above trunc are unknown.
template <typename C>
class GradedSeries {
  public:
    using Map = std::map<Lattice, C, LatticeLess>;

    GradedSeries() : rank_(0), floor_(0), trunc_(0) {}
    GradedSeries(int rank, int trunc, int floor = 0)
        : rank_(rank), floor_(floor), trunc_(trunc) {
        assert(floor_ <= 0);
    }

    int rank() const { return rank_; }
    int trunc() const { return trunc_; }
    int floor() const { return floor_; }
    const Map &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Lattice &beta, const C &c) {
        assert((int)beta.size() == rank_);
        int h = height(beta);
        if (h > trunc_ || h < floor_) return;
        auto [it, inserted] = terms_.emplace(beta, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const C *coeff(const Lattice &beta) const {
        auto it = terms_.find(beta);
        return it == terms_.end() ? nullptr : &it->second;
    }

    GradedSeries truncated(int new_trunc, int new_floor) const {
        GradedSeries r(rank_, std::min(new_trunc, trunc_), std::max(new_floor, floor_));
        for (const auto &[b, c] : terms_) r.add(b, c);
        return r;
    }

    friend GradedSeries operator+(const GradedSeries &a, const GradedSeries &b) {
        GradedSeries r(a.rank_ ? a.rank_ : b.rank_,
                       std::min(a.trunc_, b.trunc_), std::min(a.floor_, b.floor_));
        for (const auto &[m, c] : a.terms_) r.add(m, c);
        for (const auto &[m, c] : b.terms_) r.add(m, c);
        return r;
    }

    friend GradedSeries operator-(const GradedSeries &a, const GradedSeries &b) {
        GradedSeries r(a.rank_ ? a.rank_ : b.rank_,
                       std::min(a.trunc_, b.trunc_), std::min(a.floor_, b.floor_));
        for (const auto &[m, c] : a.terms_) r.add(m, c);
        for (const auto &[m, c] : b.terms_) r.add(m, C(-c));
        return r;
    }

    // Product window: terms of height h are complete whenever every split
    // h = h1 + h2 with h1, h2 in the factors' windows is known, which gives
    // trunc = min(ta + fb, tb + fa) and floor = fa + fb.
    friend GradedSeries operator*(const GradedSeries &a, const GradedSeries &b) {
        assert(a.rank_ == b.rank_);
        GradedSeries r(a.rank_,
                       std::min(a.trunc_ + b.floor_, b.trunc_ + a.floor_),
                       a.floor_ + b.floor_);
        Lattice m(a.rank_);
        for (const auto &[ma, ca] : a.terms_)
            for (const auto &[mb, cb] : b.terms_) {
                for (int i = 0; i < a.rank_; ++i) m[i] = ma[i] + mb[i];
                r.add(m, ca * cb);
            }
        return r;
    }

    template <typename S>
    GradedSeries scaled(const S &s) const {
        GradedSeries r(rank_, trunc_, floor_);
        for (const auto &[m, c] : terms_) r.add(m, c * s);
        return r;
    }

    GradedSeries operator-() const {
        GradedSeries r(rank_, trunc_, floor_);
        for (const auto &[m, c] : terms_) r.add(m, C(-c));
        return r;
    }

    // Applies a scalar function of the grading: coefficient at beta is
    // multiplied by weight(beta).  Used for the derivations d_lambda.
    template <typename F>
    GradedSeries graded_scale(F &&weight) const {
        GradedSeries r(rank_, trunc_, floor_);
        for (const auto &[m, c] : terms_) r.add(m, c * weight(m));
        return r;
    }

    // Geometric inverse of Id-normalized series (first term must be the
    // identity element at beta = 0, supplied by the caller as `one`).
    GradedSeries inverse(const C &one) const {
        assert(floor_ == 0);
        const C *c0 = coeff(Lattice(rank_, 0));
        if (!c0) throw Error("GradedSeries::inverse: no constant term");
        // K = series - one at beta 0; inverse = sum (-K)^j, truncated.
        GradedSeries k = *this;
        k.add(Lattice(rank_, 0), C(-one));
        GradedSeries r(rank_, trunc_, 0);
        r.add(Lattice(rank_, 0), one);
        GradedSeries pw(rank_, trunc_, 0);
        pw.add(Lattice(rank_, 0), one);
        for (int j = 1; j <= trunc_; ++j) {
            pw = pw * k;
            pw.trunc_ = trunc_; // powers of K gain height each round
            if (j % 2 == 0)
                r = r + pw;
            else
                r = r - pw;
            if (pw.is_zero()) break;
        }
        r.trunc_ = trunc_;
        return r;
    }

  private:
    int rank_;
    int floor_;
    int trunc_;
    Map terms_;
};

} // namespace qhecke

#endif
