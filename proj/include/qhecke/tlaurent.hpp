#ifndef QHECKE_TLAURENT_HPP
#define QHECKE_TLAURENT_HPP

#include "qhecke/errors.hpp"

#include <cassert>
#include <string>
#include <vector>

namespace qhecke {

// Truncated Laurent expansion in 1/t: coefficients of t^lead, t^(lead-1), ...
// down to a cutoff.  Leading coefficient is nonzero unless the series is
// zero.  Default cutoff keeps 6 terms; the limit checks in this project need
// at most 3 terms of slack.
template <typename C>
class TLaurent {
  public:
    static constexpr int default_terms = 6;

    TLaurent() : lead_(0) {}
    // c * t^e
    TLaurent(int e, const C &c, int nterms = default_terms)
        : lead_(e), nterms_(nterms) {
        if (!c.is_zero()) coeffs_.push_back(c);
    }

    bool is_zero() const { return coeffs_.empty(); }
    int lead_exp() const { return lead_; }
    const std::vector<C> &coeffs() const { return coeffs_; }

    // coefficient of t^e (zero if outside the stored range)
    C coeff_at(int e, const C &zero) const {
        if (is_zero() || e > lead_ || e <= lead_ - (int)coeffs_.size()) return zero;
        return coeffs_[lead_ - e];
    }

    friend TLaurent operator+(const TLaurent &a, const TLaurent &b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        TLaurent r;
        r.nterms_ = std::min(a.nterms_, b.nterms_);
        int hi = std::max(a.lead_, b.lead_);
        int lo = hi - r.nterms_ + 1;
        std::vector<C> out;
        for (int e = hi; e >= lo; --e)
            out.push_back(a.coeff_within(e) + b.coeff_within(e));
        r.assign(hi, std::move(out));
        return r;
    }

    friend TLaurent operator*(const TLaurent &a, const TLaurent &b) {
        if (a.is_zero() || b.is_zero()) return TLaurent();
        TLaurent r;
        r.nterms_ = std::min(a.nterms_, b.nterms_);
        int hi = a.lead_ + b.lead_;
        int terms = std::min({(int)a.coeffs_.size() + (int)b.coeffs_.size() - 1, r.nterms_});
        std::vector<C> out;
        for (int k = 0; k < terms; ++k) {
            C acc = a.coeffs_[0] * b.coeff_within(b.lead_ - k);
            for (int j = 1; j <= k && j < (int)a.coeffs_.size(); ++j)
                acc = acc + a.coeffs_[j] * b.coeff_within(b.lead_ - (k - j));
            out.push_back(acc);
        }
        r.assign(hi, std::move(out));
        return r;
    }

    TLaurent operator-() const {
        TLaurent r = *this;
        for (auto &c : r.coeffs_) c = C(-c);
        return r;
    }
    friend TLaurent operator-(const TLaurent &a, const TLaurent &b) { return a + (-b); }

    friend bool operator==(const TLaurent &a, const TLaurent &b) {
        return a.lead_ == b.lead_ && a.coeffs_ == b.coeffs_;
    }

  private:
    void assign(int hi, std::vector<C> cs) {
        // strip leading zeros to keep the invariant
        size_t i = 0;
        while (i < cs.size() && cs[i].is_zero()) ++i;
        if (i == cs.size()) {
            coeffs_.clear();
            lead_ = 0;
            return;
        }
        lead_ = hi - (int)i;
        coeffs_.assign(cs.begin() + i, cs.end());
        // strip trailing zeros (cosmetic only)
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    C coeff_within(int e) const {
        if (is_zero() || e > lead_ || e <= lead_ - (int)coeffs_.size()) return C();
        return coeffs_[lead_ - e];
    }

    int lead_;
    int nterms_ = default_terms;
    std::vector<C> coeffs_;
};

// The t -> infinity limit: the coefficient of t^0 when the leading exponent
// is <= 0; Diverges on a positive leading exponent.
template <typename C>
C t_limit(const TLaurent<C> &x) {
    if (x.is_zero()) return C();
    if (x.lead_exp() > 0)
        throw Diverges("t-Laurent limit with leading exponent " + std::to_string(x.lead_exp()));
    if (x.lead_exp() == 0) return x.coeffs()[0];
    return C();
}

} // namespace qhecke

#endif
