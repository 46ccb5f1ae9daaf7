#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>

#include "flagquant/ratexpr.hpp"

namespace flagquant {

/// Finite series in the formal parameter nu with RatExpr coefficients.
/// Degrees may be negative (finitely many), matching formal Laurent series
/// with a finite polar part truncated at a tracked order.
class NuSeries {
public:
    using Terms = std::map<int, RatExpr>;

    NuSeries() = default;
    explicit NuSeries(RatExpr e, int deg = 0) {
        if (!e.is_zero()) terms_[deg] = std::move(e);
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    RatExpr coeff(int deg) const {
        auto it = terms_.find(deg);
        return it == terms_.end() ? RatExpr() : it->second;
    }

    void add(int deg, const RatExpr& e) {
        if (e.is_zero()) return;
        auto it = terms_.find(deg);
        if (it == terms_.end()) {
            terms_[deg] = e;
        } else {
            it->second += e;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend NuSeries operator+(const NuSeries& a, const NuSeries& b) {
        NuSeries r = a;
        for (auto& [d, e] : b.terms_) r.add(d, e);
        return r;
    }
    friend NuSeries operator-(const NuSeries& a, const NuSeries& b) {
        NuSeries r = a;
        for (auto& [d, e] : b.terms_) r.add(d, -e);
        return r;
    }
    friend bool operator==(const NuSeries& a, const NuSeries& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const NuSeries& a, const NuSeries& b) { return !(a == b); }

    NuSeries truncated(int max_deg) const {
        NuSeries r;
        for (auto& [d, e] : terms_)
            if (d <= max_deg) r.terms_.emplace(d, e);
        return r;
    }

    /// True when every coefficient is a constant function.
    bool all_constant() const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [](auto& t) { return t.second.is_constant(); });
    }

private:
    Terms terms_;
};

/// Formal differential operator: a finite nu-series whose coefficients are
/// polynomials in d/dz with RatExpr coefficients. Compositions are truncated
/// at the tracked nu-order.
class FormalOperator {
public:
    /// nu-degree -> (power of d/dz -> coefficient)
    using Terms = std::map<int, std::map<int, RatExpr>>;

    explicit FormalOperator(int max_order = 3) : max_order_(max_order) {}

    static FormalOperator mult(const RatExpr& f, int max_order = 3, int nu_deg = 0) {
        FormalOperator op(max_order);
        op.add_term(nu_deg, 0, f);
        return op;
    }

    /// c(z,zbar) * (d/dz)^k at a given nu-degree.
    static FormalOperator deriv(const RatExpr& c, int k, int max_order = 3, int nu_deg = 0) {
        FormalOperator op(max_order);
        op.add_term(nu_deg, k, c);
        return op;
    }

    int max_order() const { return max_order_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    RatExpr coeff(int nu_deg, int dz_pow) const {
        auto it = terms_.find(nu_deg);
        if (it == terms_.end()) return RatExpr();
        auto jt = it->second.find(dz_pow);
        return jt == it->second.end() ? RatExpr() : jt->second;
    }

    void add_term(int nu_deg, int dz_pow, const RatExpr& c) {
        if (c.is_zero() || nu_deg > max_order_) return;
        auto& row = terms_[nu_deg];
        auto it = row.find(dz_pow);
        if (it == row.end()) {
            row[dz_pow] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) row.erase(it);
        }
        if (terms_[nu_deg].empty()) terms_.erase(nu_deg);
    }

    friend FormalOperator operator+(const FormalOperator& a, const FormalOperator& b) {
        FormalOperator r(std::min(a.max_order_, b.max_order_));
        for (auto& [d, row] : a.terms_)
            for (auto& [j, c] : row) r.add_term(d, j, c);
        for (auto& [d, row] : b.terms_)
            for (auto& [j, c] : row) r.add_term(d, j, c);
        return r;
    }
    friend FormalOperator operator-(const FormalOperator& a, const FormalOperator& b) {
        FormalOperator r(std::min(a.max_order_, b.max_order_));
        for (auto& [d, row] : a.terms_)
            for (auto& [j, c] : row) r.add_term(d, j, c);
        for (auto& [d, row] : b.terms_)
            for (auto& [j, c] : row) r.add_term(d, j, -c);
        return r;
    }

    friend bool operator==(const FormalOperator& a, const FormalOperator& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const FormalOperator& a, const FormalOperator& b) { return !(a == b); }

    FormalOperator scaled(const RatExpr& s) const {
        FormalOperator r(max_order_);
        for (auto& [d, row] : terms_)
            for (auto& [j, c] : row) r.add_term(d, j, s * c);
        return r;
    }

    /// Composition A(B(.)) with Leibniz cross terms, truncated at the order.
    friend FormalOperator compose(const FormalOperator& a, const FormalOperator& b) {
        FormalOperator r(std::min(a.max_order_, b.max_order_));
        for (auto& [da, rowa] : a.terms_) {
            for (auto& [ja, ca] : rowa) {
                for (auto& [db, rowb] : b.terms_) {
                    if (da + db > r.max_order_) continue;
                    for (auto& [jb, cb] : rowb) {
                        // (d/dz)^ja (cb . ) = sum_t C(ja,t) (d^t cb) (d/dz)^(ja-t)
                        RatExpr dcb = cb;
                        for (int t = 0; t <= ja; ++t) {
                            if (t > 0) dcb = dcb.diff(0);
                            if (dcb.is_zero()) break;
                            GaussRat binom{Rat(binomial((unsigned)ja, (unsigned)t))};
                            r.add_term(da + db, ja - t + jb, ca * (RatExpr(binom) * dcb));
                        }
                    }
                }
            }
        }
        return r;
    }

    friend FormalOperator commutator(const FormalOperator& a, const FormalOperator& b) {
        return compose(a, b) - compose(b, a);
    }

    NuSeries apply(const NuSeries& s) const {
        NuSeries out;
        for (auto& [d, row] : terms_) {
            for (auto& [j, c] : row) {
                for (auto& [ds, e] : s.terms()) {
                    if (d + ds > max_order_) continue;
                    RatExpr de = e;
                    for (int t = 0; t < j; ++t) de = de.diff(0);
                    out.add(d + ds, c * de);
                }
            }
        }
        return out;
    }

    NuSeries apply(const RatExpr& e) const { return apply(NuSeries(e)); }

    /// Coefficientwise zbar-derivative (the commutator [d/dzbar, A] for
    /// operators whose derivations involve only d/dz).
    FormalOperator dzbar_of_coeffs() const {
        FormalOperator r(max_order_);
        for (auto& [d, row] : terms_)
            for (auto& [j, c] : row) r.add_term(d, j, c.diff(1));
        return r;
    }

    /// Commutator with the multiplication operator by u(z, zbar).
    FormalOperator commutator_with_mult(const RatExpr& u, int nu_shift = 0) const {
        FormalOperator r(max_order_);
        for (auto& [d, row] : terms_) {
            if (d + nu_shift > max_order_) continue;
            for (auto& [j, c] : row) {
                // [ (d/dz)^j, u ] = sum_{l<j} C(j,l) (d^{j-l} u) (d/dz)^l
                RatExpr dku = u;
                for (int k = 1; k <= j; ++k) {
                    dku = dku.diff(0);
                    if (dku.is_zero()) break;
                    int l = j - k;
                    GaussRat binom{Rat(binomial((unsigned)j, (unsigned)l))};
                    r.add_term(d + nu_shift, l, c * (RatExpr(binom) * dku));
                }
            }
        }
        return r;
    }

private:
    Terms terms_;
    int max_order_;
};

}  // namespace flagquant
