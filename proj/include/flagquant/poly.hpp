#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "flagquant/gauss.hpp"

namespace flagquant {

/// Monomial z^a zbar^b.
struct Mono {
    int a = 0;  // exponent of z
    int b = 0;  // exponent of zbar

    friend bool operator==(const Mono& x, const Mono& y) { return x.a == y.a && x.b == y.b; }
};

/// Graded lex with z < zbar: compare total degree, then the zbar exponent.
struct MonoLess {
    bool operator()(const Mono& x, const Mono& y) const {
        int dx = x.a + x.b, dy = y.a + y.b;
        if (dx != dy) return dx < dy;
        return x.b < y.b;
    }
};

/// Polynomial in z, zbar with GaussRat coefficients.
class Poly {
public:
    using Terms = std::map<Mono, GaussRat, MonoLess>;

    Poly() = default;
    explicit Poly(GaussRat c) {
        if (!c.is_zero()) terms_[{0, 0}] = std::move(c);
    }
    Poly(GaussRat c, int a, int b) {
        if (!c.is_zero()) terms_[{a, b}] = std::move(c);
    }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(GaussRat(1)); }
    static Poly z() { return Poly(GaussRat(1), 1, 0); }
    static Poly zbar() { return Poly(GaussRat(1), 0, 1); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first.a == 0 && terms_.begin()->first.b == 0);
    }

    GaussRat constant_term() const {
        auto it = terms_.find({0, 0});
        return it == terms_.end() ? GaussRat(0) : it->second;
    }

    int total_degree() const {
        if (terms_.empty()) return -1;
        auto& m = terms_.rbegin()->first;
        return m.a + m.b;
    }

    int degree_z() const {
        int d = -1;
        for (auto& [m, c] : terms_) d = std::max(d, m.a);
        return d;
    }
    int degree_zbar() const {
        int d = -1;
        for (auto& [m, c] : terms_) d = std::max(d, m.b);
        return d;
    }

    /// Leading term in graded lex order.
    std::pair<Mono, GaussRat> leading() const {
        if (terms_.empty()) throw std::logic_error("Poly: leading term of zero");
        return *terms_.rbegin();
    }

    void add_term(Mono m, const GaussRat& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend Poly operator+(const Poly& p, const Poly& q) {
        Poly r = p;
        for (auto& [m, c] : q.terms_) r.add_term(m, c);
        return r;
    }
    friend Poly operator-(const Poly& p, const Poly& q) {
        Poly r = p;
        for (auto& [m, c] : q.terms_) r.add_term(m, -c);
        return r;
    }
    friend Poly operator-(const Poly& p) {
        Poly r;
        for (auto& [m, c] : p.terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend Poly operator*(const Poly& p, const Poly& q) {
        Poly r;
        for (auto& [m1, c1] : p.terms_)
            for (auto& [m2, c2] : q.terms_)
                r.add_term({m1.a + m2.a, m1.b + m2.b}, c1 * c2);
        return r;
    }
    Poly& operator+=(const Poly& q) { return *this = *this + q; }
    Poly& operator-=(const Poly& q) { return *this = *this - q; }
    Poly& operator*=(const Poly& q) { return *this = *this * q; }

    friend Poly operator*(const GaussRat& c, const Poly& p) {
        Poly r;
        if (c.is_zero()) return r;
        for (auto& [m, cc] : p.terms_) r.terms_.emplace(m, c * cc);
        return r;
    }

    friend bool operator==(const Poly& p, const Poly& q) { return p.terms_ == q.terms_; }
    friend bool operator!=(const Poly& p, const Poly& q) { return !(p == q); }

    Poly pow(int e) const {
        if (e < 0) throw std::invalid_argument("Poly::pow: negative exponent");
        Poly r = one(), base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    /// Partial derivative; var 0 = z, 1 = zbar.
    Poly diff(int var) const {
        Poly r;
        for (auto& [m, c] : terms_) {
            if (var == 0 && m.a > 0) r.add_term({m.a - 1, m.b}, GaussRat(Rat(m.a)) * c);
            if (var == 1 && m.b > 0) r.add_term({m.a, m.b - 1}, GaussRat(Rat(m.b)) * c);
        }
        return r;
    }

    /// Swaps z <-> zbar and conjugates coefficients.
    Poly conj() const {
        Poly r;
        for (auto& [m, c] : terms_) r.terms_.emplace(Mono{m.b, m.a}, c.conj());
        return r;
    }

    GaussRat eval(const GaussRat& zv, const GaussRat& zbv) const {
        // Horner is overkill for the degrees at hand; evaluate by powers.
        GaussRat r(0);
        std::vector<GaussRat> zp{GaussRat(1)}, bp{GaussRat(1)};
        for (auto& [m, c] : terms_) {
            while ((int)zp.size() <= m.a) zp.push_back(zp.back() * zv);
            while ((int)bp.size() <= m.b) bp.push_back(bp.back() * zbv);
            r += c * zp[m.a] * bp[m.b];
        }
        return r;
    }

    /// Exact division; throws if the division leaves a remainder.
    friend Poly divexact(Poly p, const Poly& g) {
        if (g.is_zero()) throw std::domain_error("Poly: division by zero");
        Poly q;
        while (!p.is_zero()) {
            auto [pm, pc] = p.leading();
            auto [gm, gc] = g.leading();
            if (pm.a < gm.a || pm.b < gm.b)
                throw std::logic_error("Poly: divexact with remainder");
            Poly t(pc / gc, pm.a - gm.a, pm.b - gm.b);
            q += t;
            p -= t * g;
        }
        return q;
    }

private:
    Terms terms_;
};

namespace detail {

/// Univariate view in zbar: coefficients are polynomials in z alone.
inline std::vector<Poly> zbar_coeffs(const Poly& p) {
    std::vector<Poly> cs(std::max(0, p.degree_zbar() + 1));
    for (auto& [m, c] : p.terms()) cs[m.b].add_term({m.a, 0}, c);
    return cs;
}

inline Poly from_zbar_coeffs(const std::vector<Poly>& cs) {
    Poly p;
    for (int b = 0; b < (int)cs.size(); ++b)
        for (auto& [m, c] : cs[b].terms()) p.add_term({m.a, b}, c);
    return p;
}

/// Monic gcd of univariate polynomials in z over the Gaussian rationals.
inline Poly gcd_univ_z(Poly a, Poly b) {
    while (!b.is_zero()) {
        // remainder of a by b in z
        while (!a.is_zero() && a.degree_z() >= b.degree_z()) {
            auto [am, ac] = a.leading();
            auto [bm, bc] = b.leading();
            Poly t(ac / bc, am.a - bm.a, 0);
            a -= t * b;
        }
        std::swap(a, b);
    }
    if (a.is_zero()) return a;
    return (GaussRat(1) / a.leading().second) * a;
}

inline Poly content_zbar(const Poly& p) {
    Poly c;
    for (auto& q : zbar_coeffs(p))
        if (!q.is_zero()) c = gcd_univ_z(c, q);
    return c;
}

/// Pseudo-remainder of a by b in the main variable zbar.
inline Poly prem_zbar(Poly a, const Poly& b) {
    int db = b.degree_zbar();
    auto bc = zbar_coeffs(b);
    Poly lb = bc[db];
    while (!a.is_zero() && a.degree_zbar() >= db) {
        int da = a.degree_zbar();
        auto ac = zbar_coeffs(a);
        Poly la = ac[da];
        Poly shift;
        for (auto& [m, c] : la.terms()) shift.add_term({m.a, da - db}, c);
        a = lb * a - shift * b;
    }
    return a;
}

}  // namespace detail

/// Gcd of bivariate polynomials, normalized to leading coefficient 1.
inline Poly poly_gcd(Poly a, Poly b) {
    using namespace detail;
    if (a.is_zero()) std::swap(a, b);
    if (b.is_zero()) {
        if (a.is_zero()) return a;
        return (GaussRat(1) / a.leading().second) * a;
    }
    if (a.degree_zbar() == 0 && b.degree_zbar() == 0) return gcd_univ_z(a, b);

    Poly ca = content_zbar(a), cb = content_zbar(b);
    Poly cont = gcd_univ_z(ca, cb);
    a = divexact(a, ca);
    b = divexact(b, cb);
    if (a.degree_zbar() < b.degree_zbar()) std::swap(a, b);
    // primitive PRS
    while (true) {
        if (b.is_zero()) break;
        if (b.degree_zbar() == 0) {
            b = Poly();
            a = Poly::one();
            break;
        }
        Poly r = prem_zbar(a, b);
        a = b;
        if (r.is_zero()) { b = Poly(); break; }
        b = divexact(r, content_zbar(r));
    }
    Poly g = cont * a;
    return (GaussRat(1) / g.leading().second) * g;
}

inline std::string poly_str(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (auto& [m, c] : p.terms()) {
        if (!first) s += " + ";
        first = false;
        std::string cs = gauss_str(c);
        bool unit = (c == GaussRat(1));
        std::string mono;
        if (m.a > 0) mono += "z" + (m.a > 1 ? "^" + std::to_string(m.a) : "");
        if (m.b > 0) {
            if (!mono.empty()) mono += "*";
            mono += "zbar" + (m.b > 1 ? "^" + std::to_string(m.b) : "");
        }
        if (mono.empty()) {
            s += (c.is_real() || c.re == 0) ? cs : "(" + cs + ")";
        } else if (unit) {
            s += mono;
        } else {
            bool needs_paren = !(c.is_real() || c.re == 0) || (c.is_real() && c.re < 0);
            s += (needs_paren ? "(" + cs + ")" : cs) + "*" + mono;
        }
    }
    return s;
}

}  // namespace flagquant
