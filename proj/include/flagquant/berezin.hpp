#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "flagquant/ratexpr.hpp"

namespace flagquant {

/// SU(2)-invariant integration on the CP^1 chart, total volume 1:
/// int z^a zbar^a (1+z zbar)^(-c) dmu = a! (c-a)! / (c+1)!, off-diagonal
/// monomials vanish by rotational symmetry.
///
/// The expression must have denominator a power of 1 + z zbar.
inline GaussRat cp1_integral(const RatExpr& e) {
    if (e.is_zero()) return GaussRat(0);
    Poly q = Poly::one() + Poly::z() * Poly::zbar();
    Poly den = e.den();
    int c = 0;
    while (!(den == Poly::one())) {
        bool divides = true;
        Poly quot;
        try {
            quot = divexact(den, q);
        } catch (const std::logic_error&) {
            divides = false;
        }
        if (!divides)
            throw std::domain_error("cp1_integral: denominator is not a power of 1+z*zbar");
        den = quot;
        ++c;
    }
    GaussRat total(0);
    for (auto& [m, coef] : e.num().terms()) {
        if (m.a != m.b) {
            if (m.a + m.b >= 2 * c + 2)
                throw std::domain_error("cp1_integral: non-integrable off-diagonal term");
            continue;  // vanishes by symmetry
        }
        if (c < m.a) throw std::domain_error("cp1_integral: non-integrable term");
        Rat val(factorial((unsigned)m.a) * factorial((unsigned)(c - m.a)),
                factorial((unsigned)c + 1));
        total += coef * GaussRat(val);
    }
    return total;
}

/// N x N matrix over the Gaussian rationals acting on the monomial basis
/// z^0..z^n; column k holds the image of z^k.
struct OpMatrix {
    std::vector<std::vector<GaussRat>> a;

    explicit OpMatrix(int n = 0) : a(n, std::vector<GaussRat>(n, GaussRat(0))) {}
    int size() const { return (int)a.size(); }

    static OpMatrix identity(int n) {
        OpMatrix m(n);
        for (int i = 0; i < n; ++i) m.a[i][i] = GaussRat(1);
        return m;
    }

    GaussRat trace() const {
        GaussRat t(0);
        for (int i = 0; i < size(); ++i) t += a[i][i];
        return t;
    }

    friend OpMatrix operator*(const OpMatrix& x, const OpMatrix& y) {
        int n = x.size();
        OpMatrix r(n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                if (x.a[i][k].is_zero()) continue;
                for (int j = 0; j < n; ++j) r.a[i][j] += x.a[i][k] * y.a[k][j];
            }
        return r;
    }
    friend OpMatrix operator+(const OpMatrix& x, const OpMatrix& y) {
        OpMatrix r = x;
        for (int i = 0; i < r.size(); ++i)
            for (int j = 0; j < r.size(); ++j) r.a[i][j] += y.a[i][j];
        return r;
    }
    friend OpMatrix operator-(const OpMatrix& x, const OpMatrix& y) {
        OpMatrix r = x;
        for (int i = 0; i < r.size(); ++i)
            for (int j = 0; j < r.size(); ++j) r.a[i][j] -= y.a[i][j];
        return r;
    }
    OpMatrix scaled(const GaussRat& c) const {
        OpMatrix r = *this;
        for (auto& row : r.a)
            for (auto& x : row) x *= c;
        return r;
    }
    friend bool operator==(const OpMatrix& x, const OpMatrix& y) { return x.a == y.a; }
};

enum class Su2Gen : char { E = 'E', F = 'F', H = 'H' };

inline Su2Gen su2_gen_from_char(char c) {
    switch (c) {
        case 'E': return Su2Gen::E;
        case 'F': return Su2Gen::F;
        case 'H': return Su2Gen::H;
        default: throw std::invalid_argument(std::string("unknown generator '") + c + "'");
    }
}

/// The holomorphic vector fields of the sl2 action on the chart and the
/// associated moment functions. Conventions, fixed once:
///   xi_E = d/dz,  xi_F = -z^2 d/dz,  xi_H = -2z d/dz,
/// and l_X = xi_X + f_X with
///   f_E = n zbar/(1+z zbar), f_F = n z/(1+z zbar), f_H = n(1-z zbar)/(1+z zbar),
/// so that [l_E, l_F] = l_H etc. hold exactly and f_H(0) = n.
/// (f_X here already carries the factor i of the moment function proper;
/// all three are real rational functions.)
struct MomentFamily {
    RatExpr xi_E, xi_F, xi_H;  // coefficient of d/dz
    RatExpr f_E, f_F, f_H;

    const RatExpr& xi(Su2Gen g) const {
        switch (g) {
            case Su2Gen::E: return xi_E;
            case Su2Gen::F: return xi_F;
            default: return xi_H;
        }
    }
    const RatExpr& f(Su2Gen g) const {
        switch (g) {
            case Su2Gen::E: return f_E;
            case Su2Gen::F: return f_F;
            default: return f_H;
        }
    }
};

/// Fully explicit model of the weight-n line bundle over CP^1 on one chart:
/// holomorphic sections are polynomials of degree <= n with the metric
/// h(s)(z) = |s(z)|^2 (1+z zbar)^(-n).
class Cp1Model {
public:
    explicit Cp1Model(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("Cp1Model: negative weight");
        for (int k = 0; k <= n; ++k)
            norms_.push_back(Rat(factorial((unsigned)k) * factorial((unsigned)(n - k)),
                                 factorial((unsigned)n + 1)));
    }

    int n() const { return n_; }
    int N() const { return n_ + 1; }

    /// ||z^k||^2 = k!(n-k)!/(n+1)!.
    const std::vector<Rat>& monomial_norms() const { return norms_; }

    RatExpr one_plus_zzbar() const {
        return RatExpr(Poly::one() + Poly::z() * Poly::zbar());
    }

    /// dPhi/dzbar for the potential Phi = n log(1+z zbar).
    RatExpr potential_dzbar() const {
        return RatExpr(Poly(GaussRat(Rat(n_)), 1, 0)) / one_plus_zzbar();
    }

    /// Coherent state e_{s0(w)} in the monomial basis: coefficient of z^k is
    /// wbar^k/||z^k||^2.
    std::vector<GaussRat> coherent_coeffs(const GaussRat& w) const {
        std::vector<GaussRat> c;
        GaussRat wbar = w.conj(), p(1);
        for (int k = 0; k <= n_; ++k) {
            c.push_back(p / GaussRat(norms_[k]));
            p *= wbar;
        }
        return c;
    }

    /// Overlap S(x) = <e_{s0(x)}, e_{s0(x)}> as a rational function of the
    /// chart point; equals (n+1)(1+x xbar)^n.
    RatExpr overlap() const {
        RatExpr s;
        Poly t = Poly::z() * Poly::zbar();
        for (int k = 0; k <= n_; ++k)
            s += RatExpr(t.pow(k)) / RatExpr(GaussRat(norms_[k]));
        return s;
    }

    /// <s, e_{s0(w)}> for a section s given by basis coefficients; equals s(w).
    GaussRat coherent_pair(const std::vector<GaussRat>& s, const GaussRat& w) const {
        GaussRat acc(0), p(1);
        for (int k = 0; k <= n_; ++k) {
            acc += s[k] * p;
            p *= w;
        }
        return acc;
    }

    /// Covariant symbol of A: f_A(x) = <A e_q, e_q>/<e_q, e_q>.
    RatExpr covariant_symbol(const OpMatrix& A) const {
        check(A);
        RatExpr num;
        for (int j = 0; j <= n_; ++j)
            for (int k = 0; k <= n_; ++k) {
                if (A.a[j][k].is_zero()) continue;
                num += RatExpr(Poly(A.a[j][k] / GaussRat(norms_[k]), j, k));
            }
        return num / overlap();
    }

    /// Covariant symbol evaluated at a chart point without building the
    /// symbolic expression (used for large n).
    GaussRat covariant_symbol_at(const OpMatrix& A, const GaussRat& x) const {
        check(A);
        GaussRat xbar = x.conj();
        std::vector<GaussRat> xp{GaussRat(1)}, bp{GaussRat(1)};
        for (int k = 1; k <= n_; ++k) {
            xp.push_back(xp.back() * x);
            bp.push_back(bp.back() * xbar);
        }
        GaussRat num(0), s(0);
        for (int k = 0; k <= n_; ++k) {
            GaussRat inv_norm = GaussRat(1) / GaussRat(norms_[k]);
            s += xp[k] * bp[k] * inv_norm;
            for (int j = 0; j <= n_; ++j) {
                if (A.a[j][k].is_zero()) continue;
                num += A.a[j][k] * xp[j] * bp[k] * inv_norm;
            }
        }
        return num / s;
    }

    /// Toeplitz operator of g: entries <g z^j, z^k>/||z^k||^2.
    OpMatrix contravariant_hat(const RatExpr& g) const {
        RatExpr weight = one_plus_zzbar().pow(-n_);
        OpMatrix m(N());
        for (int j = 0; j <= n_; ++j)
            for (int k = 0; k <= n_; ++k) {
                GaussRat ip = cp1_integral(g * RatExpr(Poly(GaussRat(1), j, k)) * weight);
                m.a[k][j] = ip / GaussRat(norms_[k]);
            }
        return m;
    }

    MomentFamily moment_family() const {
        RatExpr denom = one_plus_zzbar();
        RatExpr nn{GaussRat(Rat(n_))};
        MomentFamily fam;
        fam.xi_E = RatExpr(1);
        fam.xi_F = -RatExpr(Poly(GaussRat(1), 2, 0));
        fam.xi_H = RatExpr(Poly(GaussRat(-2), 1, 0));
        fam.f_E = nn * RatExpr::zbar() / denom;
        fam.f_F = nn * RatExpr::z() / denom;
        fam.f_H = nn * (RatExpr(1) - RatExpr::z() * RatExpr::zbar()) / denom;
        return fam;
    }

    /// Matrix of tau(X) on polynomial sections in the monomial basis.
    OpMatrix tau(Su2Gen g) const {
        OpMatrix m(N());
        switch (g) {
            case Su2Gen::E:  // d/dz
                for (int k = 1; k <= n_; ++k) m.a[k - 1][k] = GaussRat(Rat(k));
                break;
            case Su2Gen::F:  // -z^2 d/dz + n z
                for (int k = 0; k < n_; ++k) m.a[k + 1][k] = GaussRat(Rat(n_ - k));
                break;
            case Su2Gen::H:  // -2z d/dz + n
                for (int k = 0; k <= n_; ++k) m.a[k][k] = GaussRat(Rat(n_ - 2 * k));
                break;
        }
        return m;
    }

    OpMatrix tau_word(const std::vector<Su2Gen>& word) const {
        OpMatrix m = OpMatrix::identity(N());
        for (Su2Gen g : word) m = m * tau(g);
        return m;
    }

    /// l_X acting on a function: xi_X * de/dz + f_X * e.
    RatExpr l_apply(Su2Gen g, const RatExpr& e) const {
        MomentFamily fam = moment_family();
        return fam.xi(g) * e.diff(0) + fam.f(g) * e;
    }

    /// sigma_u = l_{X_1} ... l_{X_k} 1 for a word u = X_1...X_k.
    RatExpr sigma(const std::vector<Su2Gen>& word) const {
        RatExpr e(1);
        for (auto it = word.rbegin(); it != word.rend(); ++it) e = l_apply(*it, e);
        return e;
    }

    struct TraceIdentity {
        GaussRat integral_side;  // N * int sigma_u dmu
        GaussRat trace_side;     // tr tau(u)
        bool pass = false;
    };

    /// N int sigma_u dmu = tr tau(u), checked in exact arithmetic.
    TraceIdentity trace_identity(const std::vector<Su2Gen>& word) const {
        TraceIdentity t;
        t.integral_side = GaussRat(Rat(N())) * cp1_integral(sigma(word));
        t.trace_side = tau_word(word).trace();
        t.pass = t.integral_side == t.trace_side;
        return t;
    }

private:
    void check(const OpMatrix& A) const {
        if (A.size() != N()) throw std::invalid_argument("OpMatrix size mismatch");
    }

    int n_;
    std::vector<Rat> norms_;
};

inline std::vector<Su2Gen> parse_word(const std::string& s) {
    std::vector<Su2Gen> w;
    for (char c : s)
        if (!std::isspace((unsigned char)c)) w.push_back(su2_gen_from_char(c));
    return w;
}

}  // namespace flagquant
