#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "flagquant/berezin.hpp"
#include "flagquant/formal_op.hpp"

namespace flagquant {

/// Potential data for the star product with separation of variables. The
/// potential enters only through its first derivatives; a formal deformation
/// Phi = Phi_0 + nu Phi_1 + ... is carried as nu-series of derivatives.
struct StarContext {
    NuSeries dphi_dz;
    NuSeries dphi_dzbar;
    RatExpr g;      // classical metric d^2 Phi_0 / dz dzbar
    RatExpr g_inv;
    int R = 3;      // truncation order

    static StarContext from_potential_derivs(NuSeries dz, NuSeries dzbar, int R = 3) {
        StarContext c;
        c.dphi_dz = std::move(dz);
        c.dphi_dzbar = std::move(dzbar);
        c.g = c.dphi_dzbar.coeff(0).diff(0);
        if (c.g.is_zero())
            throw std::invalid_argument("StarContext: degenerate potential (g = 0)");
        c.g_inv = RatExpr(1) / c.g;
        c.R = R;
        return c;
    }

    /// Phi = n log(1+z zbar).
    static StarContext fubini_study(int n = 1, int R = 3) {
        RatExpr q = RatExpr(Poly::one() + Poly::z() * Poly::zbar());
        RatExpr nn{GaussRat(Rat(n))};
        return from_potential_derivs(NuSeries(nn * RatExpr::zbar() / q),
                                     NuSeries(nn * RatExpr::z() / q), R);
    }
};

/// Truncated star product f * g = sum_{r=0..R} nu^r C_r(f,g).
struct StarSeries {
    std::vector<RatExpr> coeffs;  // index r = nu-degree, size R+1

    int order() const { return (int)coeffs.size() - 1; }
    const RatExpr& c(int r) const { return coeffs.at(r); }

    friend bool operator==(const StarSeries& a, const StarSeries& b) {
        return a.coeffs == b.coeffs;
    }
    friend bool operator!=(const StarSeries& a, const StarSeries& b) { return !(a == b); }
};

/// Left multiplication operator L_f = sum nu^r A_r characterized by A_0 =
/// mult(f), A_r 1 = 0 for r >= 1, and commutation with mult(dPhi/dzbar) +
/// nu d/dzbar order by order. Each order is a triangular solve in the
/// coefficients of powers of d/dz, top down, dividing by multiples of g.
inline FormalOperator build_left_operator(const StarContext& ctx, const RatExpr& f) {
    const int R = ctx.R;
    const RatExpr& u0 = ctx.dphi_dzbar.coeff(0);
    // A[r]: power of d/dz -> coefficient
    std::vector<std::map<int, RatExpr>> A(R + 1);
    if (!f.is_zero()) A[0][0] = f;

    auto add_to = [](std::map<int, RatExpr>& m, int j, const RatExpr& e) {
        if (e.is_zero()) return;
        auto it = m.find(j);
        if (it == m.end()) m[j] = e;
        else {
            it->second += e;
            if (it->second.is_zero()) m.erase(it);
        }
    };
    // [a d^l, mult(v)] = a sum_{j<l} C(l,j) (d^{l-j} v) d^j, accumulated with sign
    auto add_commutator = [&](std::map<int, RatExpr>& m, int l, const RatExpr& a,
                              const RatExpr& v, int sign) {
        RatExpr dv = v;
        for (int k = 1; k <= l; ++k) {
            dv = dv.diff(0);
            if (dv.is_zero()) break;
            GaussRat coef{Rat(sign) * Rat(binomial((unsigned)l, (unsigned)(l - k)))};
            add_to(m, l - k, a * (RatExpr(coef) * dv));
        }
    };

    for (int r = 1; r <= R; ++r) {
        // [A_r, mult(u_0)] = dzbar(A_{r-1}) - sum_{s>=1} [A_{r-s}, mult(u_s)]
        std::map<int, RatExpr> rhs;
        for (auto& [l, c] : A[r - 1]) add_to(rhs, l, c.diff(1));
        for (int s = 1; s <= r; ++s) {
            RatExpr us = ctx.dphi_dzbar.coeff(s);
            if (us.is_zero()) continue;
            for (auto& [l, c] : A[r - s]) add_commutator(rhs, l, c, us, -1);
        }
        // triangular solve: the top d/dz power j of the residual is produced
        // only by a_{j+1}, with coefficient (j+1) g
        while (!rhs.empty()) {
            int j = rhs.rbegin()->first;
            int l = j + 1;
            RatExpr a = rhs.rbegin()->second * ctx.g_inv / RatExpr(Rat(l));
            add_to(A[r], l, a);
            add_commutator(rhs, l, a, u0, -1);  // rhs -= [a d^l, u0]
        }
    }

    FormalOperator L(R);
    for (int r = 0; r <= R; ++r)
        for (auto& [l, c] : A[r]) L.add_term(r, l, c);
    return L;
}

/// f * g through order ctx.R; coefficient r is C_r(f,g) = A_r g.
inline StarSeries star(const StarContext& ctx, const RatExpr& f, const RatExpr& g) {
    FormalOperator L = build_left_operator(ctx, f);
    StarSeries s;
    s.coeffs.assign(ctx.R + 1, RatExpr());
    for (auto& [r, row] : L.terms()) {
        for (auto& [l, c] : row) {
            RatExpr dg = g;
            for (int t = 0; t < l && !dg.is_zero(); ++t) dg = dg.diff(0);
            s.coeffs[r] += c * dg;
        }
    }
    return s;
}

/// The opposite product f ~* g = g * f (the star product of (M, -omega_0)).
inline StarSeries opposite_star(const StarContext& ctx, const RatExpr& f, const RatExpr& g) {
    return star(ctx, g, f);
}

/// Poisson bracket normalized so that C_1(f,g) - C_1(g,f) = i {f,g}:
/// {f,g} = i g^{-1} (df/dz dg/dzbar - dg/dz df/dzbar).
inline RatExpr poisson(const StarContext& ctx, const RatExpr& f, const RatExpr& g) {
    return RatExpr::i() * ctx.g_inv * (f.diff(0) * g.diff(1) - g.diff(0) * f.diff(1));
}

/// l^(nu)_X = xi_X + nu^{-1} mult(f_X) for a unit-normalized moment family
/// (the family of Cp1Model(1), whose f_X are covariant symbols at every
/// level simultaneously after scaling).
inline FormalOperator l_nu(const MomentFamily& fam, Su2Gen gen, int max_order = 3) {
    FormalOperator op(max_order);
    op.add_term(0, 1, fam.xi(gen));
    op.add_term(-1, 0, fam.f(gen));
    return op;
}

/// sigma^(nu)_u = l_{X_1} ... l_{X_d} 1 as a nu-series (degrees -d..0).
inline NuSeries sigma_nu(const MomentFamily& fam, const std::vector<Su2Gen>& word,
                         int max_order = 3) {
    NuSeries s{RatExpr(1)};
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        s = l_nu(fam, *it, max_order).apply(s);
    return s;
}

/// Leading coefficient of nu^d sigma^(nu)_u: the product of the moment
/// functions of the letters.
inline RatExpr principal_symbol(const MomentFamily& fam, const std::vector<Su2Gen>& word) {
    RatExpr p(1);
    for (Su2Gen g : word) p *= fam.f(g);
    return p;
}

/// l^(nu) of the sl2 Casimir EF + FE + H^2/2.
inline FormalOperator casimir_l(const MomentFamily& fam, int max_order = 3) {
    FormalOperator e = l_nu(fam, Su2Gen::E, max_order);
    FormalOperator f = l_nu(fam, Su2Gen::F, max_order);
    FormalOperator h = l_nu(fam, Su2Gen::H, max_order);
    return compose(e, f) + compose(f, e) + compose(h, h).scaled(RatExpr(Rat(1, 2)));
}

/// Berezin asymptotics sweep (covariant side): the symbols f = f_X/n, g =
/// f_Y/n are level independent; at each level n the exact matrix product
/// tau(X) tau(Y)/n^2 has covariant symbol f *_h g with h = 1/n, which must
/// match C_0 + (1/n) C_1 of the unit Fubini-Study star product up to O(1/n^2).
struct AsymptoticsReport {
    std::vector<int> levels;
    std::vector<GaussRat> points;    // chart points sampled
    std::vector<std::vector<Rat>> errors;  // errors[i][p]: level i, point p
    std::vector<Rat> ratios;         // min-over-points error ratio per doubling
    Rat min_ratio_required;
    bool pass = false;
};

inline Rat gauss_abs1(const GaussRat& v) { return rat_abs(v.re) + rat_abs(v.im); }

inline AsymptoticsReport berezin_asymptotics(Su2Gen x_gen, Su2Gen y_gen,
                                             const std::vector<int>& levels,
                                             const std::vector<GaussRat>& points,
                                             const Rat& min_ratio = Rat(7, 2)) {
    StarContext ctx = StarContext::fubini_study(1, 1);
    MomentFamily unit = Cp1Model(1).moment_family();
    StarSeries fs = star(ctx, unit.f(x_gen), unit.f(y_gen));

    AsymptoticsReport rep;
    rep.levels = levels;
    rep.points = points;
    rep.min_ratio_required = min_ratio;
    for (int n : levels) {
        Cp1Model model(n);
        GaussRat inv_n2{Rat(1, Int(n) * n)};
        OpMatrix prod = (model.tau(x_gen) * model.tau(y_gen)).scaled(inv_n2);
        std::vector<Rat> errs;
        for (const GaussRat& z : points) {
            GaussRat zbar = z.conj();
            GaussRat exact = model.covariant_symbol_at(prod, z);
            GaussRat approx = fs.c(0).eval(z, zbar) + GaussRat(Rat(1, n)) * fs.c(1).eval(z, zbar);
            errs.push_back(gauss_abs1(exact - approx));
        }
        rep.errors.push_back(std::move(errs));
    }
    rep.pass = true;
    for (size_t i = 0; i + 1 < rep.errors.size(); ++i) {
        bool have_ratio = false;
        Rat worst(0);
        for (size_t p = 0; p < points.size(); ++p) {
            const Rat& cur = rep.errors[i][p];
            const Rat& nxt = rep.errors[i + 1][p];
            if (nxt == 0) continue;  // already exact at the finer level
            Rat ratio = cur / nxt;
            if (!have_ratio || ratio < worst) worst = ratio;
            have_ratio = true;
            if (ratio < min_ratio) rep.pass = false;
        }
        rep.ratios.push_back(have_ratio ? worst : Rat(0));
    }
    return rep;
}

}  // namespace flagquant
