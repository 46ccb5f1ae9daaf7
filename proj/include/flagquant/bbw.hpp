#pragma once

#include <stdexcept>

#include "flagquant/parabolic.hpp"

namespace flagquant {

/// Cohomology bookkeeping for a line bundle L_lambda: either everything
/// vanishes, or the cohomology lives in a single degree with a dominant
/// highest weight of known dimension.
struct BBWResult {
    bool vanishes = false;
    int degree = 0;
    Weight highest_weight;
    Int dim = 0;
    WeylWord word;  // takes lambda+delta to the dominant chamber

    static BBWResult vanishing() {
        BBWResult r;
        r.vanishes = true;
        return r;
    }
};

/// Degree, highest weight and dimension of the nonzero sheaf cohomology of
/// L_lambda, lambda in W^Theta; vanishing when lambda+delta is singular.
inline BBWResult bbw(const ParabolicData& pd, const Weight& lam) {
    if (!pd.is_W_theta_invariant(lam))
        throw std::invalid_argument("bbw: lambda is not a W^Theta-invariant weight");
    const auto& rs = pd.root_system();
    Weight shifted = lam + rs.delta();
    int k = 0;
    for (auto& a : rs.positive_roots()) {
        Rat p = rs.pairing(shifted, a);
        if (p == 0) return BBWResult::vanishing();
        if (p < 0) ++k;
    }
    auto dom = rs.to_dominant(shifted);
    BBWResult r;
    r.degree = k;
    r.highest_weight = dom.dominant - rs.delta();
    r.dim = rs.weyl_dim(r.highest_weight);
    r.word = dom.word;
    return r;
}

/// Serre-duality cross-check of a BBW pair lambda, lambda' = -lambda - 2 delta'_Theta.
struct DualityReport {
    Weight lam_dual;
    BBWResult primal;
    BBWResult dual;
    bool both_vanish = false;
    bool pass = false;
};

inline DualityReport duality_check(const ParabolicData& pd, const Weight& lam) {
    const auto& rs = pd.root_system();
    DualityReport rep;
    rep.lam_dual = -lam - Rat(2) * pd.delta_theta_prime();
    rep.primal = bbw(pd, lam);
    rep.dual = bbw(pd, rep.lam_dual);
    if (rep.primal.vanishes || rep.dual.vanishes) {
        rep.both_vanish = rep.primal.vanishes && rep.dual.vanishes;
        rep.pass = rep.both_vanish;
        return rep;
    }
    rep.pass = rep.dual.degree == pd.m() - rep.primal.degree &&
               rep.dual.highest_weight == rs.negate_by_w0(rep.primal.highest_weight) &&
               rep.dual.dim == rep.primal.dim;
    return rep;
}

}  // namespace flagquant
