#pragma once

#include <optional>
#include <stdexcept>

#include "flagquant/parabolic.hpp"

namespace flagquant {

/// A point of the space of s-modules on the flag manifold, parametrized by a
/// rational weight lam through the pairings lam(H_alpha). Integral
/// W^Theta-invariant lam is the line-bundle case.
class SModulePoint {
public:
    SModulePoint(ParabolicData pd, Weight lam) : pd_(std::move(pd)), lam_(std::move(lam)) {
        // K^Theta-stability: lam pairs to zero with every root of Theta
        for (int i : pd_.theta())
            if (lam_.coords[i] != 0)
                throw std::invalid_argument("SModulePoint: lam does not vanish on Theta");
    }

    const ParabolicData& parabolic() const { return pd_; }
    const Weight& lam() const { return lam_; }

    /// Nondegenerate iff no pairing with a complement coroot vanishes.
    bool is_nondegenerate() const {
        const auto& rs = pd_.root_system();
        for (auto& a : pd_.complement())
            if (rs.pairing(lam_, a) == 0) return false;
        return true;
    }

    /// Index of inertia of the pseudo-Kahler metric: the number of complement
    /// coroots pairing negatively. Empty when degenerate.
    std::optional<int> inertia_index() const {
        const auto& rs = pd_.root_system();
        int idx = 0;
        for (auto& a : pd_.complement()) {
            Rat p = rs.pairing(lam_, a);
            if (p == 0) return std::nullopt;
            if (p < 0) ++idx;
        }
        return idx;
    }

    /// Dual s-module: lam' = -lam - 2 delta'_Theta.
    SModulePoint dual() const {
        return SModulePoint(pd_, -lam_ - Rat(2) * pd_.delta_theta_prime());
    }

private:
    ParabolicData pd_;
    Weight lam_;
};

}  // namespace flagquant
