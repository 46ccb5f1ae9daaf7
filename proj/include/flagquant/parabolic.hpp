#pragma once

#include <memory>
#include <set>
#include <stdexcept>
#include <vector>

#include "flagquant/rootsys.hpp"

namespace flagquant {

/// Parabolic combinatorics for a subset Theta of the simple roots:
/// the roots spanned by Theta, the complement Delta^+ \ <Theta>, the flag
/// manifold dimension m, and the weights delta_Theta, delta'_Theta.
class ParabolicData {
public:
    ParabolicData(std::shared_ptr<const RootSystem> rs, std::set<int> theta)
        : rs_(std::move(rs)), theta_(std::move(theta)) {
        for (int i : theta_)
            if (i < 0 || i >= rs_->rank())
                throw std::out_of_range("ParabolicData: Theta index out of range");
        // <Theta> cap Delta^+: positive roots supported on Theta indices only
        for (auto& a : rs_->positive_roots()) {
            bool in_span = true;
            for (int i = 0; i < rs_->rank(); ++i)
                if (a.coords[i] != 0 && !theta_.count(i)) { in_span = false; break; }
            if (in_span) span_theta_.push_back(a);
            else complement_.push_back(a);
        }
        delta_theta_ = Weight::zero(rs_->rank());
        for (auto& a : span_theta_)
            delta_theta_ = delta_theta_ + Rat(1, 2) * rs_->root_as_weight(a);
        delta_theta_prime_ = rs_->delta() - delta_theta_;
    }

    const RootSystem& root_system() const { return *rs_; }
    std::shared_ptr<const RootSystem> root_system_ptr() const { return rs_; }
    const std::set<int>& theta() const { return theta_; }
    const std::vector<Root>& span_theta() const { return span_theta_; }
    const std::vector<Root>& complement() const { return complement_; }

    /// Complex dimension of the flag manifold.
    int m() const { return (int)complement_.size(); }

    const Weight& delta_theta() const { return delta_theta_; }
    const Weight& delta_theta_prime() const { return delta_theta_prime_; }

    /// lambda in W^Theta: zero pairing with every root of Theta, all coords integral.
    bool is_W_theta_invariant(const Weight& lam) const {
        if (!lam.is_integral()) return false;
        for (int i : theta_)
            if (lam.coords[i] != 0) return false;
        return true;
    }

    /// -2 delta'_Theta, the weight of the canonical line bundle.
    Weight canonical_weight() const { return Rat(-2) * delta_theta_prime_; }

private:
    std::shared_ptr<const RootSystem> rs_;
    std::set<int> theta_;
    std::vector<Root> span_theta_;
    std::vector<Root> complement_;
    Weight delta_theta_;
    Weight delta_theta_prime_;
};

inline ParabolicData build_parabolic(const RootSystemSpec& spec, const std::set<int>& theta) {
    return ParabolicData(std::make_shared<RootSystem>(spec), theta);
}

}  // namespace flagquant
