#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "flagquant/rational.hpp"

namespace flagquant {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

inline Family family_from_char(char c) {
    switch (c) {
        case 'A': case 'B': case 'C': case 'D': case 'E': case 'F': case 'G':
            return static_cast<Family>(c);
        default:
            throw std::invalid_argument(std::string("unknown family '") + c + "'");
    }
}

struct RootSystemSpec {
    Family family;
    int rank;
};

/// Root in the simple-root basis; integer coordinates, all of one sign.
struct Root {
    std::vector<long> coords;

    int height() const {
        long h = 0;
        for (long c : coords) h += c;
        return (int)h;
    }
    friend bool operator==(const Root& x, const Root& y) { return x.coords == y.coords; }
    friend bool operator<(const Root& x, const Root& y) { return x.coords < y.coords; }
};

/// Weight in the fundamental-weight basis: coords[i] = lambda(H_{alpha_i}).
struct Weight {
    std::vector<Rat> coords;

    Weight() = default;
    explicit Weight(std::vector<Rat> c) : coords(std::move(c)) {}
    static Weight zero(int rank) { return Weight(std::vector<Rat>(rank)); }

    bool is_integral() const {
        return std::all_of(coords.begin(), coords.end(),
                           [](const Rat& c) { return rat_den(c) == 1; });
    }
    bool is_dominant() const {
        return std::all_of(coords.begin(), coords.end(), [](const Rat& c) { return c >= 0; });
    }

    friend Weight operator+(const Weight& x, const Weight& y) {
        if (x.coords.size() != y.coords.size())
            throw std::invalid_argument("Weight: rank mismatch");
        Weight r = x;
        for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += y.coords[i];
        return r;
    }
    friend Weight operator-(const Weight& x, const Weight& y) {
        if (x.coords.size() != y.coords.size())
            throw std::invalid_argument("Weight: rank mismatch");
        Weight r = x;
        for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= y.coords[i];
        return r;
    }
    friend Weight operator-(const Weight& x) {
        Weight r = x;
        for (auto& c : r.coords) c = -c;
        return r;
    }
    friend Weight operator*(const Rat& t, const Weight& x) {
        Weight r = x;
        for (auto& c : r.coords) c *= t;
        return r;
    }
    friend bool operator==(const Weight& x, const Weight& y) { return x.coords == y.coords; }
    friend bool operator!=(const Weight& x, const Weight& y) { return !(x == y); }
};

struct WeylWord {
    std::vector<int> letters;
};

/// Exact root-system data: Cartan matrix, symmetrization, positive roots.
class RootSystem {
public:
    explicit RootSystem(RootSystemSpec spec) : spec_(spec) {
        validate(spec);
        build_cartan();
        build_positive_roots();
    }
    RootSystem(Family f, int rank) : RootSystem(RootSystemSpec{f, rank}) {}

    const RootSystemSpec& spec() const { return spec_; }
    int rank() const { return spec_.rank; }

    /// cartan(i, j) = <alpha_i, alpha_j^vee> = alpha_i(H_{alpha_j}).
    long cartan(int i, int j) const { return cartan_[i][j]; }

    /// Half squared length of the i-th simple root, minimal integer normalization.
    long d(int i) const { return d_[i]; }

    const std::vector<Root>& positive_roots() const { return positive_; }

    Root simple_root(int i) const {
        Root r{std::vector<long>(rank(), 0)};
        r.coords[i] = 1;
        return r;
    }

    /// Fundamental-basis coordinates of a root (its pairings with simple coroots).
    Weight root_as_weight(const Root& a) const {
        Weight w = Weight::zero(rank());
        for (int j = 0; j < rank(); ++j) {
            long s = 0;
            for (int i = 0; i < rank(); ++i) s += a.coords[i] * cartan_[i][j];
            w.coords[j] = Rat(s);
        }
        return w;
    }

    /// (lambda, alpha) in the Killing-proportional inner product fixed by d.
    Rat inner(const Weight& lam, const Root& a) const {
        check_rank(lam);
        Rat s = 0;
        for (int j = 0; j < rank(); ++j) s += lam.coords[j] * Rat(d_[j] * a.coords[j]);
        return s;
    }

    /// Half squared length (alpha, alpha)/2 of an arbitrary root.
    Rat half_norm_sq(const Root& a) const {
        Int s = 0;
        for (int i = 0; i < rank(); ++i)
            for (int j = 0; j < rank(); ++j)
                s += Int(a.coords[i]) * a.coords[j] * d_[j] * cartan_[i][j];
        return Rat(s, 2);
    }

    /// lambda(H_alpha), the pairing with the coroot of alpha.
    Rat pairing(const Weight& lam, const Root& a) const {
        return inner(lam, a) / half_norm_sq(a);
    }

    Weight delta() const { return Weight(std::vector<Rat>(rank(), Rat(1))); }

    /// s_i acting on a weight in fundamental coordinates.
    Weight simple_reflection(int i, const Weight& lam) const {
        check_index(i);
        check_rank(lam);
        Weight r = lam;
        const Rat c = lam.coords[i];
        if (c == 0) return r;
        for (int j = 0; j < rank(); ++j) r.coords[j] -= c * Rat(cartan_[i][j]);
        return r;
    }

    /// s_i acting on a root in simple-root coordinates.
    Root simple_reflection(int i, const Root& a) const {
        check_index(i);
        long p = 0;
        for (int k = 0; k < rank(); ++k) p += a.coords[k] * cartan_[k][i];
        Root r = a;
        r.coords[i] -= p;
        return r;
    }

    /// Applies the letters of a word in sequence: w = s_{last} ... s_{first}.
    Weight apply_word(const WeylWord& w, Weight lam) const {
        for (int i : w.letters) lam = simple_reflection(i, lam);
        return lam;
    }

    struct DominantResult {
        Weight dominant;
        WeylWord word;
        long inversions;
    };

    /// Reflects the leftmost negative coordinate until dominant; inversions is
    /// the brute-force count of positive coroots pairing negatively.
    DominantResult to_dominant(const Weight& lam) const {
        check_rank(lam);
        long inv = 0;
        for (auto& a : positive_)
            if (pairing(lam, a) < 0) ++inv;
        DominantResult res{lam, {}, inv};
        while (true) {
            int neg = -1;
            for (int i = 0; i < rank(); ++i)
                if (res.dominant.coords[i] < 0) { neg = i; break; }
            if (neg < 0) break;
            res.dominant = simple_reflection(neg, res.dominant);
            res.word.letters.push_back(neg);
        }
        return res;
    }

    /// A reduced word for the longest element w0.
    WeylWord longest_element() const {
        Weight anti = -delta();
        return to_dominant(anti).word;
    }

    /// -w0(lambda), the highest weight of the dual representation.
    Weight negate_by_w0(const Weight& lam) const {
        return -apply_word(longest_element(), lam);
    }

    /// Weyl dimension formula for a dominant integral weight.
    Int weyl_dim(const Weight& zeta) const {
        check_rank(zeta);
        if (!zeta.is_integral()) throw std::invalid_argument("weyl_dim: non-integral weight");
        if (!zeta.is_dominant()) throw std::invalid_argument("weyl_dim: non-dominant weight");
        Weight zd = zeta + delta();
        Rat prod = 1;
        for (auto& a : positive_) prod *= inner(zd, a) / inner(delta(), a);
        if (rat_den(prod) != 1)
            throw std::logic_error("weyl_dim: non-integer result");
        return rat_num(prod);
    }

private:
    static void validate(const RootSystemSpec& s) {
        int r = s.rank;
        bool ok = false;
        switch (s.family) {
            case Family::A: ok = r >= 1; break;
            case Family::B: ok = r >= 2; break;
            case Family::C: ok = r >= 2; break;
            case Family::D: ok = r >= 3; break;
            case Family::E: ok = r >= 6 && r <= 8; break;
            case Family::F: ok = r == 4; break;
            case Family::G: ok = r == 2; break;
        }
        if (!ok)
            throw std::invalid_argument("invalid family/rank combination " +
                                        std::string(1, (char)s.family) + std::to_string(r));
    }

    void build_cartan() {
        int n = spec_.rank;
        cartan_.assign(n, std::vector<long>(n, 0));
        d_.assign(n, 1);
        auto chain = [&](int upto) {
            for (int i = 0; i < upto; ++i) {
                cartan_[i][i] = 2;
                if (i + 1 < upto) { cartan_[i][i + 1] = -1; cartan_[i + 1][i] = -1; }
            }
        };
        switch (spec_.family) {
            case Family::A:
                chain(n);
                break;
            case Family::B:
                // alpha_n short; Bourbaki numbering
                chain(n);
                cartan_[n - 2][n - 1] = -2;
                for (int i = 0; i < n - 1; ++i) d_[i] = 2;
                d_[n - 1] = 1;
                break;
            case Family::C:
                // alpha_n long
                chain(n);
                cartan_[n - 1][n - 2] = -2;
                for (int i = 0; i < n - 1; ++i) d_[i] = 1;
                d_[n - 1] = 2;
                break;
            case Family::D:
                chain(n - 1);
                cartan_[n - 1][n - 1] = 2;
                cartan_[n - 2][n - 1] = 0;
                cartan_[n - 1][n - 2] = 0;
                cartan_[n - 3][n - 1] = -1;
                cartan_[n - 1][n - 3] = -1;
                break;
            case Family::E:
                // nodes 0..n-2 form a chain; node n-1 attaches to node 2
                chain(n - 1);
                cartan_[n - 1][n - 1] = 2;
                cartan_[2][n - 1] = -1;
                cartan_[n - 1][2] = -1;
                break;
            case Family::F:
                chain(4);
                cartan_[1][2] = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
                cartan_[2][1] = -1;
                d_[0] = d_[1] = 2;
                d_[2] = d_[3] = 1;
                break;
            case Family::G:
                cartan_ = {{2, -1}, {-3, 2}};
                d_ = {1, 3};  // alpha_1 short, alpha_2 long
                break;
        }
    }

    /// <beta, alpha_i^vee> for a root beta in simple coordinates.
    long root_pairing(const Root& b, int i) const {
        long s = 0;
        for (int k = 0; k < rank(); ++k) s += b.coords[k] * cartan_[k][i];
        return s;
    }

    void build_positive_roots() {
        int n = rank();
        std::vector<std::vector<Root>> by_height;
        by_height.emplace_back();  // height 0 unused
        std::vector<Root> simples;
        for (int i = 0; i < n; ++i) simples.push_back(simple_root(i));
        by_height.push_back(simples);

        auto known = [&](const Root& r) {
            for (auto& level : by_height)
                for (auto& q : level)
                    if (q == r) return true;
            return false;
        };

        for (int h = 1; !by_height[h].empty(); ++h) {
            by_height.emplace_back();
            for (auto& b : by_height[h]) {
                for (int i = 0; i < n; ++i) {
                    // alpha_i-string through beta: p down-steps, q up-steps,
                    // q = p - <beta, alpha_i^vee>
                    long p = 0;
                    Root down = b;
                    while (true) {
                        down.coords[i] -= 1;
                        bool nonneg = std::all_of(down.coords.begin(), down.coords.end(),
                                                  [](long c) { return c >= 0; });
                        if (!nonneg || down.height() <= 0 || !known(down)) break;
                        ++p;
                    }
                    if (p - root_pairing(b, i) > 0) {
                        Root up = b;
                        up.coords[i] += 1;
                        if (std::find(by_height[h + 1].begin(), by_height[h + 1].end(), up) ==
                            by_height[h + 1].end())
                            by_height[h + 1].push_back(up);
                    }
                }
            }
        }

        positive_.clear();
        for (auto& level : by_height) {
            std::sort(level.begin(), level.end());
            for (auto& r : level) positive_.push_back(r);
        }
    }

    void check_index(int i) const {
        if (i < 0 || i >= rank()) throw std::out_of_range("simple-root index out of range");
    }
    void check_rank(const Weight& w) const {
        if ((int)w.coords.size() != rank()) throw std::invalid_argument("Weight: rank mismatch");
    }

    RootSystemSpec spec_;
    std::vector<std::vector<long>> cartan_;
    std::vector<long> d_;
    std::vector<Root> positive_;
};

inline std::string weight_str(const Weight& w) {
    std::string s = "(";
    for (size_t i = 0; i < w.coords.size(); ++i) {
        if (i) s += ",";
        s += rat_str(w.coords[i]);
    }
    return s + ")";
}

}  // namespace flagquant
