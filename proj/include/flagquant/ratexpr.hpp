#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "flagquant/poly.hpp"

namespace flagquant {

/// Rational function in z, zbar over the Gaussian rationals.
///
/// Always kept in canonical form: gcd-reduced, denominator with leading
/// coefficient 1 in graded lex order, so equality is syntactic.
class RatExpr {
public:
    RatExpr() : num_(), den_(Poly::one()) {}
    RatExpr(Poly num, Poly den = Poly::one()) : num_(std::move(num)), den_(std::move(den)) {
        canonicalize();
    }
    RatExpr(GaussRat c) : num_(Poly(std::move(c))), den_(Poly::one()) {}
    RatExpr(int n) : num_(Poly(GaussRat(n))), den_(Poly::one()) {}
    RatExpr(const Rat& r) : num_(Poly(GaussRat(r))), den_(Poly::one()) {}

    static RatExpr z() { return RatExpr(Poly::z()); }
    static RatExpr zbar() { return RatExpr(Poly::zbar()); }
    static RatExpr i() { return RatExpr(GaussRat::i()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    GaussRat constant_value() const {
        if (!is_constant()) throw std::logic_error("RatExpr: not a constant");
        return num_.constant_term() / den_.constant_term();
    }

    friend RatExpr operator+(const RatExpr& a, const RatExpr& b) {
        return RatExpr(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatExpr operator-(const RatExpr& a, const RatExpr& b) {
        return RatExpr(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatExpr operator-(const RatExpr& a) {
        RatExpr r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend RatExpr operator*(const RatExpr& a, const RatExpr& b) {
        return RatExpr(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatExpr operator/(const RatExpr& a, const RatExpr& b) {
        if (b.is_zero()) throw std::domain_error("RatExpr: division by zero");
        return RatExpr(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatExpr& operator+=(const RatExpr& b) { return *this = *this + b; }
    RatExpr& operator-=(const RatExpr& b) { return *this = *this - b; }
    RatExpr& operator*=(const RatExpr& b) { return *this = *this * b; }
    RatExpr& operator/=(const RatExpr& b) { return *this = *this / b; }

    friend bool operator==(const RatExpr& a, const RatExpr& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatExpr& a, const RatExpr& b) { return !(a == b); }

    RatExpr pow(int e) const {
        if (e < 0) {
            if (is_zero()) throw std::domain_error("RatExpr: negative power of zero");
            return RatExpr(den_.pow(-e), num_.pow(-e));
        }
        return RatExpr(num_.pow(e), den_.pow(e));
    }

    /// Exact partial derivative by the quotient rule; var 0 = z, 1 = zbar.
    RatExpr diff(int var) const {
        return RatExpr(num_.diff(var) * den_ - num_ * den_.diff(var), den_ * den_);
    }

    RatExpr conj() const { return RatExpr(num_.conj(), den_.conj()); }

    GaussRat eval(const GaussRat& zv, const GaussRat& zbv) const {
        GaussRat d = den_.eval(zv, zbv);
        if (d.is_zero()) throw std::domain_error("RatExpr: evaluation pole");
        return num_.eval(zv, zbv) / d;
    }

private:
    void canonicalize() {
        if (den_.is_zero()) throw std::domain_error("RatExpr: zero denominator");
        if (num_.is_zero()) {
            den_ = Poly::one();
            return;
        }
        Poly g = poly_gcd(num_, den_);
        if (!(g == Poly::one())) {
            num_ = divexact(num_, g);
            den_ = divexact(den_, g);
        }
        GaussRat lc = den_.leading().second;
        if (lc != GaussRat(1)) {
            GaussRat inv = GaussRat(1) / lc;
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }

    Poly num_;
    Poly den_;
};

inline std::string ratexpr_str(const RatExpr& e) {
    if (e.den() == Poly::one()) {
        if (e.num().terms().size() <= 1) return poly_str(e.num());
        return "(" + poly_str(e.num()) + ")";
    }
    return "(" + poly_str(e.num()) + ")/(" + poly_str(e.den()) + ")";
}

}  // namespace flagquant
