#pragma once

#include <stdexcept>
#include <string>

#include "flagquant/rational.hpp"

namespace flagquant {

/// Gaussian rational a + b*i with exact field arithmetic.
struct GaussRat {
    Rat re{0};
    Rat im{0};

    GaussRat() = default;
    GaussRat(Rat r) : re(std::move(r)) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    GaussRat(int n) : re(n) {}

    static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRat conj() const { return {re, -im}; }

    Rat norm_sq() const { return re * re + im * im; }

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
        Rat n = b.norm_sq();
        if (n == 0) throw std::domain_error("GaussRat: division by zero");
        GaussRat p = a * b.conj();
        return {p.re / n, p.im / n};
    }
    GaussRat& operator+=(const GaussRat& b) { return *this = *this + b; }
    GaussRat& operator-=(const GaussRat& b) { return *this = *this - b; }
    GaussRat& operator*=(const GaussRat& b) { return *this = *this * b; }
    GaussRat& operator/=(const GaussRat& b) { return *this = *this / b; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

inline std::string gauss_str(const GaussRat& c) {
    if (c.im == 0) return rat_str(c.re);
    std::string im;
    if (c.im == 1) im = "i";
    else if (c.im == -1) im = "-i";
    else im = rat_str(c.im) + "*i";
    if (c.re == 0) return im;
    if (c.im > 0) return rat_str(c.re) + "+" + im;
    return rat_str(c.re) + im;  // im already carries the minus sign
}

}  // namespace flagquant
