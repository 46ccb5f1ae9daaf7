#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace flagquant {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

inline int rat_sign(const Rat& r) { return r.sign(); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

/// Parses "p" or "p/q" with optional leading sign.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid rational: '" + s + "'");
    }
}

inline std::string rat_str(const Rat& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

inline Int factorial(unsigned n) {
    Int f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Int b = 1;
    for (unsigned j = 0; j < k; ++j) { b *= n - j; b /= j + 1; }
    return b;
}

}  // namespace flagquant
