#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qfusion {

// Exact rational scalar. mpq_class keeps values canonical (reduced,
// denominator > 0) as long as raw constructions go through make_rat.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "-p", "p/q" with optional sign on either part.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rat: empty string");
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("parse_rat: bad rational '" + s + "'");
    if (r.get_den() == 0) throw std::invalid_argument("parse_rat: zero denominator");
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// 0^0 = 1 by convention (Taylor truncations at t = 0 rely on it).
inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat acc(1), b(base);
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

inline Int binom(unsigned long n, unsigned long k) {
    if (k > n) return Int(0);
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

}  // namespace qfusion
