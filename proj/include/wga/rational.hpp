#pragma once

#include <gmpxx.h>

#include <string>

#include "wga/common.hpp"

namespace wga {

// Arbitrary-precision rationals, always in lowest terms with positive
// denominator (mpq_class canonicalizes on construction from a fraction
// string and after every arithmetic operation we perform explicitly).
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// True when the denominator is a power of two (1 counts). Used by the
// good-ring denominator audit.
inline bool denominator_is_power_of_two(const Rational& r) {
    mpz_class d = r.get_den();
    return mpz_scan1(d.get_mpz_t(), 0) == mpz_sizeinbase(d.get_mpz_t(), 2) - 1;
}

inline Rational rational_inverse(const Rational& r) {
    if (r == 0) throw division_by_zero_error("inverse of zero rational");
    return Rational(1) / r;
}

}  // namespace wga
