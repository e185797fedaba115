#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace zgr {

// Exact rational coefficients. All symbolic arithmetic in the kernel
// is over Q; floating point appears only in the numeric zero-test
// fallback and reporting.
using Rational = mpq_class;

inline Rational rational_of(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline double to_double(const Rational& r) { return r.get_d(); }

inline std::string to_string(const Rational& r) { return r.get_str(); }

} // namespace zgr
