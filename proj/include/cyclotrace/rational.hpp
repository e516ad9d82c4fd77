#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cyclo {

// Exact scalar: arbitrary-precision rational, always kept in lowest terms
// with positive denominator (gmp canonical form).
using Rational = mpq_class;

using Index = std::int64_t;

inline Rational ratio(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "-p", "p/q"; throws ConfigError on anything else.
Rational rational_from_string(const std::string& text);

std::string rational_to_string(const Rational& value);

} // namespace cyclo
