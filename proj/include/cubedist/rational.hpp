#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cubedist {

// GMP keeps mpq_class canonical (gcd 1, positive denominator) after every
// arithmetic operation, so == is exact structural equality.
using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q", or "p" when the denominator is 1. The sign lives on the numerator.
std::string to_string(const Rational& value);

/// Inverse of to_string. Accepts optional surrounding whitespace.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// num/den in canonical form. The two-argument mpq_class constructor does not
/// canonicalize, and GMP arithmetic requires canonical operands.
inline Rational fraction(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// 2^k as an exact rational, k >= 0.
Rational power_of_two(unsigned k);

/// (-1)^k.
inline int alternating_sign(unsigned k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace cubedist
