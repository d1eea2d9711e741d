#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace multconv {

/* Arbitrary-precision integers and canonical rationals (GMP). mpq_class keeps
 * gcd(|num|, den) = 1 and den > 0 after every arithmetic operation. */
using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p", "p/q" (q != 0). The result is canonicalized.
Rational parse_rational(std::string_view text);

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

int sign(const Rational& q);
int sign(const Integer& z);

Rational pow2(int exponent);

/// Exact integer square root: floor(sqrt(z)) for z >= 0.
Integer isqrt(const Integer& z);
bool is_perfect_square(const Integer& z);

}  // namespace multconv
