#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rbraid {

// Arbitrary-precision integers and rationals (GMP). Rationals are kept
// canonical: gcd(|num|, den) = 1, den >= 1, zero is 0/1. GMP arithmetic
// preserves canonical form; only raw construction needs the helpers below.
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Accepts "num/den" or "num"; rejects den = 0 and malformed input.
Rational parse_rational(std::string_view text);

// Always "num/den", e.g. "3/1", "-2/5", "0/1".
std::string rational_str(const Rational& q);

}  // namespace rbraid
