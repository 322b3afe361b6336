#pragma once

#include "rbraid/rational.hpp"

namespace rbraid {

// Element r + s*sqrt(2) of the quadratic extension Q(sqrt(2)). The norm
// r^2 - 2 s^2 vanishes over Q only at the origin, so every nonzero Scalar
// is invertible.
struct Scalar {
  Rational r;
  Rational s;

  Scalar() : r(0), s(0) {}
  Scalar(long value) : r(value), s(0) {}  // NOLINT: integer literals are scalars
  explicit Scalar(Rational rational_part) : r(std::move(rational_part)), s(0) {}
  Scalar(Rational rational_part, Rational sqrt2_part)
      : r(std::move(rational_part)), s(std::move(sqrt2_part)) {}

  bool is_zero() const { return r == 0 && s == 0; }
  bool operator==(const Scalar&) const = default;
};

Scalar operator+(const Scalar& a, const Scalar& b);
Scalar operator-(const Scalar& a, const Scalar& b);
Scalar operator-(const Scalar& a);
Scalar operator*(const Scalar& a, const Scalar& b);

// Throws std::domain_error on zero.
Scalar inverse(const Scalar& a);

double to_double(const Scalar& a);

// "r" when s = 0, otherwise "r+s*sqrt2" with rationals as "num/den".
std::string scalar_str(const Scalar& a);

}  // namespace rbraid
