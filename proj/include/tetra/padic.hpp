#pragma once

// Truncated 3-adic numbers with tracked precision.

#include "tetra/rational.hpp"

#include <string>

namespace tetra {

inline constexpr int kDefaultPrecision = 48;

Integer pow3(int k);

// Nonzero values are 3^v * u with the unit u known modulo 3^r (r >= 1).
// A value that is 0 modulo 3^A is held as zero with absolute precision A.
class Padic3 {
 public:
  Padic3() = default;  // zero known to absolute precision 0

  static Padic3 zero(int absolute_precision);
  // Nonzero input gets relative precision r; zero gets absolute precision r.
  static Padic3 from_rational(const Rational& q, int r = kDefaultPrecision);
  static Padic3 from_unit(int valuation, const Integer& unit, int r);

  bool is_zero() const { return zero_; }
  // For zero this is the absolute precision, a lower bound.
  int valuation() const { return zero_ ? abs_ : val_; }
  int absolute_precision() const { return abs_; }
  int relative_precision() const { return zero_ ? 0 : abs_ - val_; }
  const Integer& unit() const { return unit_; }

  // Value modulo 3^k; needs valuation >= 0 (or k <= valuation) and
  // absolute precision >= k, else PrecisionExhausted.
  Integer residue(int k) const;

  Padic3 inverse() const;  // PrecisionExhausted on zero
  Padic3 with_precision(int absolute) const;  // truncate, never extend

  friend Padic3 operator+(const Padic3& a, const Padic3& b);
  friend Padic3 operator-(const Padic3& a);
  friend Padic3 operator-(const Padic3& a, const Padic3& b) { return a + (-b); }
  friend Padic3 operator*(const Padic3& a, const Padic3& b);

  // Agreement to the smaller absolute precision.
  bool congruent(const Padic3& o) const;

 private:
  bool zero_ = true;
  int val_ = 0;
  int abs_ = 0;
  Integer unit_ = 0;  // in [0, 3^(abs - val)), prime to 3
};

// Root congruent to 1 mod 3 of a value with even valuation and unit part
// congruent to 1 mod 3; DomainError on a non-residue.
Padic3 sqrt_hensel(const Padic3& a);

std::string to_string(const Padic3& a);  // "3^v*u (mod 3^A)" or "0 (mod 3^A)"

}  // namespace tetra
