#include "tetra/padic.hpp"

#include "tetra/errors.hpp"

#include <algorithm>

namespace tetra {

Integer pow3(int k) {
  if (k < 0) throw DomainError("negative exponent");
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 3, static_cast<unsigned long>(k));
  return r;
}

namespace {

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) throw InternalError("unit not invertible");
  return r;
}

// Split an integer s (known modulo 3^width) into valuation and unit.
Padic3 normalise(int base_val, Integer s, int width) {
  const int abs = base_val + width;
  if (width <= 0) return Padic3::zero(abs);
  s = mod(s, pow3(width));
  if (s == 0) return Padic3::zero(abs);
  int k = valuation3(s);
  Integer u;
  mpz_divexact(u.get_mpz_t(), s.get_mpz_t(), pow3(k).get_mpz_t());
  return Padic3::from_unit(base_val + k, u, width - k);
}

}  // namespace

Padic3 Padic3::zero(int absolute_precision) {
  Padic3 z;
  z.abs_ = absolute_precision;
  return z;
}

Padic3 Padic3::from_unit(int valuation, const Integer& unit, int r) {
  if (r < 1) return zero(valuation + std::max(r, 0));
  if (mpz_divisible_ui_p(unit.get_mpz_t(), 3)) throw InternalError("unit divisible by 3");
  Padic3 p;
  p.zero_ = false;
  p.val_ = valuation;
  p.abs_ = valuation + r;
  p.unit_ = mod(unit, pow3(r));
  return p;
}

Padic3 Padic3::from_rational(const Rational& q, int r) {
  if (q == 0) return zero(r);
  Integer num = q.get_num(), den = q.get_den();
  int vn = valuation3(num), vd = valuation3(den);
  mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), pow3(vn).get_mpz_t());
  mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), pow3(vd).get_mpz_t());
  const Integer m = pow3(r);
  return from_unit(vn - vd, mod(num * inverse_mod(den, m), m), r);
}

Integer Padic3::residue(int k) const {
  if (k <= 0) return 0;
  if (abs_ < k) throw PrecisionExhausted("residue mod 3^" + std::to_string(k) + " needs more digits");
  if (zero_ || val_ >= k) return 0;
  if (val_ < 0) throw DomainError("residue of a non-integral 3-adic number");
  return mod(pow3(val_) * unit_, pow3(k));
}

Padic3 Padic3::inverse() const {
  if (zero_) throw PrecisionExhausted("cannot invert a value that is zero to working precision");
  const int r = relative_precision();
  return from_unit(-val_, inverse_mod(unit_, pow3(r)), r);
}

Padic3 Padic3::with_precision(int absolute) const {
  if (absolute >= abs_) return *this;
  if (zero_) return zero(absolute);
  return normalise(val_, unit_, absolute - val_);
}

Padic3 operator+(const Padic3& a, const Padic3& b) {
  const int abs = std::min(a.abs_, b.abs_);
  if (a.zero_ && b.zero_) return Padic3::zero(abs);
  if (a.zero_) return b.with_precision(abs);
  if (b.zero_) return a.with_precision(abs);
  const int m = std::min(a.val_, b.val_);
  Integer s = a.unit_ * pow3(a.val_ - m) + b.unit_ * pow3(b.val_ - m);
  return normalise(m, s, abs - m);
}

Padic3 operator-(const Padic3& a) {
  if (a.zero_) return a;
  return Padic3::from_unit(a.val_, -a.unit_, a.relative_precision());
}

Padic3 operator*(const Padic3& a, const Padic3& b) {
  if (a.zero_ && b.zero_) return Padic3::zero(a.abs_ + b.abs_);
  if (a.zero_) return Padic3::zero(a.abs_ + b.val_);
  if (b.zero_) return Padic3::zero(b.abs_ + a.val_);
  const int r = std::min(a.relative_precision(), b.relative_precision());
  return Padic3::from_unit(a.val_ + b.val_, a.unit_ * b.unit_, r);
}

bool Padic3::congruent(const Padic3& o) const { return (*this - o).is_zero(); }

Padic3 sqrt_hensel(const Padic3& a) {
  if (a.is_zero()) throw PrecisionExhausted("square root of a value that is zero to working precision");
  if (a.valuation() % 2 != 0) throw DomainError("odd valuation has no 3-adic square root");
  if (mpz_fdiv_ui(a.unit().get_mpz_t(), 3) != 1) throw DomainError("unit is not a square modulo 3");
  const int r = a.relative_precision();
  const Integer m = pow3(r);
  // Newton: x <- x - (x^2 - u) / (2x), starting at 1; doubles digits each step.
  Integer x = 1;
  for (int known = 1; known < r; known *= 2) {
    Integer fx = x * x - a.unit();
    x = mod(x - fx * inverse_mod(2 * x, m), m);
  }
  return Padic3::from_unit(a.valuation() / 2, x, r);
}

std::string to_string(const Padic3& a) {
  const std::string tail = " (mod 3^" + std::to_string(a.absolute_precision()) + ")";
  if (a.is_zero()) return "0" + tail;
  return "3^" + std::to_string(a.valuation()) + "*" + a.unit().get_str() + tail;
}

}  // namespace tetra
