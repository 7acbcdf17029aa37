#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tetra {

using Rational = mpq_class;
using Integer = mpz_class;

// Exact "p/q" text form; the denominator is always written, even when 1.
std::string to_string(const Rational& q);

// Accepts "p/q" or "p" with optional sign; throws ParseError otherwise.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// 3-adic valuation of a nonzero integer.
int valuation3(const Integer& n);

}  // namespace tetra
