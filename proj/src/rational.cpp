#include "tetra/rational.hpp"

#include "tetra/errors.hpp"

#include <cctype>

namespace tetra {

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer to_integer(std::string_view s) {
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError("not a rational: '" + std::string(text) + "'");
  }
  Integer d = to_integer(den);
  if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  Rational q(to_integer(num), d);
  q.canonicalize();
  return q;
}

int valuation3(const Integer& n) {
  if (n == 0) throw DomainError("valuation of zero");
  Integer m = abs(n);
  int v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), 3)) {
    m /= 3;
    ++v;
  }
  return v;
}

}  // namespace tetra
