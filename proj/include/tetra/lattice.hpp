#pragma once

// Exact arithmetic in the rank-10 even unimodular lattice spanned by the
// classes U_ab and f_ab, in coordinates with respect to the U-basis.

#include "tetra/matrix.hpp"
#include "tetra/rational.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>

namespace tetra::lattice {

inline constexpr int kRank = 10;
inline constexpr int kRootCount = 20;

// Unordered pairs {a,b} of {0..4}, lexicographic: 01 02 03 04 12 13 14 23 24 34.
int pair_index(int a, int b);
std::pair<int, int> pair_at(int index);
std::string pair_label(int index);  // "01"

class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(const std::array<Rational, kRank>& coords) : coords_(coords) {}

  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::array<Rational, kRank>& coords() const { return coords_; }

  bool is_zero() const;

  LatticeVector& operator+=(const LatticeVector& o);
  LatticeVector& operator-=(const LatticeVector& o);
  LatticeVector& operator*=(const Rational& s);
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator-(LatticeVector a) { return a *= Rational(-1); }
  friend LatticeVector operator*(const Rational& s, LatticeVector a) { return a *= s; }
  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;

 private:
  std::array<Rational, kRank> coords_{};
};

enum class GeneratorKind { U, F, Alpha, Nu, Delta };

// U/F/Alpha take an unordered pair, Nu an ordered pair (a,b) with a != b,
// Delta takes no indices. Anything else is a DomainError.
LatticeVector generator(GeneratorKind kind, std::span<const int> indices);

LatticeVector U(int a, int b);
LatticeVector f(int a, int b);
LatticeVector alpha(int a, int b);
LatticeVector nu(int a, int b);
LatticeVector delta();

// The twenty simple roots: 0..9 are U in pair order, 10..19 are alpha.
LatticeVector root(int index);
std::string root_label(int index);  // "U01", "a01"
int root_index_from_label(const std::string& label);

// U_ab.U_ab = -2, U_ab.U_cd = 1 for disjoint pairs, else 0.
const RationalMatrix& u_gram();

Rational inner_product(const LatticeVector& v, const LatticeVector& w);

// v + (v.r) r for a root r with r.r = -2.
LatticeVector reflect_in_root(const LatticeVector& r, const LatticeVector& v);

// Z-basis of the lattice generated by all U_ab and f_ab (rows of Hermite form).
const std::array<LatticeVector, kRank>& integral_basis();
RationalMatrix gram_matrix(std::span<const LatticeVector> vectors);

// Coefficients with respect to integral_basis(), if they are all integers.
std::optional<std::array<Integer, kRank>> lattice_coordinates(const LatticeVector& v);
bool in_lattice(const LatticeVector& v);

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

// Sylvester signature by symmetric elimination with congruence pivoting.
Signature signature(const RationalMatrix& gram);

// Linear map on U-basis coordinates; columns are images of the U_ab.
class LatticeIsometry {
 public:
  LatticeIsometry() : m_(RationalMatrix::identity(kRank)) {}
  explicit LatticeIsometry(RationalMatrix m);

  static LatticeIsometry identity() { return {}; }
  // Matrix of v -> v + (v.r) r.
  static LatticeIsometry reflection(const LatticeVector& r);
  // Permutation of {0..4} acting on pair subscripts; perm[i] is the image of i.
  static LatticeIsometry pair_permutation(std::span<const int> perm);

  const RationalMatrix& matrix() const { return m_; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  LatticeVector apply(const LatticeVector& v) const;
  friend LatticeIsometry operator*(const LatticeIsometry& a, const LatticeIsometry& b) {
    return LatticeIsometry(a.m_ * b.m_);
  }
  friend bool operator==(const LatticeIsometry&, const LatticeIsometry&) = default;

  bool preserves_form() const;
  // Integral with determinant +-1 in the integral basis.
  bool preserves_lattice() const;

 private:
  RationalMatrix m_;
};

}  // namespace tetra::lattice
