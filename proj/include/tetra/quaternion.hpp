#pragma once

// Rational quaternions, the rotation model of the group in SO(3), and the
// tetrahedron inscribed in the cube [-1,1]^3.

#include "tetra/group.hpp"
#include "tetra/rational.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tetra::quat {

struct Quaternion {
  Rational w, x, y, z;  // coefficients of 1, i, j, k

  static Quaternion real(const Rational& r) { return {r, 0, 0, 0}; }
  static Quaternion i() { return {0, 1, 0, 0}; }
  static Quaternion j() { return {0, 0, 1, 0}; }
  static Quaternion k() { return {0, 0, 0, 1}; }

  bool is_zero() const { return w == 0 && x == 0 && y == 0 && z == 0; }
  Quaternion conjugate() const { return {w, -x, -y, -z}; }
  Rational norm() const { return w * w + x * x + y * y + z * z; }
  Quaternion inverse() const;  // DomainError on zero
  bool is_hurwitz() const;

  friend Quaternion operator+(const Quaternion& a, const Quaternion& b);
  friend Quaternion operator-(const Quaternion& a, const Quaternion& b);
  friend Quaternion operator-(const Quaternion& a);
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
  friend Quaternion operator*(const Rational& s, const Quaternion& a);
  friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

std::string to_string(const Quaternion& q);  // "w + xi + yj + zk", rationals as p/q

using Vec3 = std::array<Rational, 3>;
using Mat3 = std::array<std::array<Rational, 3>, 3>;

class Rotation3 {
 public:
  Rotation3();  // identity
  explicit Rotation3(const Mat3& m) : m_(m) {}

  const Mat3& matrix() const { return m_; }
  const Rational& operator()(int r, int c) const { return m_[r][c]; }

  Rational determinant() const;
  Rotation3 transposed() const;
  bool is_orthogonal() const;
  Vec3 apply(const Vec3& v) const;

  friend Rotation3 operator*(const Rotation3& a, const Rotation3& b);
  friend Rotation3 operator-(const Rotation3& a);
  friend bool operator==(const Rotation3&, const Rotation3&) = default;
  friend bool operator<(const Rotation3& a, const Rotation3& b) { return a.m_ < b.m_; }

 private:
  Mat3 m_;
};

// v -> q v q^-1 on span(i, j, k).
Rotation3 conjugation_rotation(const Quaternion& q);

// Group generated by the inputs; CapExceeded once more than cap elements appear.
std::vector<Rotation3> closure(const std::vector<Rotation3>& generators, std::size_t cap);

// The 24 unit Hurwitz quaternions.
std::vector<Quaternion> binary_tetrahedral();

// Vertices (1,1,1), (1,-1,-1), (-1,1,-1), (-1,-1,1); facet a is opposite vertex a.
const std::array<Vec3, 4>& tetrahedron_vertices();

// Quaternion of g_ab, sign normalised so the first nonzero coefficient is
// positive: g_a4 is the body diagonal through vertex a, g_ab (a,b <= 3) the
// edge-midpoint axis d_a - d_b.
Quaternion gbar(int a, int b);
std::map<std::string, Quaternion> gbar_assignment();  // keys "g01".."g34"

// Product of edge quaternions realising sigma (defined up to sign).
Quaternion perm_quaternion(const group::Perm4& sigma);
// Quaternion of a group element: body diagonals for the free part, then sigma.
Quaternion word_quaternion(const group::GroupWord& w);

// Conjugating by every transposition relabels the ten rotations accordingly.
bool verify_equivariance();
// rotation(g04) commutes with rotation(g12 g23).
bool verify_centralizer();

// Negated body-diagonal rotation.
Rotation3 facet_reflection(int a);

// Permutation induced on the four body diagonals, if r preserves them.
std::optional<group::Perm4> diagonal_permutation(const Rotation3& r);

// The mod-3 splitting sends the binary tetrahedral group bijectively onto SL2(F3).
bool sl2f3_check();

}  // namespace tetra::quat
