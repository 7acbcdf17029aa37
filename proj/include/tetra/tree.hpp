#pragma once

// The splitting of the quaternions over Q3 and the action of the group on
// the 4-regular Bruhat-Tits tree of PGL2(Q3).

#include "tetra/group.hpp"
#include "tetra/padic.hpp"
#include "tetra/quaternion.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <vector>

namespace tetra::tree {

class SplitMatrix {
 public:
  SplitMatrix() = default;
  SplitMatrix(Padic3 a, Padic3 b, Padic3 c, Padic3 d) : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

  static SplitMatrix identity(int precision = kDefaultPrecision);
  static SplitMatrix from_rationals(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                                    int precision = kDefaultPrecision);

  const Padic3& operator()(int r, int c) const { return e_[2 * r + c]; }
  Padic3& operator()(int r, int c) { return e_[2 * r + c]; }

  Padic3 determinant() const;
  // Off-diagonal zero and diagonal entries congruent, to working precision.
  bool is_scalar() const;
  // Entry-wise agreement to working precision.
  bool congruent(const SplitMatrix& o) const;
  // Entries reduced mod 3; requires integral entries.
  std::array<int, 4> mod3() const;

  friend SplitMatrix operator*(const SplitMatrix& a, const SplitMatrix& b);

 private:
  std::array<Padic3, 4> e_;
};

// The fixed square root of -2 congruent to 1 mod 3.
Padic3 sqrt_minus_two(int precision = kDefaultPrecision);

// i -> [[0,-1],[1,0]], j -> [[1,v],[v,-1]], k -> ij.
SplitMatrix split_quaternion(const quat::Quaternion& q, int precision = kDefaultPrecision);

// Lattice spanned by the columns (3^a, c) and (0, 3^b), 0 <= c < 3^b,
// primitive in Z3^2. The base vertex is (0,0,0).
struct TreeVertex {
  std::int64_t a = 0;
  std::int64_t b = 0;
  Integer c = 0;

  std::int64_t distance_from_base() const { return a + b; }
  int parity() const { return static_cast<int>((a + b) % 2); }
  bool is_valid() const;
  friend bool operator==(const TreeVertex&, const TreeVertex&) = default;
  friend bool operator<(const TreeVertex& x, const TreeVertex& y);
};

std::string to_string(const TreeVertex& v);  // "(a,b,c)"

SplitMatrix representative(const TreeVertex& v, int precision = kDefaultPrecision);
TreeVertex canonical_vertex(const SplitMatrix& m);
std::array<TreeVertex, 4> neighbors(const TreeVertex& v, int precision = kDefaultPrecision);
TreeVertex act(const SplitMatrix& g, const TreeVertex& v, int precision = kDefaultPrecision);

struct Ball {
  std::vector<TreeVertex> vertices;  // breadth-first from base
  std::vector<int> depth;
  std::vector<std::vector<int>> adjacency;
  std::vector<std::size_t> sizes_by_depth;
};

Ball ball(int radius, int precision = kDefaultPrecision);

std::vector<TreeVertex> fixed_vertices(const SplitMatrix& g, int radius, int precision = kDefaultPrecision);

// Split image of a group element (body diagonals, then the permutation).
SplitMatrix word_matrix(const group::GroupWord& w, int precision = kDefaultPrecision);

struct TransitivityReport {
  bool bijection = false;
  bool distance_matches_length = false;
  bool bipartition = false;
  std::vector<std::size_t> counts;  // words per length
  std::size_t total = 0;
};

// Reduced words in the four body diagonals against the radius-L ball.
TransitivityReport verify_simple_transitivity(int max_length, int precision = kDefaultPrecision);

struct StabilizerReport {
  std::size_t order = 0;
  std::size_t enumerated = 0;
  bool unit_determinants = false;
  bool no_length_one = false;
};

// Enumerated elements: free length <= max_free times the 24 permutations.
StabilizerReport stabilizer_order(int max_free = 2, int precision = kDefaultPrecision);

struct RigidityReport {
  bool conjugation = false;           // sigma tau sigma^-1 = tau^4
  bool generators_trivial_mod3 = false;
  std::size_t stabilizer_size = 0;    // upper triangular elements of SL2(Z/9)
  bool stabilizer_generated = false;  // equals <tau> x| <sigma>
  std::size_t order3_count = 0;
  bool order3_in_subgroup = false;    // all in <tau^3> x| <sigma^2>
  bool order3_trivial_mod3 = false;
  bool ok() const;
};

RigidityReport verify_distance2_rigidity();

}  // namespace tetra::tree
