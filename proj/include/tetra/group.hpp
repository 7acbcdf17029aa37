#pragma once

// The group (Z/2)^{*4} x| S4 in normal form, its action on the lattice,
// chamber reduction and nef testing for the family (1,1,1,1,t).

#include "tetra/lattice.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tetra::group {

using Perm4 = std::array<int, 4>;

inline constexpr Perm4 kIdentityPerm = {0, 1, 2, 3};

bool is_permutation(std::span<const int> p);
Perm4 compose(const Perm4& s, const Perm4& t);  // (s t)(i) = s(t(i))
Perm4 invert(const Perm4& s);
int sign(const Perm4& s);
// All 24 permutations in lexicographic order.
const std::vector<Perm4>& all_perms();

// Free part is a reduced word in x0..x3, read left to right; the
// permutation sits to the right of it.
struct GroupWord {
  std::vector<int> free_part;
  Perm4 perm = kIdentityPerm;

  static GroupWord identity() { return {}; }
  static GroupWord letter(int a);
  static GroupWord permutation(const Perm4& p);

  std::size_t length() const { return free_part.size(); }
  bool is_normal_form() const;
  friend bool operator==(const GroupWord&, const GroupWord&) = default;
};

GroupWord word_multiply(const GroupWord& u, const GroupWord& v);
GroupWord word_inverse(const GroupWord& u);

// "x0 x1 s=(1023)"; the identity prints as "id".
std::string to_string(const GroupWord& w);
// Tokens multiply left to right, so any token sequence is accepted and
// reduced. At most one permutation token.
GroupWord parse_word(std::string_view text);

// Every normal form with free part of length <= max_length, ordered by
// length, then free part, then permutation.
std::vector<GroupWord> normal_forms(int max_length);
// Number of reduced free words of length exactly n.
std::size_t reduced_word_count(int n);

class FamilyParams {
 public:
  explicit FamilyParams(const std::array<Rational, 5>& lambdas);
  static FamilyParams family(const Rational& t);  // (1,1,1,1,t)

  const std::array<Rational, 5>& lambdas() const { return lambdas_; }
  const Rational& operator[](std::size_t i) const { return lambdas_[i]; }

  // lambda_0 = ... = lambda_3 != lambda_4, i.e. (1,1,1,1,t), t != 1, up to scale.
  bool is_family_shape() const;
  bool all_distinct() const;

 private:
  std::array<Rational, 5> lambdas_;
};

// Transposition (ab) on pair subscripts, composed with the reflection in
// alpha_ab when lambda_a != lambda_b.
lattice::LatticeIsometry generator_matrix(int a, int b, const FamilyParams& params);

// x_a -> g_{a4}, sigma -> pair permutation fixing 4. Family shape only.
lattice::LatticeIsometry word_to_isometry(const GroupWord& w, const FamilyParams& params);

struct ChamberResult {
  lattice::LatticeVector vector;
  GroupWord word;
  std::size_t steps = 0;
};

inline constexpr std::size_t kChamberIterationCap = 1'000'000;

// Interior roots alpha_{a4}, a <= 3, for the family.
std::vector<int> interior_roots(const FamilyParams& params);
// All U roots plus alpha_ab with lambda_a = lambda_b.
std::vector<int> exterior_roots(const FamilyParams& params);

ChamberResult reduce_to_chamber(const lattice::LatticeVector& v, const FamilyParams& params);
bool is_nef(const lattice::LatticeVector& v, const FamilyParams& params);

bool verify_shimada_relations(const FamilyParams& params);

std::vector<std::array<Rational, 5>> new_nodes(const Rational& t);

struct EnumerationReport {
  bool ok = true;
  std::size_t checked = 0;  // words or pairs examined
  std::string detail;
};

// Image of a product equals the product of images, all pairs of normal
// forms with free length <= max_length.
EnumerationReport verify_homomorphism(const FamilyParams& params, int max_length);
// Distinct normal forms with free length <= max_length give distinct matrices.
EnumerationReport verify_injectivity(const FamilyParams& params, int max_length);
// No normal form with free length <= max_length sends U01 to alpha01.
EnumerationReport verify_parity_invariant(const FamilyParams& params, int max_length);

}  // namespace tetra::group
