#pragma once

// The tetrahedron reflection game: affine poses over Z[1/3], moves, the
// retracing solver and pose lookup.

#include "tetra/group.hpp"
#include "tetra/quaternion.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tetra::game {

using quat::Mat3;
using quat::Vec3;

// x -> linear * x + translation
struct Pose {
  Mat3 linear;
  Vec3 translation;

  static Pose identity();
  Rational determinant() const;
  Vec3 apply(const Vec3& x) const;
  std::array<Vec3, 4> vertices() const;
  std::string key() const;  // exact text key

  // (a * b)(x) = a(b(x))
  friend Pose operator*(const Pose& a, const Pose& b);
  friend bool operator==(const Pose&, const Pose&) = default;
};

// Reflection across the reference facet opposite vertex a.
Pose facet_pose(int a);
// Signed rotation sgn(sigma) R(sigma); sends vertex a to vertex sigma(a).
Pose symmetry_pose(const group::Perm4& sigma);
Pose pose_of_word(const group::GroupWord& w);

struct Move {
  bool is_facet = true;
  int facet = 0;
  group::Perm4 perm = group::kIdentityPerm;

  static Move facet_move(int a);
  static Move symmetry(const group::Perm4& p);
  friend bool operator==(const Move&, const Move&) = default;
};

std::string to_string(const Move& m);  // "F0" or "S=(1023)"
Move parse_move(const std::string& token);

struct GameState {
  Pose pose = Pose::identity();
  std::vector<Move> history;
  group::GroupWord word;
  bool allow_symmetry = false;

  static GameState initial(bool allow_symmetry = false);
};

// Facet moves reflect across the current facet; symmetry moves need
// allow_symmetry, otherwise DomainError.
GameState apply_move(const GameState& s, const Move& m);
GameState apply_moves(GameState s, const std::vector<Move>& moves);

// Inverse permutation first (if any), then the free part reversed.
std::vector<Move> solve(const GameState& s);

// n facet moves, none undoing the previous one.
GameState scramble(int n, std::uint64_t seed, bool allow_symmetry = false);

// Poses of all normal forms with free length <= max_length.
class PoseTable {
 public:
  PoseTable(int max_length, bool with_permutations);

  std::optional<group::GroupWord> find(const Pose& p) const;
  std::size_t size() const { return table_.size(); }
  std::size_t entries_inserted() const { return inserted_; }
  bool collision_free() const { return collisions_.empty(); }
  const std::vector<std::pair<group::GroupWord, group::GroupWord>>& collisions() const { return collisions_; }

 private:
  std::map<std::string, group::GroupWord> table_;
  std::size_t inserted_ = 0;
  std::vector<std::pair<group::GroupWord, group::GroupWord>> collisions_;
};

inline constexpr int kMaxLookupLength = 12;

// Breadth-first lookup over reduced facet words, trying each symmetry.
std::optional<group::GroupWord> pose_to_word(const Pose& p, int max_length);

}  // namespace tetra::game
