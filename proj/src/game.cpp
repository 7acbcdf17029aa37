#include "tetra/game.hpp"

#include "tetra/errors.hpp"

#include <mutex>
#include <random>

namespace tetra::game {

Pose Pose::identity() {
  Pose p;
  for (int i = 0; i < 3; ++i) p.linear[i][i] = 1;
  return p;
}

Rational Pose::determinant() const { return quat::Rotation3(linear).determinant(); }

Vec3 Pose::apply(const Vec3& x) const {
  Vec3 r = translation;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i] += linear[i][j] * x[j];
  return r;
}

std::array<Vec3, 4> Pose::vertices() const {
  std::array<Vec3, 4> out;
  for (int a = 0; a < 4; ++a) out[a] = apply(quat::tetrahedron_vertices()[a]);
  return out;
}

std::string Pose::key() const {
  std::string k;
  for (const auto& row : linear)
    for (const auto& e : row) k += e.get_str() + ' ';
  for (const auto& e : translation) k += e.get_str() + ' ';
  return k;
}

Pose operator*(const Pose& a, const Pose& b) {
  Pose r;
  r.linear = (quat::Rotation3(a.linear) * quat::Rotation3(b.linear)).matrix();
  r.translation = a.apply(b.translation);
  return r;
}

Pose facet_pose(int a) {
  if (a < 0 || a > 3) throw DomainError("facet index out of range 0..3");
  const Vec3& d = quat::tetrahedron_vertices()[a];
  // x -> x - (2/3)(d.x + 1) d, the plane d.x = -1 holding the other three vertices
  Pose p;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) p.linear[i][j] = (i == j ? 1 : 0) - Rational(2, 3) * d[i] * d[j];
    p.translation[i] = Rational(-2, 3) * d[i];
  }
  return p;
}

Pose symmetry_pose(const group::Perm4& sigma) {
  auto r = quat::conjugation_rotation(quat::perm_quaternion(sigma));
  Pose p;
  p.linear = (group::sign(sigma) > 0 ? r : -r).matrix();
  return p;
}

Pose pose_of_word(const group::GroupWord& w) {
  if (!w.is_normal_form()) throw DomainError("word is not in normal form");
  Pose p = Pose::identity();
  for (int a : w.free_part) p = p * facet_pose(a);
  return p * symmetry_pose(w.perm);
}

Move Move::facet_move(int a) {
  if (a < 0 || a > 3) throw DomainError("facet index out of range 0..3");
  return Move{true, a, group::kIdentityPerm};
}

Move Move::symmetry(const group::Perm4& p) {
  if (!group::is_permutation(p)) throw DomainError("not a permutation of 0..3");
  return Move{false, 0, p};
}

std::string to_string(const Move& m) {
  if (m.is_facet) return "F" + std::to_string(m.facet);
  std::string s = "S=(";
  for (int x : m.perm) s += static_cast<char>('0' + x);
  return s + ")";
}

Move parse_move(const std::string& token) {
  if (token.size() == 2 && token[0] == 'F' && token[1] >= '0' && token[1] <= '3') return Move::facet_move(token[1] - '0');
  if (token.size() == 8 && token.starts_with("S=(") && token.back() == ')') {
    group::Perm4 p{};
    for (int i = 0; i < 4; ++i) {
      char c = token[3 + i];
      if (c < '0' || c > '3') throw ParseError("bad move token: " + token);
      p[i] = c - '0';
    }
    if (!group::is_permutation(p)) throw ParseError("bad move token: " + token);
    return Move::symmetry(p);
  }
  throw ParseError("bad move token: " + token);
}

GameState GameState::initial(bool allow_symmetry) {
  GameState s;
  s.allow_symmetry = allow_symmetry;
  return s;
}

GameState apply_move(const GameState& s, const Move& m) {
  GameState r = s;
  if (m.is_facet) {
    if (m.facet < 0 || m.facet > 3) throw DomainError("facet index out of range 0..3");
    r.pose = s.pose * facet_pose(m.facet);
    r.word = group::word_multiply(s.word, group::GroupWord::letter(m.facet));
  } else {
    if (!s.allow_symmetry) throw DomainError("symmetry moves are disabled for this game");
    r.pose = s.pose * symmetry_pose(m.perm);
    r.word = group::word_multiply(s.word, group::GroupWord::permutation(m.perm));
  }
  r.history.push_back(m);
  return r;
}

GameState apply_moves(GameState s, const std::vector<Move>& moves) {
  for (const auto& m : moves) s = apply_move(s, m);
  return s;
}

std::vector<Move> solve(const GameState& s) {
  std::vector<Move> out;
  if (s.word.perm != group::kIdentityPerm) out.push_back(Move::symmetry(group::invert(s.word.perm)));
  for (auto it = s.word.free_part.rbegin(); it != s.word.free_part.rend(); ++it) out.push_back(Move::facet_move(*it));
  return out;
}

GameState scramble(int n, std::uint64_t seed, bool allow_symmetry) {
  if (n < 0) throw DomainError("scramble length must be nonnegative");
  std::mt19937_64 rng(seed);
  GameState s = GameState::initial(allow_symmetry);
  int last = -1;
  for (int i = 0; i < n; ++i) {
    int a;
    if (last < 0) {
      a = static_cast<int>(rng() % 4);
    } else {
      a = static_cast<int>(rng() % 3);
      if (a >= last) ++a;
    }
    s = apply_move(s, Move::facet_move(a));
    last = a;
  }
  return s;
}

PoseTable::PoseTable(int max_length, bool with_permutations) {
  if (max_length < 0 || max_length > kMaxLookupLength) throw DomainError("lookup length out of range");
  std::vector<std::pair<group::GroupWord, Pose>> frontier{{group::GroupWord::identity(), Pose::identity()}};
  std::vector<Pose> syms;
  const auto& perms = group::all_perms();
  if (with_permutations)
    for (const auto& p : perms) syms.push_back(symmetry_pose(p));
  auto insert = [&](const group::GroupWord& w, const Pose& p) {
    ++inserted_;
    auto [it, ok] = table_.emplace(p.key(), w);
    if (!ok) collisions_.emplace_back(it->second, w);
  };
  for (int len = 0; len <= max_length; ++len) {
    std::vector<std::pair<group::GroupWord, Pose>> next;
    for (const auto& [w, p] : frontier) {
      if (with_permutations) {
        for (std::size_t i = 0; i < perms.size(); ++i) insert(group::GroupWord{w.free_part, perms[i]}, p * syms[i]);
      } else {
        insert(w, p);
      }
      if (len == max_length) continue;
      for (int a = 0; a < 4; ++a) {
        if (!w.free_part.empty() && w.free_part.back() == a) continue;
        group::GroupWord v = w;
        v.free_part.push_back(a);
        next.emplace_back(std::move(v), p * facet_pose(a));
      }
    }
    frontier = std::move(next);
  }
}

std::optional<group::GroupWord> PoseTable::find(const Pose& p) const {
  auto it = table_.find(p.key());
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

std::optional<group::GroupWord> pose_to_word(const Pose& p, int max_length) {
  if (max_length < 0 || max_length > kMaxLookupLength) throw DomainError("lookup length out of range");
  static std::mutex mu;
  static std::map<int, PoseTable> cache;
  const PoseTable* table;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(max_length);
    if (it == cache.end()) it = cache.emplace(max_length, PoseTable(max_length, false)).first;
    table = &it->second;
  }
  for (const auto& sigma : group::all_perms()) {
    // p = pose(u) * s_sigma, so look up p * s_sigma^-1
    auto hit = table->find(p * symmetry_pose(group::invert(sigma)));
    if (hit) return group::GroupWord{hit->free_part, sigma};
  }
  return std::nullopt;
}

}  // namespace tetra::game
