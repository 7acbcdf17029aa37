#include "tetra/json.hpp"

#include "tetra/errors.hpp"

namespace tetra {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ParseError(what);
}

template <typename F>
auto wrap(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  require(j.is_string(), "expected a rational string");
  return parse_rational(j.get<std::string>());
}

namespace lattice {

void to_json(Json& j, const LatticeVector& v) {
  j = Json::array();
  for (int i = 0; i < kRank; ++i) j.push_back(rational_to_json(v[i]));
}

void from_json(const Json& j, LatticeVector& v) {
  require(j.is_array() && j.size() == kRank, "lattice vector needs 10 entries");
  for (int i = 0; i < kRank; ++i) v[i] = rational_from_json(j[i]);
}

void to_json(Json& j, const LatticeIsometry& m) {
  j = Json::array();
  for (int r = 0; r < kRank; ++r) {
    Json row = Json::array();
    for (int c = 0; c < kRank; ++c) row.push_back(rational_to_json(m(r, c)));
    j.push_back(row);
  }
}

void from_json(const Json& j, LatticeIsometry& m) {
  require(j.is_array() && j.size() == kRank, "isometry needs 10 rows");
  RationalMatrix mat(kRank, kRank);
  for (int r = 0; r < kRank; ++r) {
    require(j[r].is_array() && j[r].size() == kRank, "isometry rows need 10 entries");
    for (int c = 0; c < kRank; ++c) mat(r, c) = rational_from_json(j[r][c]);
  }
  m = LatticeIsometry(std::move(mat));
}

}  // namespace lattice

namespace group {

void to_json(Json& j, const GroupWord& w) { j = Json{{"free", w.free_part}, {"perm", w.perm}}; }

void from_json(const Json& j, GroupWord& w) {
  wrap([&] {
    require(j.is_object(), "word must be an object");
    w.free_part = j.at("free").get<std::vector<int>>();
    w.perm = j.contains("perm") ? j.at("perm").get<Perm4>() : kIdentityPerm;
    return 0;
  });
  require(w.is_normal_form(), "word is not in normal form");
}

void to_json(Json& j, const FamilyParams& p) {
  j = Json::array();
  for (const auto& l : p.lambdas()) j.push_back(rational_to_json(l));
}

FamilyParams params_from_json(const Json& j) {
  require(j.is_array() && j.size() == 5, "parameters need 5 entries");
  std::array<Rational, 5> l;
  for (int i = 0; i < 5; ++i) l[i] = rational_from_json(j[i]);
  return FamilyParams(l);
}

}  // namespace group

namespace coxeter {

void to_json(Json& j, const AffineComponent& c) {
  Json nodes = Json::array();
  for (int n : c.nodes) nodes.push_back(lattice::root_label(n));
  j = Json{{"nodes", nodes}, {"type", c.type}};
}

void to_json(Json& j, const ParabolicClass& c) {
  Json nodes = Json::array();
  for (int n : c.nodes) nodes.push_back(lattice::root_label(n));
  j = Json{{"node_labels", nodes},
           {"components", c.components},
           {"orbit_type", c.orbit_type},
           {"orbit_id", c.orbit_id},
           {"null_vector", c.null_vector}};
}

}  // namespace coxeter

namespace quat {

void to_json(Json& j, const Quaternion& q) {
  j = Json{{"w", rational_to_json(q.w)}, {"x", rational_to_json(q.x)}, {"y", rational_to_json(q.y)},
           {"z", rational_to_json(q.z)}};
}

void from_json(const Json& j, Quaternion& q) {
  wrap([&] {
    q.w = rational_from_json(j.at("w"));
    q.x = rational_from_json(j.at("x"));
    q.y = rational_from_json(j.at("y"));
    q.z = rational_from_json(j.at("z"));
    return 0;
  });
}

namespace {

Json mat3_to_json(const Mat3& m) {
  Json j = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(rational_to_json(e));
    j.push_back(r);
  }
  return j;
}

Mat3 mat3_from_json(const Json& j) {
  require(j.is_array() && j.size() == 3, "3x3 matrix needs 3 rows");
  Mat3 m;
  for (int r = 0; r < 3; ++r) {
    require(j[r].is_array() && j[r].size() == 3, "3x3 matrix rows need 3 entries");
    for (int c = 0; c < 3; ++c) m[r][c] = rational_from_json(j[r][c]);
  }
  return m;
}

}  // namespace

void to_json(Json& j, const Rotation3& r) { j = mat3_to_json(r.matrix()); }
void from_json(const Json& j, Rotation3& r) { r = Rotation3(mat3_from_json(j)); }

}  // namespace quat

namespace tree {

void to_json(Json& j, const TreeVertex& v) {
  Json c = v.c.fits_slong_p() ? Json(v.c.get_si()) : Json(v.c.get_str());
  j = Json{{"a", v.a}, {"b", v.b}, {"c", c}};
}

void from_json(const Json& j, TreeVertex& v) {
  wrap([&] {
    v.a = j.at("a").get<std::int64_t>();
    v.b = j.at("b").get<std::int64_t>();
    const Json& c = j.at("c");
    v.c = c.is_string() ? Integer(c.get<std::string>()) : Integer(c.dump());
    return 0;
  });
  require(v.is_valid(), "not a canonical tree vertex");
}

void to_json(Json& j, const Ball& b) {
  Json vs = Json::array();
  for (std::size_t i = 0; i < b.vertices.size(); ++i) {
    Json v = b.vertices[i];
    v["depth"] = b.depth[i];
    vs.push_back(v);
  }
  j = Json{{"radius", b.sizes_by_depth.size() - 1},
           {"vertices", vs},
           {"adjacency", b.adjacency},
           {"sizes", b.sizes_by_depth}};
}

}  // namespace tree

namespace game {

void to_json(Json& j, const Pose& p) {
  Json t = Json::array();
  for (const auto& e : p.translation) t.push_back(rational_to_json(e));
  j = Json{{"linear", quat::mat3_to_json(p.linear)}, {"translation", t}};
}

void from_json(const Json& j, Pose& p) {
  wrap([&] {
    p.linear = quat::mat3_from_json(j.at("linear"));
    const Json& t = j.at("translation");
    require(t.is_array() && t.size() == 3, "translation needs 3 entries");
    for (int i = 0; i < 3; ++i) p.translation[i] = rational_from_json(t[i]);
    return 0;
  });
}

void to_json(Json& j, const Move& m) { j = to_string(m); }

void from_json(const Json& j, Move& m) {
  require(j.is_string(), "move must be a token string");
  m = parse_move(j.get<std::string>());
}

void to_json(Json& j, const GameState& s) {
  j = Json{{"pose", s.pose}, {"history", s.history}, {"word", s.word}, {"allow_symmetry", s.allow_symmetry}};
}

void from_json(const Json& j, GameState& s) {
  GameState replay;
  Pose pose;
  group::GroupWord word;
  wrap([&] {
    replay = GameState::initial(j.value("allow_symmetry", false));
    for (const auto& m : j.at("history")) replay = apply_move(replay, m.get<Move>());
    if (j.contains("pose")) pose = j.at("pose").get<Pose>();
    if (j.contains("word")) word = j.at("word").get<group::GroupWord>();
    return 0;
  });
  if (j.contains("pose")) require(pose == replay.pose, "pose does not match history");
  if (j.contains("word")) require(word == replay.word, "word does not match history");
  s = std::move(replay);
}

}  // namespace game

}  // namespace tetra
