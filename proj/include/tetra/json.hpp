#pragma once

// JSON forms of the public types. Rationals are always "p/q" strings.

#include "tetra/coxeter.hpp"
#include "tetra/game.hpp"
#include "tetra/group.hpp"
#include "tetra/lattice.hpp"
#include "tetra/quaternion.hpp"
#include "tetra/tree.hpp"

#include <json.hpp>

namespace tetra {

using Json = nlohmann::json;

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);  // also accepts JSON integers

namespace lattice {
void to_json(Json& j, const LatticeVector& v);
void from_json(const Json& j, LatticeVector& v);
void to_json(Json& j, const LatticeIsometry& m);
void from_json(const Json& j, LatticeIsometry& m);
}  // namespace lattice

namespace group {
void to_json(Json& j, const GroupWord& w);
void from_json(const Json& j, GroupWord& w);  // must be in normal form
void to_json(Json& j, const FamilyParams& p);
FamilyParams params_from_json(const Json& j);
}  // namespace group

namespace coxeter {
void to_json(Json& j, const AffineComponent& c);
void to_json(Json& j, const ParabolicClass& c);
}  // namespace coxeter

namespace quat {
void to_json(Json& j, const Quaternion& q);
void from_json(const Json& j, Quaternion& q);
void to_json(Json& j, const Rotation3& r);
void from_json(const Json& j, Rotation3& r);
}  // namespace quat

namespace tree {
void to_json(Json& j, const TreeVertex& v);
void from_json(const Json& j, TreeVertex& v);
void to_json(Json& j, const Ball& b);
}  // namespace tree

namespace game {
void to_json(Json& j, const Pose& p);
void from_json(const Json& j, Pose& p);
void to_json(Json& j, const Move& m);
void from_json(const Json& j, Move& m);
void to_json(Json& j, const GameState& s);
// Replays the history and rejects a pose or word that disagrees with it.
void from_json(const Json& j, GameState& s);
}  // namespace game

}  // namespace tetra
