#include "tetra/tetra.h"

#include "tetra/errors.hpp"
#include "tetra/json.hpp"
#include "tetra/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <sstream>

using namespace tetra;

struct tetra_context {
  group::FamilyParams params = group::FamilyParams::family(Rational(1, 16));
  int precision = kDefaultPrecision;
};

struct tetra_game {
  game::GameState state;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

tetra_status fail(tetra_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <typename F>
tetra_status guard(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const ParseError& e) {
    return fail(TETRA_E_INVALID_ARGUMENT, e.what());
  } catch (const Json::exception& e) {
    return fail(TETRA_E_INVALID_ARGUMENT, e.what());
  } catch (const DomainError& e) {
    return fail(TETRA_E_DOMAIN, e.what());
  } catch (const PrecisionExhausted& e) {
    return fail(TETRA_E_PRECISION, e.what());
  } catch (const std::exception& e) {
    return fail(TETRA_E_INTERNAL, e.what());
  } catch (...) {
    return fail(TETRA_E_INTERNAL, "unknown error");
  }
}

Json parse(const char* text) {
  if (!text) throw ParseError("missing JSON input");
  return Json::parse(text);
}

group::GroupWord parse_word_arg(const char* text) {
  if (!text) throw ParseError("missing word");
  std::string s(text);
  auto first = s.find_first_not_of(" \t\n");
  if (first != std::string::npos && s[first] == '{') return Json::parse(s).get<group::GroupWord>();
  return group::parse_word(s);
}

group::FamilyParams parse_params(const char* text) {
  std::array<Rational, 5> l;
  std::stringstream in(text);
  std::string tok;
  int n = 0;
  while (std::getline(in, tok, ',')) {
    if (n == 5) throw ParseError("parameters need exactly 5 entries");
    l[n++] = parse_rational(tok);
  }
  if (n != 5) throw ParseError("parameters need exactly 5 entries");
  return group::FamilyParams(l);
}

#define REQUIRE_ARG(cond, what) \
  if (!(cond)) return fail(TETRA_E_INVALID_ARGUMENT, what)

}  // namespace

extern "C" {

const char* tetra_version(void) { return "1.0.0"; }

const char* tetra_status_name(tetra_status status) {
  switch (status) {
    case TETRA_OK: return "ok";
    case TETRA_E_INVALID_ARGUMENT: return "invalid_argument";
    case TETRA_E_DOMAIN: return "domain_error";
    case TETRA_E_PRECISION: return "precision_exhausted";
    case TETRA_E_NOT_FOUND: return "not_found";
    case TETRA_E_INTERNAL: return "internal_error";
    case TETRA_E_CHECK_FAILED: return "check_failed";
  }
  return "unknown";
}

const char* tetra_last_error(void) { return last_error.c_str(); }

void tetra_string_free(char* s) { std::free(s); }

tetra_status tetra_context_create(const char* params, int precision, tetra_context** out) {
  REQUIRE_ARG(out, "null output pointer");
  *out = nullptr;
  return guard([&] {
    if (precision < 0 || (precision > 0 && precision < 8) || precision > 4096)
      return fail(TETRA_E_INVALID_ARGUMENT, "precision must be 0 or in 8..4096");
    auto ctx = std::make_unique<tetra_context>();
    if (params) ctx->params = parse_params(params);
    if (precision > 0) ctx->precision = precision;
    *out = ctx.release();
    return TETRA_OK;
  });
}

void tetra_context_destroy(tetra_context* ctx) { delete ctx; }

int tetra_context_precision(const tetra_context* ctx) { return ctx ? ctx->precision : 0; }

tetra_status tetra_verify(const tetra_context* ctx, const char* suite, const char* options_json, char** report_json) {
  REQUIRE_ARG(ctx && suite && report_json, "null argument");
  *report_json = nullptr;
  return guard([&] {
    verify::Options o;
    o.params = ctx->params;
    o.precision = ctx->precision;
    if (options_json) {
      Json j = parse(options_json);
      if (j.contains("radius")) o.radius = j.at("radius").get<int>();
    }
    std::string s(suite);
    if (s != "all" && std::find(verify::suite_names().begin(), verify::suite_names().end(), s) == verify::suite_names().end())
      return fail(TETRA_E_INVALID_ARGUMENT, "unknown suite: " + s);
    auto report = verify::run_suite(s, o);
    *report_json = dup(Json(report).dump());
    if (!report.passed()) return fail(TETRA_E_CHECK_FAILED, "suite " + s + " reported failures");
    return TETRA_OK;
  });
}

tetra_status tetra_cusps(char** json) {
  REQUIRE_ARG(json, "null argument");
  *json = nullptr;
  return guard([&] {
    *json = dup(Json(coxeter::classify_cusps()).dump());
    return TETRA_OK;
  });
}

tetra_status tetra_nef(const tetra_context* ctx, const char* vector_json, int* is_nef, char** details_json) {
  REQUIRE_ARG(ctx && vector_json && is_nef, "null argument");
  if (details_json) *details_json = nullptr;
  return guard([&] {
    auto v = parse(vector_json).get<lattice::LatticeVector>();
    *is_nef = group::is_nef(v, ctx->params) ? 1 : 0;
    if (details_json) {
      Json d{{"nef", *is_nef == 1}, {"vector", v}};
      if (lattice::inner_product(v, v) >= 0 && lattice::inner_product(v, lattice::delta()) > 0) {
        auto r = group::reduce_to_chamber(v, ctx->params);
        d["chamber_vector"] = r.vector;
        d["word"] = r.word;
        d["steps"] = r.steps;
      }
      *details_json = dup(d.dump());
    }
    return TETRA_OK;
  });
}

tetra_status tetra_tree_ball(const tetra_context* ctx, int radius, char** json) {
  REQUIRE_ARG(ctx && json, "null argument");
  *json = nullptr;
  REQUIRE_ARG(radius >= 0 && radius <= 8, "radius must be in 0..8");
  return guard([&] {
    *json = dup(Json(tree::ball(radius, ctx->precision)).dump());
    return TETRA_OK;
  });
}

tetra_status tetra_word(const tetra_context* ctx, const char* op, const char* a, const char* b, char** json) {
  REQUIRE_ARG(ctx && op && a && json, "null argument");
  *json = nullptr;
  return guard([&] {
    const std::string o(op);
    group::GroupWord u = parse_word_arg(a), w;
    Json out;
    if (o == "mul") {
      if (!b) return fail(TETRA_E_INVALID_ARGUMENT, "mul needs two words");
      w = group::word_multiply(u, parse_word_arg(b));
    } else if (o == "reduce") {
      w = u;
    } else if (o == "inverse") {
      w = group::word_inverse(u);
    } else if (o == "matrix") {
      w = u;
      out["matrix"] = group::word_to_isometry(u, ctx->params);
    } else {
      return fail(TETRA_E_INVALID_ARGUMENT, "unknown word operation: " + o);
    }
    out["word"] = w;
    out["text"] = group::to_string(w);
    *json = dup(out.dump());
    return TETRA_OK;
  });
}

tetra_status tetra_lattice_inner_product(const char* v_json, const char* w_json, char** result) {
  REQUIRE_ARG(v_json && w_json && result, "null argument");
  *result = nullptr;
  return guard([&] {
    auto v = parse(v_json).get<lattice::LatticeVector>();
    auto w = parse(w_json).get<lattice::LatticeVector>();
    *result = dup(to_string(lattice::inner_product(v, w)));
    return TETRA_OK;
  });
}

tetra_status tetra_game_new(int scramble, uint64_t seed, int allow_symmetry, tetra_game** out) {
  REQUIRE_ARG(out, "null output pointer");
  *out = nullptr;
  REQUIRE_ARG(scramble >= 0 && scramble <= 1000, "scramble length must be in 0..1000");
  return guard([&] {
    auto g = std::make_unique<tetra_game>();
    g->state = game::scramble(scramble, seed, allow_symmetry != 0);
    *out = g.release();
    return TETRA_OK;
  });
}

tetra_status tetra_game_from_json(const char* json, tetra_game** out) {
  REQUIRE_ARG(json && out, "null argument");
  *out = nullptr;
  return guard([&] {
    auto g = std::make_unique<tetra_game>();
    g->state = parse(json).get<game::GameState>();
    *out = g.release();
    return TETRA_OK;
  });
}

void tetra_game_destroy(tetra_game* game) { delete game; }

tetra_status tetra_game_to_json(const tetra_game* game, char** json) {
  REQUIRE_ARG(game && json, "null argument");
  *json = nullptr;
  return guard([&] {
    *json = dup(Json(game->state).dump());
    return TETRA_OK;
  });
}

tetra_status tetra_game_move(tetra_game* game, const char* token) {
  REQUIRE_ARG(game && token, "null argument");
  return guard([&] {
    game->state = game::apply_move(game->state, game::parse_move(token));
    return TETRA_OK;
  });
}

tetra_status tetra_game_solve(const tetra_game* game, char** moves_json) {
  REQUIRE_ARG(game && moves_json, "null argument");
  *moves_json = nullptr;
  return guard([&] {
    *moves_json = dup(Json(game::solve(game->state)).dump());
    return TETRA_OK;
  });
}

tetra_status tetra_game_vertex(const tetra_context* ctx, const tetra_game* game, char** json) {
  REQUIRE_ARG(ctx && game && json, "null argument");
  *json = nullptr;
  return guard([&] {
    const auto& w = game->state.word;
    group::GroupWord free{w.free_part, group::kIdentityPerm};
    auto v = tree::act(tree::word_matrix(free, ctx->precision), tree::TreeVertex{}, ctx->precision);
    *json = dup(Json(v).dump());
    return TETRA_OK;
  });
}

}  // extern "C"
