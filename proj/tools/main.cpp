#include "service.hpp"
#include "tetra/tetra.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using Json = nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Failure {
  tetra_status status;
  std::string message;
};

struct Owned {
  char* p = nullptr;
  ~Owned() { tetra_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct Global {
  std::string params;
  int precision = 0;
  bool json = false;
};

void check(tetra_status s) {
  if (s != TETRA_OK) throw Failure{s, tetra_last_error()};
}

struct Context {
  tetra_context* ctx = nullptr;
  Context(const Global& g, int precision) {
    check(tetra_context_create(g.params.empty() ? nullptr : g.params.c_str(), precision, &ctx));
  }
  ~Context() { tetra_context_destroy(ctx); }
};

// Runs f on a context at the requested precision, then once more at twice it.
template <class F>
tetra_status with_retry(const Global& g, F f) {
  Context first(g, g.precision);
  tetra_status s = f(first.ctx);
  if (s != TETRA_E_PRECISION) return s;
  Context second(g, 2 * tetra_context_precision(first.ctx));
  if (!g.json) std::cerr << "precision exhausted, retrying at " << 2 * tetra_context_precision(first.ctx) << " digits\n";
  return f(second.ctx);
}

std::string read_arg(const std::string& s) {
  if (s.empty() || s[0] != '@') return s;
  std::ifstream in(s.substr(1));
  if (!in) throw Failure{TETRA_E_INVALID_ARGUMENT, "cannot read " + s.substr(1)};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_game(const Global& g, const std::string& state_json) {
  if (g.json) {
    std::cout << state_json << "\n";
    return;
  }
  Json st = Json::parse(state_json);
  std::string hist;
  for (const auto& m : st["history"]) hist += (hist.empty() ? "" : " ") + m.get<std::string>();
  std::cout << "moves: " << (hist.empty() ? "(none)" : hist) << "\n";
  std::cout << "word:  " << st["word"].dump() << "\n";
  std::cout << "state: " << state_json << "\n";
}

tetra_game* load_game(const std::string& state) {
  tetra_game* game = nullptr;
  check(tetra_game_from_json(read_arg(state).c_str(), &game));
  return game;
}

int cmd_verify(const Global& g, const std::string& suite, int radius) {
  const std::string opts = radius >= 0 ? Json{{"radius", radius}}.dump() : "";
  Owned report;
  tetra_status s = with_retry(g, [&](tetra_context* ctx) {
    tetra_string_free(report.p);
    report.p = nullptr;
    return tetra_verify(ctx, suite.c_str(), opts.empty() ? nullptr : opts.c_str(), &report.p);
  });
  if (s == TETRA_E_INVALID_ARGUMENT) {
    std::cerr << "usage error: " << tetra_last_error() << "\n";
    return kExitUsage;
  }
  if (s != TETRA_OK && s != TETRA_E_CHECK_FAILED) check(s);
  if (g.json) {
    std::cout << report.str() << "\n";
  } else {
    Json r = Json::parse(report.str());
    for (const auto& c : r["checks"])
      std::cout << (c["status"] == "pass" ? "PASS " : "FAIL ") << c["name"].get<std::string>() << ": "
                << c["details"].get<std::string>() << "\n";
    std::cout << r["suite"].get<std::string>() << ": " << (r["passed"].get<bool>() ? "pass" : "FAIL") << " ("
              << r["runtime_ms"] << " ms)\n";
  }
  return s == TETRA_OK ? 0 : kExitFail;
}

int cmd_cusps(const Global& g) {
  Owned out;
  check(tetra_cusps(&out.p));
  if (g.json) {
    std::cout << out.str() << "\n";
    return 0;
  }
  Json cusps = Json::parse(out.str());
  for (const auto& c : cusps) {
    std::string labels;
    for (const auto& l : c["node_labels"]) labels += (labels.empty() ? "" : " ") + l.get<std::string>();
    std::cout << c["orbit_type"].get<std::string>() << "  [" << labels << "]  " << c["null_vector"].dump() << "\n";
  }
  std::cout << cusps.size() << " cusps\n";
  return 0;
}

int cmd_nef(const Global& g, const std::string& vec) {
  Context c(g, g.precision);
  int nef = 0;
  Owned details;
  check(tetra_nef(c.ctx, read_arg(vec).c_str(), &nef, &details.p));
  Json d = Json::parse(details.str());
  d["nef"] = nef != 0;
  if (g.json)
    std::cout << d.dump() << "\n";
  else
    std::cout << (nef ? "nef" : "not nef") << "\n" << d.dump(2) << "\n";
  return 0;
}

int cmd_tree_ball(const Global& g, int r) {
  Owned out;
  check(with_retry(g, [&](tetra_context* ctx) {
    tetra_string_free(out.p);
    out.p = nullptr;
    return tetra_tree_ball(ctx, r, &out.p);
  }));
  if (g.json) {
    std::cout << out.str() << "\n";
    return 0;
  }
  Json b = Json::parse(out.str());
  std::cout << "radius " << r << ": " << b["vertices"].size() << " vertices\n";
  std::cout << "cumulative sizes: " << b["sizes"].dump() << "\n";
  for (const auto& v : b["vertices"]) std::cout << "  " << v.dump() << "\n";
  return 0;
}

int cmd_word(const Global& g, const std::string& op, const std::vector<std::string>& args) {
  const size_t need = op == "mul" ? 2 : 1;
  if (args.size() != need) {
    std::cerr << "usage error: word " << op << " takes " << need << " word argument(s)\n";
    return kExitUsage;
  }
  Context c(g, g.precision);
  Owned out;
  check(tetra_word(c.ctx, op.c_str(), read_arg(args[0]).c_str(), need == 2 ? read_arg(args[1]).c_str() : nullptr,
                   &out.p));
  if (g.json) {
    std::cout << out.str() << "\n";
    return 0;
  }
  Json r = Json::parse(out.str());
  std::cout << r["text"].get<std::string>() << "\n";
  if (r.contains("matrix"))
    for (const auto& row : r["matrix"]) {
      std::string line;
      for (const auto& e : row) line += (line.empty() ? "" : " ") + e.get<std::string>();
      std::cout << "  " << line << "\n";
    }
  return 0;
}

int cmd_game_new(const Global& g, int scramble, uint64_t seed, bool sym) {
  tetra_game* game = nullptr;
  check(tetra_game_new(scramble, seed, sym ? 1 : 0, &game));
  Owned st;
  tetra_status s = tetra_game_to_json(game, &st.p);
  tetra_game_destroy(game);
  check(s);
  print_game(g, st.str());
  return 0;
}

int cmd_game_move(const Global& g, const std::string& state, const std::vector<std::string>& tokens) {
  tetra_game* game = load_game(state);
  tetra_status s = TETRA_OK;
  for (const auto& t : tokens)
    if ((s = tetra_game_move(game, t.c_str())) != TETRA_OK) break;
  Owned st;
  if (s == TETRA_OK) s = tetra_game_to_json(game, &st.p);
  std::string err = s == TETRA_OK ? "" : tetra_last_error();
  tetra_game_destroy(game);
  if (s != TETRA_OK) throw Failure{s, err};
  print_game(g, st.str());
  return 0;
}

int cmd_game_solve(const Global& g, const std::string& state) {
  tetra_game* game = load_game(state);
  Owned moves;
  tetra_status s = tetra_game_solve(game, &moves.p);
  std::string err = s == TETRA_OK ? "" : tetra_last_error();
  tetra_game_destroy(game);
  if (s != TETRA_OK) throw Failure{s, err};
  if (g.json) {
    std::cout << moves.str() << "\n";
  } else {
    std::string line;
    for (const auto& m : Json::parse(moves.str())) line += (line.empty() ? "" : " ") + m.get<std::string>();
    std::cout << (line.empty() ? "(already solved)" : line) << "\n";
  }
  return 0;
}

int cmd_serve(const Global& g, const std::string& host, int port, const std::string& static_dir,
              const std::string& persist) {
  sigset_t set;
  sigemptyset(&set);
  sigaddset(&set, SIGINT);
  sigaddset(&set, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &set, nullptr);

  tetra_service::Service service({g.params, g.precision, static_dir, persist});
  int bound = service.bind(host, port);
  if (bound < 0) {
    std::cerr << "cannot bind " << host << ":" << port << "\n";
    return kExitFail;
  }
  std::cerr << "listening on http://" << host << ":" << bound << "\n";
  std::thread waiter([&] {
    int sig = 0;
    sigwait(&set, &sig);
    std::cerr << "shutting down\n";
    service.stop();
  });
  service.run();
  // run() may also end on its own; wake the waiter so it can be joined.
  pthread_kill(waiter.native_handle(), SIGTERM);
  waiter.join();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact algebra toolkit for the free-product reflection group"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--params", g.params, "family parameters l0,l1,l2,l3,l4 (rationals)");
  app.add_option("--precision", g.precision, "3-adic working precision in digits")->check(CLI::NonNegativeNumber);
  app.add_flag("--json", g.json, "machine-readable JSON output");
  app.set_version_flag("--version", tetra_version());

  std::function<int()> action;

  auto* verify = app.add_subcommand("verify", "run an invariant battery; exit 0 iff all checks pass");
  std::string suite = "all";
  int radius = -1;
  verify->add_option("suite", suite, "all, lattice, coxeter, group, quaternion, tree, game")
      ->check(CLI::IsMember({"all", "lattice", "coxeter", "group", "quaternion", "tree", "game"}));
  verify->add_option("--radius", radius, "tree ball radius")->check(CLI::Range(0, 8));
  verify->callback([&] { action = [&] { return cmd_verify(g, suite, radius); }; });

  auto* cusps = app.add_subcommand("cusps", "list the parabolic classes");
  cusps->callback([&] { action = [&] { return cmd_cusps(g); }; });

  auto* nef = app.add_subcommand("nef", "test a lattice vector for nefness");
  std::string vec;
  nef->add_option("vector", vec, "JSON array of 10 rationals in the U-basis, or @file")->required();
  nef->callback([&] { action = [&] { return cmd_nef(g, vec); }; });

  auto* tree = app.add_subcommand("tree", "Bruhat-Tits tree");
  tree->require_subcommand(1);
  auto* ball = tree->add_subcommand("ball", "vertices within distance r of the base vertex");
  int r = 2;
  ball->add_option("-r,--radius", r, "radius")->check(CLI::Range(0, 8));
  ball->callback([&] { action = [&] { return cmd_tree_ball(g, r); }; });

  auto* word = app.add_subcommand("word", "group word arithmetic");
  std::string op;
  std::vector<std::string> words;
  word->add_option("op", op, "mul, reduce, inverse, matrix")
      ->required()
      ->check(CLI::IsMember({"mul", "reduce", "inverse", "matrix"}));
  word->add_option("words", words, "words as text (\"x0 x1 s=(1023)\") or JSON, or @file");
  word->callback([&] { action = [&] { return cmd_word(g, op, words); }; });

  auto* game = app.add_subcommand("game", "reflection game");
  game->require_subcommand(1);
  auto* gnew = game->add_subcommand("new", "start a game");
  int scramble = 0;
  uint64_t seed = 0;
  bool sym = false;
  gnew->add_option("--scramble", scramble, "random facet moves")->check(CLI::Range(0, 1000));
  gnew->add_option("--seed", seed, "scramble seed");
  gnew->add_flag("--symmetry", sym, "allow symmetry moves");
  gnew->callback([&] { action = [&] { return cmd_game_new(g, scramble, seed, sym); }; });

  auto* gmove = game->add_subcommand("move", "apply moves to a game state");
  std::string state;
  std::vector<std::string> tokens;
  gmove->add_option("--state", state, "state JSON or @file")->required();
  gmove->add_option("tokens", tokens, "F0..F3 or S=(abcd)")->required();
  gmove->callback([&] { action = [&] { return cmd_game_move(g, state, tokens); }; });

  auto* gsolve = game->add_subcommand("solve", "moves returning a state to the reference pose");
  gsolve->add_option("--state", state, "state JSON or @file")->required();
  gsolve->callback([&] { action = [&] { return cmd_game_solve(g, state); }; });

  auto* serve = app.add_subcommand("serve", "run the JSON HTTP service");
  std::string host = "127.0.0.1", static_dir, persist;
  int port = 8080;
  serve->add_option("--host", host, "bind address");
  serve->add_option("--port", port, "port, 0 for any")->check(CLI::Range(0, 65535));
  serve->add_option("--static", static_dir, "directory served at /")->check(CLI::ExistingDirectory);
  serve->add_option("--persist", persist, "JSON snapshot file for games");
  serve->callback([&] { action = [&] { return cmd_serve(g, host, port, static_dir, persist); }; });

  for (auto* sub : {verify, cusps, nef, tree, word, game, serve}) sub->fallthrough();
  for (auto* sub : {ball, gnew, gmove, gsolve}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const Failure& f) {
    if (g.json)
      std::cout << Json{{"error", {{"code", tetra_status_name(f.status)}, {"message", f.message}}}}.dump() << "\n";
    else
      std::cerr << "error (" << tetra_status_name(f.status) << "): " << f.message << "\n";
    return f.status == TETRA_E_INVALID_ARGUMENT ? kExitUsage : kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
