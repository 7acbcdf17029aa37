#include "service.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace tetra_service {

using Json = nlohmann::json;

namespace {

struct CString {
  char* p = nullptr;
  ~CString() { tetra_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

int http_status(tetra_status s) {
  switch (s) {
    case TETRA_OK: return 200;
    case TETRA_E_INVALID_ARGUMENT: return 400;
    case TETRA_E_NOT_FOUND: return 404;
    case TETRA_E_DOMAIN:
    case TETRA_E_PRECISION:
    case TETRA_E_CHECK_FAILED: return 422;
    case TETRA_E_INTERNAL: break;
  }
  return 500;
}

std::string error_body(const std::string& code, const std::string& message) {
  return Json{{"error", {{"code", code}, {"message", message}}}}.dump();
}

struct ApiError : std::runtime_error {
  int status;
  std::string code;
  ApiError(int st, std::string c, const std::string& m) : std::runtime_error(m), status(st), code(std::move(c)) {}
};

void check(tetra_status s) {
  if (s != TETRA_OK) throw ApiError(http_status(s), tetra_status_name(s), tetra_last_error());
}

Json body_json(const httplib::Request& req) {
  if (req.body.empty()) return Json::object();
  try {
    Json j = Json::parse(req.body);
    if (!j.is_object()) throw ApiError(400, "invalid_argument", "request body must be a JSON object");
    return j;
  } catch (const Json::exception& e) {
    throw ApiError(400, "invalid_argument", e.what());
  }
}

}  // namespace

Service::Service(Options options) : options_(std::move(options)) {
  const char* params = options_.params.empty() ? nullptr : options_.params.c_str();
  check(tetra_context_create(params, options_.precision, &ctx_));
  check(tetra_context_create(params, 2 * tetra_context_precision(ctx_), &wide_ctx_));
  if (!options_.static_dir.empty() && !server_.set_mount_point("/", options_.static_dir))
    throw std::runtime_error("static directory not found: " + options_.static_dir);
  load();
  routes();
}

Service::~Service() {
  stop();
  tetra_context_destroy(ctx_);
  tetra_context_destroy(wide_ctx_);
}

int Service::bind(const std::string& host, int port) {
  if (port == 0) return server_.bind_to_any_port(host);
  return server_.bind_to_port(host, port) ? port : -1;
}

bool Service::run() { return server_.listen_after_bind(); }

void Service::stop() {
  if (server_.is_running()) server_.stop();
}

std::shared_ptr<Service::Game> Service::find(const std::string& id) {
  std::lock_guard lock(store_mu_);
  auto it = games_.find(id);
  if (it == games_.end()) throw ApiError(404, "not_found", "unknown game id: " + id);
  return it->second;
}

std::string Service::game_view(const std::string& id, Game& g) {
  CString state, vertex;
  check(tetra_game_to_json(g.handle, &state.p));
  tetra_status s = tetra_game_vertex(ctx_, g.handle, &vertex.p);
  if (s == TETRA_E_PRECISION) s = tetra_game_vertex(wide_ctx_, g.handle, &vertex.p);
  check(s);
  return Json{{"id", id}, {"state", Json::parse(state.str())}, {"vertex", Json::parse(vertex.str())}}.dump();
}

Service::Reply Service::with_idempotency(const httplib::Request& req, const std::string& scope,
                                         const std::function<Reply()>& f) {
  std::string key = req.get_header_value("Idempotency-Key");
  if (key.empty()) key = req.get_header_value("X-Request-Id");
  if (key.empty()) {
    try {
      Json j = Json::parse(req.body.empty() ? "{}" : req.body);
      if (j.is_object() && j.contains("request_id") && j["request_id"].is_string()) key = j["request_id"];
    } catch (const Json::exception&) {
    }
  }
  if (key.empty()) return f();
  key = scope + "\n" + key;
  // Held across f so a retried request waits for the first one.
  std::lock_guard lock(replay_mu_);
  auto it = replies_.find(key);
  if (it != replies_.end()) return it->second;
  Reply r = f();
  if (r.status < 500) replies_[key] = r;
  return r;
}

void Service::routes() {
  auto handle = [](const std::function<Reply(const httplib::Request&)>& f) {
    return [f](const httplib::Request& req, httplib::Response& res) {
      Reply r;
      try {
        r = f(req);
      } catch (const ApiError& e) {
        r = {e.status, error_body(e.code, e.what())};
      } catch (const Json::exception& e) {
        r = {400, error_body("invalid_argument", e.what())};
      } catch (const std::exception& e) {
        r = {500, error_body("internal_error", e.what())};
      }
      res.status = r.status;
      res.set_content(r.body, "application/json");
    };
  };

  server_.Get("/api/health", handle([](const httplib::Request&) { return Reply{200, R"({"status":"ok"})"}; }));

  server_.Post("/api/game/new", handle([this](const httplib::Request& req) {
    return with_idempotency(req, "new", [&] {
      Json b = body_json(req);
      int scramble = b.value("scramble", 0);
      auto seed = b.value("seed", std::uint64_t{0});
      bool sym = b.value("allow_symmetry", false);
      auto g = std::make_shared<Game>();
      check(tetra_game_new(scramble, seed, sym ? 1 : 0, &g->handle));
      std::string id;
      {
        std::lock_guard lock(store_mu_);
        id = "g" + std::to_string(next_id_++);
        games_[id] = g;
      }
      std::lock_guard lock(g->mu);
      Reply r{200, game_view(id, *g)};
      persist(id, *g);
      return r;
    });
  }));

  server_.Get(R"(/api/game/([^/]+))", handle([this](const httplib::Request& req) {
    const std::string id = req.matches[1];
    auto g = find(id);
    std::lock_guard lock(g->mu);
    return Reply{200, game_view(id, *g)};
  }));

  server_.Post(R"(/api/game/([^/]+)/move)", handle([this](const httplib::Request& req) {
    const std::string id = req.matches[1];
    return with_idempotency(req, "move " + id, [&] {
      Json b = body_json(req);
      std::vector<std::string> moves;
      if (b.contains("move") && b["move"].is_string()) moves.push_back(b["move"]);
      if (b.contains("moves") && b["moves"].is_array())
        for (const auto& m : b["moves"]) {
          if (!m.is_string()) throw ApiError(400, "invalid_argument", "moves must be token strings");
          moves.push_back(m);
        }
      if (moves.empty()) throw ApiError(400, "invalid_argument", "body needs \"move\" or \"moves\"");
      auto g = find(id);
      std::lock_guard lock(g->mu);
      CString before;
      check(tetra_game_to_json(g->handle, &before.p));
      for (const auto& m : moves) {
        tetra_status s = tetra_game_move(g->handle, m.c_str());
        if (s != TETRA_OK) {
          std::string msg = tetra_last_error();
          tetra_game* restored = nullptr;
          check(tetra_game_from_json(before.p, &restored));
          tetra_game_destroy(g->handle);
          g->handle = restored;
          throw ApiError(http_status(s), tetra_status_name(s), msg);
        }
      }
      Reply r{200, game_view(id, *g)};
      persist(id, *g);
      return r;
    });
  }));

  server_.Post(R"(/api/game/([^/]+)/solve)", handle([this](const httplib::Request& req) {
    const std::string id = req.matches[1];
    return with_idempotency(req, "solve " + id, [&] {
      Json b = body_json(req);
      auto g = find(id);
      std::lock_guard lock(g->mu);
      CString moves;
      check(tetra_game_solve(g->handle, &moves.p));
      Json out{{"id", id}, {"moves", Json::parse(moves.str())}};
      if (b.value("apply", false)) {
        for (const auto& m : out["moves"]) check(tetra_game_move(g->handle, m.get<std::string>().c_str()));
        out["state"] = Json::parse(game_view(id, *g))["state"];
        persist(id, *g);
      }
      return Reply{200, out.dump()};
    });
  }));

  server_.Get("/api/tree/ball", handle([this](const httplib::Request& req) {
    int r = 2;
    if (req.has_param("r")) {
      try {
        r = std::stoi(req.get_param_value("r"));
      } catch (const std::exception&) {
        throw ApiError(400, "invalid_argument", "r must be an integer");
      }
    }
    CString out;
    tetra_status s = tetra_tree_ball(ctx_, r, &out.p);
    if (s == TETRA_E_PRECISION) s = tetra_tree_ball(wide_ctx_, r, &out.p);
    check(s);
    return Reply{200, out.str()};
  }));

  server_.Post("/api/lattice/inner_product", handle([](const httplib::Request& req) {
    Json b = body_json(req);
    if (!b.contains("v") || !b.contains("w")) throw ApiError(400, "invalid_argument", "body needs \"v\" and \"w\"");
    CString out;
    check(tetra_lattice_inner_product(b["v"].dump().c_str(), b["w"].dump().c_str(), &out.p));
    return Reply{200, Json{{"value", out.str()}}.dump()};
  }));
}

void Service::load() {
  if (options_.persist_path.empty()) return;
  std::ifstream in(options_.persist_path);
  if (!in) return;
  Json snap = Json::parse(in);
  next_id_ = snap.value("next_id", 1L);
  for (const auto& [id, state] : snap.at("games").items()) {
    auto g = std::make_shared<Game>();
    check(tetra_game_from_json(state.dump().c_str(), &g->handle));
    games_[id] = g;
    snapshots_[id] = state;
  }
}

void Service::persist(const std::string& id, Game& g) {
  if (options_.persist_path.empty()) return;
  CString state;
  check(tetra_game_to_json(g.handle, &state.p));
  std::lock_guard lock(store_mu_);
  snapshots_[id] = Json::parse(state.str());
  const std::string tmp = options_.persist_path + ".tmp";
  {
    std::ofstream out(tmp);
    out << Json{{"next_id", next_id_}, {"games", snapshots_}}.dump();
  }
  std::rename(tmp.c_str(), options_.persist_path.c_str());
}

}  // namespace tetra_service
