#pragma once

// JSON HTTP service over the C API.

#include "tetra/tetra.h"

#include <httplib.h>
#include <json.hpp>

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace tetra_service {

struct Options {
  std::string params;       // empty for the default family
  int precision = 0;        // 0 for the library default
  std::string static_dir;   // served at / when set
  std::string persist_path; // JSON snapshot of all games when set
};

class Service {
 public:
  explicit Service(Options options);
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  // Port actually bound, or -1.
  int bind(const std::string& host, int port);
  bool run();  // blocks until stop()
  void stop();
  void wait_until_ready() const { server_.wait_until_ready(); }

 private:
  struct Game {
    std::mutex mu;
    tetra_game* handle = nullptr;
    ~Game() { tetra_game_destroy(handle); }
  };

  struct Reply {
    int status = 200;
    std::string body;
  };

  void routes();
  Reply with_idempotency(const httplib::Request& req, const std::string& scope, const std::function<Reply()>& f);
  std::shared_ptr<Game> find(const std::string& id);
  std::string game_view(const std::string& id, Game& g);
  void load();
  void persist(const std::string& id, Game& g);

  Options options_;
  tetra_context* ctx_ = nullptr;
  tetra_context* wide_ctx_ = nullptr;  // twice the precision, for one retry
  httplib::Server server_;

  std::mutex store_mu_;
  std::map<std::string, std::shared_ptr<Game>> games_;
  long next_id_ = 1;
  std::map<std::string, nlohmann::json> snapshots_;

  std::mutex replay_mu_;
  std::map<std::string, Reply> replies_;
};

}  // namespace tetra_service
