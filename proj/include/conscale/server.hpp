#pragma once

#include <chrono>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include <json.hpp>

#include "conscale/exploration.hpp"

namespace httplib {
class Server;
}

namespace conscale::server {

using nlohmann::json;

struct Reply {
  int status = 200;
  json body;
};

struct SessionLimits {
  std::optional<std::size_t> max_queries;
  std::optional<std::size_t> max_scale_attributes;
};

/// Immutable view of one session at one revision.
struct Snapshot {
  std::string id;
  std::uint64_t revision = 0;
  std::string created;
  std::string updated;
  SessionLimits limits;
  std::size_t total_extents = 0;
  ExplorationSession session;
};

/// In-memory session store. Writers on one session are serialized and
/// checked against the revision they read; readers load the current
/// snapshot pointer without taking the writer lock.
class SessionService {
public:
  explicit SessionService(std::optional<std::filesystem::path> snapshot_dir = std::nullopt);

  /// {"context": cxt text | JSON context, "options": {"order", "init_base", "limits"}}
  Reply create(const std::string& body);
  Reply get(const std::string& id) const;
  /// {"revision": n, "accept": true} or {"revision": n, "counterexample": [...]}
  Reply answer(const std::string& id, const std::string& body);
  Reply lattice(const std::string& id) const;
  /// Export body and content type; format is cxt, json or dot.
  Reply export_session(const std::string& id, const std::string& format, std::string& content_type) const;

  std::size_t size() const;
  /// Reloads snapshot files written by an earlier run.
  std::size_t load_snapshots();

private:
  struct Slot {
    std::mutex writer;
    std::shared_ptr<const Snapshot> current;
  };

  std::shared_ptr<Slot> find(const std::string& id) const;
  std::shared_ptr<const Snapshot> load(const std::string& id) const;
  std::string fresh_id();
  void persist(const Snapshot& snapshot) const;

  std::optional<std::filesystem::path> snapshot_dir_;
  mutable std::mutex index_mutex_;
  std::map<std::string, std::shared_ptr<Slot>> slots_;
  std::uint64_t id_state_;
};

json session_resource(const Snapshot& snapshot);
json lattice_resource(const Snapshot& snapshot);

struct ServerConfig {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string cors_origin = "*";
  std::optional<std::filesystem::path> snapshot_dir;
};

/// Port from the CONSCALE_PORT environment variable, else `fallback`.
int port_from_env(int fallback);

/// Routes /api/v1 onto a SessionService.
class HttpServer {
public:
  explicit HttpServer(ServerConfig config);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds to config.port (0 picks a free port) and returns the bound port, or -1.
  int bind();
  /// Blocks serving requests until stop().
  bool serve();
  void stop();
  SessionService& service() { return service_; }

private:
  ServerConfig config_;
  SessionService service_;
  std::unique_ptr<httplib::Server> http_;
};

}  // namespace conscale::server
