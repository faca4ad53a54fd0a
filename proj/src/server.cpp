#include "conscale/server.hpp"

#include <atomic>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <random>

#include <httplib.h>

#include "conscale/closure.hpp"
#include "conscale/diagram.hpp"
#include "conscale/errors.hpp"
#include "conscale/io.hpp"

namespace conscale::server {

namespace {

std::string now_utc() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Reply error(int status, const std::string& message, json extra = json::object()) {
  extra["error"] = message;
  return {status, std::move(extra)};
}

std::optional<std::size_t> read_limit(const json& limits, const char* key) {
  if (!limits.contains(key) || limits[key].is_null()) return std::nullopt;
  if (!limits[key].is_number_unsigned()) throw DomainError(std::string("limits.") + key + " must be a non-negative integer");
  return limits[key].get<std::size_t>();
}

bool limit_reached(const Snapshot& s) {
  const auto& l = s.limits;
  return (l.max_queries && s.session.history().size() >= *l.max_queries) ||
         (l.max_scale_attributes && s.session.scale_extents().size() >= *l.max_scale_attributes);
}

const char* phase_name(const Snapshot& s) {
  if (s.session.done()) return "done";
  return limit_reached(s) ? "truncated" : "querying";
}

}  // namespace

json session_resource(const Snapshot& s) {
  const auto& session = s.session;
  const auto& base = session.base();
  const auto scale = session.scale();
  const auto scale_concepts = extents(scale).size();

  json scale_attributes = json::array();
  for (const auto& e : session.scale_extents())
    scale_attributes.push_back({{"name", render_set(base.object_names(e))}, {"extent", base.object_names(e)}});
  json history = json::array();
  for (const auto& r : session.history()) history.push_back(io::record_to_json(base, r));
  json limits = json::object();
  if (s.limits.max_queries) limits["max_queries"] = *s.limits.max_queries;
  if (s.limits.max_scale_attributes) limits["max_scale_attributes"] = *s.limits.max_scale_attributes;

  return {{"id", s.id},
          {"revision", s.revision},
          {"created", s.created},
          {"updated", s.updated},
          {"phase", phase_name(s)},
          {"options", {{"order", base.objects()}, {"init_base", session.options().init_base}, {"limits", limits}}},
          {"context", {{"name", base.name()}, {"objects", base.objects()}, {"attributes", base.attributes()}}},
          {"query", session.current_query() ? io::query_to_json(base, *session.current_query()) : json(nullptr)},
          {"scale", {{"attributes", scale_attributes}}},
          {"theory", io::theory_to_json(base, session.theory())},
          {"history", history},
          {"summary",
           {{"counterexamples", session.counterexample_count()},
            {"accepts", session.accept_count()},
            {"concepts", scale_concepts},
            {"reflected_extents", scale_concepts},
            {"total_extents", s.total_extents}}}};
}

json lattice_resource(const Snapshot& s) {
  const auto diagram = scale_lattice_diagram(s.session.scale_measure(), true);
  auto doc = to_json(diagram, s.session.base());
  doc["id"] = s.id;
  doc["revision"] = s.revision;
  doc["reflected_extents"] = diagram.nodes.size();
  doc["total_extents"] = s.total_extents;
  return doc;
}

SessionService::SessionService(std::optional<std::filesystem::path> snapshot_dir)
    : snapshot_dir_(std::move(snapshot_dir)), id_state_(std::random_device{}()) {
  id_state_ = (id_state_ << 32) ^ static_cast<std::uint64_t>(std::chrono::steady_clock::now().time_since_epoch().count());
  if (snapshot_dir_) std::filesystem::create_directories(*snapshot_dir_);
}

std::string SessionService::fresh_id() {
  std::mt19937_64 gen(id_state_++);
  static constexpr char hex[] = "0123456789abcdef";
  for (;;) {
    std::string id;
    auto v = gen();
    for (int i = 0; i < 16; ++i, v >>= 4) id += hex[v & 15];
    if (!slots_.contains(id)) return id;
  }
}

std::shared_ptr<SessionService::Slot> SessionService::find(const std::string& id) const {
  std::lock_guard lock(index_mutex_);
  const auto it = slots_.find(id);
  return it == slots_.end() ? nullptr : it->second;
}

std::shared_ptr<const Snapshot> SessionService::load(const std::string& id) const {
  const auto slot = find(id);
  return slot ? std::atomic_load(&slot->current) : nullptr;
}

std::size_t SessionService::size() const {
  std::lock_guard lock(index_mutex_);
  return slots_.size();
}

void SessionService::persist(const Snapshot& s) const {
  if (!snapshot_dir_) return;
  auto doc = io::session_to_json(s.session);
  doc["id"] = s.id;
  doc["revision"] = s.revision;
  doc["created"] = s.created;
  doc["updated"] = s.updated;
  doc["limits"] = json::object();
  if (s.limits.max_queries) doc["limits"]["max_queries"] = *s.limits.max_queries;
  if (s.limits.max_scale_attributes) doc["limits"]["max_scale_attributes"] = *s.limits.max_scale_attributes;
  const auto path = *snapshot_dir_ / (s.id + ".json");
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << doc.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

std::size_t SessionService::load_snapshots() {
  if (!snapshot_dir_) return 0;
  std::size_t loaded = 0;
  for (const auto& entry : std::filesystem::directory_iterator(*snapshot_dir_)) {
    if (entry.path().extension() != ".json") continue;
    try {
      const auto doc = json::parse(io::read_file(entry.path()));
      auto session = io::session_from_json(doc);
      const auto total = extents(session.base()).size();
      SessionLimits limits;
      if (doc.contains("limits")) {
        limits.max_queries = read_limit(doc["limits"], "max_queries");
        limits.max_scale_attributes = read_limit(doc["limits"], "max_scale_attributes");
      }
      auto snap = std::make_shared<const Snapshot>(Snapshot{doc.at("id").get<std::string>(), doc.value("revision", 0u),
                                                            doc.value("created", now_utc()), doc.value("updated", now_utc()),
                                                            limits, total, std::move(session)});
      auto slot = std::make_shared<Slot>();
      slot->current = snap;
      std::lock_guard lock(index_mutex_);
      slots_[snap->id] = std::move(slot);
      ++loaded;
    } catch (const std::exception&) {
      // unreadable snapshots are skipped
    }
  }
  return loaded;
}

Reply SessionService::create(const std::string& body) {
  json doc;
  try {
    doc = json::parse(body);
  } catch (const json::parse_error& e) {
    return error(400, std::string("request body is not JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("context")) return error(400, "request needs a \"context\" field");

  FormalContext base;
  try {
    const auto& c = doc["context"];
    if (c.is_string())
      base = io::parse_context(c.get<std::string>());
    else
      base = io::context_from_json(c);
  } catch (const io::ParseError& e) {
    return error(400, e.what());
  } catch (const std::exception& e) {
    return error(400, e.what());
  }

  SessionOptions options;
  SessionLimits limits;
  try {
    const auto opts = doc.value("options", json::object());
    if (!opts.is_object()) throw DomainError("options must be an object");
    if (opts.contains("order")) {
      if (!opts["order"].is_array()) throw DomainError("options.order must be a list of object names");
      base = base.with_object_order(opts["order"].get<std::vector<std::string>>());
    }
    if (opts.contains("init_base")) {
      if (!opts["init_base"].is_boolean()) throw DomainError("options.init_base must be a boolean");
      options.init_base = opts["init_base"].get<bool>();
    }
    if (opts.contains("limits")) {
      const auto& l = opts["limits"];
      if (!l.is_object()) throw DomainError("options.limits must be an object");
      limits.max_queries = read_limit(l, "max_queries");
      limits.max_scale_attributes = read_limit(l, "max_scale_attributes");
    }
  } catch (const std::exception& e) {
    return error(422, e.what());
  }

  const auto total = extents(base).size();
  const auto stamp = now_utc();
  auto slot = std::make_shared<Slot>();
  std::shared_ptr<const Snapshot> snap;
  {
    std::lock_guard lock(index_mutex_);
    auto id = fresh_id();
    snap = std::make_shared<const Snapshot>(
        Snapshot{id, 1, stamp, stamp, limits, total, ExplorationSession(std::move(base), options)});
    slot->current = snap;
    slots_[id] = slot;
  }
  persist(*snap);
  return {201, session_resource(*snap)};
}

Reply SessionService::get(const std::string& id) const {
  const auto snap = load(id);
  if (!snap) return error(404, "unknown session '" + id + "'");
  return {200, session_resource(*snap)};
}

Reply SessionService::answer(const std::string& id, const std::string& body) {
  const auto slot = find(id);
  if (!slot) return error(404, "unknown session '" + id + "'");

  json doc;
  try {
    doc = json::parse(body);
  } catch (const json::parse_error& e) {
    return error(400, std::string("request body is not JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("revision") || !doc["revision"].is_number_unsigned())
    return error(400, "request needs a numeric \"revision\" field");
  const bool has_accept = doc.contains("accept");
  const bool has_counter = doc.contains("counterexample");
  if (has_accept == has_counter) return error(400, "give exactly one of \"accept\" or \"counterexample\"");
  if (has_accept && doc["accept"] != true) return error(400, "\"accept\" must be true");
  if (has_counter && !doc["counterexample"].is_array()) return error(400, "\"counterexample\" must be a list of attributes");

  std::lock_guard lock(slot->writer);
  const auto current = std::atomic_load(&slot->current);
  const auto revision = doc["revision"].get<std::uint64_t>();
  if (revision != current->revision)
    return error(409, "stale revision " + std::to_string(revision), {{"revision", current->revision}});
  if (current->session.done()) return error(409, "exploration is already done", {{"revision", current->revision}});
  if (limit_reached(*current)) return error(409, "session limits reached", {{"revision", current->revision}});

  ExplorationSession next = current->session;
  try {
    if (has_accept) {
      next.accept();
    } else {
      AttributeSet attrs = next.base().no_attributes();
      for (const auto& n : doc["counterexample"]) {
        if (!n.is_string()) throw RejectedCounterexample("counterexample entries must be attribute names", {n.dump()});
        const auto name = n.get<std::string>();
        try {
          attrs.set(next.base().attribute_index(name));
        } catch (const DomainError&) {
          throw RejectedCounterexample("unknown attribute '" + name + "'", {name});
        }
      }
      next.counterexample(attrs);
    }
  } catch (const RejectedCounterexample& e) {
    return error(422, e.what(), {{"offending_attributes", e.offending_attributes()}});
  }

  auto snap = std::make_shared<const Snapshot>(Snapshot{current->id, current->revision + 1, current->created, now_utc(),
                                                        current->limits, current->total_extents, std::move(next)});
  std::atomic_store(&slot->current, std::shared_ptr<const Snapshot>(snap));
  persist(*snap);
  return {200, session_resource(*snap)};
}

Reply SessionService::lattice(const std::string& id) const {
  const auto snap = load(id);
  if (!snap) return error(404, "unknown session '" + id + "'");
  return {200, lattice_resource(*snap)};
}

Reply SessionService::export_session(const std::string& id, const std::string& format, std::string& content_type) const {
  const auto snap = load(id);
  if (!snap) return error(404, "unknown session '" + id + "'");
  content_type = "text/plain; charset=utf-8";
  if (format == "cxt") return {200, io::write_burmeister(snap->session.scale())};
  if (format == "dot") return {200, to_dot(scale_lattice_diagram(snap->session.scale_measure(), true), "scale")};
  if (format == "json" || format.empty()) {
    content_type = "application/json";
    return {200, io::session_to_json(snap->session)};
  }
  return error(400, "unknown export format '" + format + "'; use cxt, json or dot");
}

int port_from_env(int fallback) {
  if (const char* v = std::getenv("CONSCALE_PORT")) {
    char* end = nullptr;
    const long p = std::strtol(v, &end, 10);
    if (end && *end == '\0' && p >= 0 && p <= 65535) return static_cast<int>(p);
  }
  return fallback;
}

HttpServer::HttpServer(ServerConfig config)
    : config_(std::move(config)), service_(config_.snapshot_dir), http_(std::make_unique<httplib::Server>()) {
  service_.load_snapshots();
  auto& srv = *http_;
  srv.set_default_headers({{"Access-Control-Allow-Origin", config_.cors_origin},
                           {"Access-Control-Allow-Headers", "Content-Type"},
                           {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});

  const auto send = [](httplib::Response& res, const Reply& r) {
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };

  srv.Options(R"(/api/v1/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  srv.Post("/api/v1/sessions", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(res, service_.create(req.body));
  });
  srv.Get(R"(/api/v1/sessions/([0-9a-f]+))", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(res, service_.get(req.matches[1]));
  });
  srv.Post(R"(/api/v1/sessions/([0-9a-f]+)/answer)", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(res, service_.answer(req.matches[1], req.body));
  });
  srv.Get(R"(/api/v1/sessions/([0-9a-f]+)/lattice)", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(res, service_.lattice(req.matches[1]));
  });
  srv.Get(R"(/api/v1/sessions/([0-9a-f]+)/export)", [this, send](const httplib::Request& req, httplib::Response& res) {
    std::string type;
    const auto r = service_.export_session(req.matches[1], req.get_param_value("format"), type);
    if (r.status != 200 || r.body.is_object()) {
      res.status = r.status;
      res.set_content(r.body.dump(2), r.status == 200 ? type : "application/json");
    } else {
      res.status = 200;
      res.set_content(r.body.get<std::string>(), type);
    }
  });
  srv.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (res.body.empty())
      res.set_content(json{{"error", "HTTP " + std::to_string(res.status)}}.dump(), "application/json");
  });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind() {
  if (config_.port == 0) return http_->bind_to_any_port(config_.host);
  return http_->bind_to_port(config_.host, config_.port) ? config_.port : -1;
}

bool HttpServer::serve() { return http_->listen_after_bind(); }

void HttpServer::stop() {
  if (http_) http_->stop();
}

}  // namespace conscale::server
