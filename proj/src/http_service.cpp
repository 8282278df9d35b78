#include "haulplan/http_service.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

#include <httplib.h>

#include "haulplan/scenario_json.hpp"
#include "haulplan/svg.hpp"

namespace haulplan {

int port_from_env() {
  const char* raw = std::getenv("HAULPLAN_PORT");
  if (raw == nullptr || *raw == '\0') return kDefaultPort;
  std::string_view s(raw);
  int port = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), port);
  if (ec != std::errc() || end != s.data() + s.size() || port < 0 || port > 65535) {
    throw Error(ErrorCode::InvalidArgument, "HAULPLAN_PORT must be a port number");
  }
  return port;
}

std::string ScenarioStore::create(Scenario scenario) {
  std::lock_guard lock(mutex_);
  const std::string id = "s" + std::to_string(next_id_++);
  scenarios_[id] = std::make_shared<const Scenario>(std::move(scenario));
  return id;
}

ScenarioStore::Snapshot ScenarioStore::get(const std::string& id) const {
  std::lock_guard lock(mutex_);
  const auto it = scenarios_.find(id);
  return it == scenarios_.end() ? nullptr : it->second;
}

bool ScenarioStore::replace(const std::string& id, Scenario scenario) {
  auto snapshot = std::make_shared<const Scenario>(std::move(scenario));
  std::lock_guard lock(mutex_);
  const auto it = scenarios_.find(id);
  if (it == scenarios_.end()) return false;
  it->second = std::move(snapshot);
  return true;
}

namespace {

constexpr const char* kJson = "application/json";

int status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotFound:
      return 404;
    case ErrorCode::ScenarioInvalid:
    case ErrorCode::InvalidArgument:
    case ErrorCode::DegenerateCalibration:
      return 400;
    default:
      return 422;
  }
}

void send_error(httplib::Response& res, ErrorCode code, std::string_view message) {
  res.status = status_for(code);
  res.set_content(error_to_json(code, message).dump(), kJson);
}

// Runs a handler, mapping planner and scenario exceptions to error bodies.
template <typename Fn>
httplib::Server::Handler guarded(Fn fn) {
  return [fn](const httplib::Request& req, httplib::Response& res) {
    try {
      fn(req, res);
    } catch (const Error& e) {
      send_error(res, e.code(), e.what());
    }
  };
}

Scenario parse_valid(const std::string& body) {
  Scenario s = parse_scenario(body);
  require_valid(s);
  return s;
}

ScenarioStore::Snapshot lookup(const ScenarioStore& store, const std::string& id) {
  auto snap = store.get(id);
  if (!snap) throw Error(ErrorCode::NotFound, "no scenario with id '" + id + "'");
  return snap;
}

}  // namespace

void mount_routes(httplib::Server& server, ScenarioStore& store, SolveOptions options) {
  server.Post("/scenarios", guarded([&store](const httplib::Request& req, httplib::Response& res) {
                Scenario s = parse_valid(req.body);
                Json body{{"id", ""}, {"scenario", scenario_to_json(s)}};
                body["id"] = store.create(std::move(s));
                res.status = 201;
                res.set_content(body.dump(), kJson);
              }));

  server.Get(R"(/scenarios/([^/]+))",
             guarded([&store](const httplib::Request& req, httplib::Response& res) {
               const auto snap = lookup(store, req.matches[1]);
               res.set_content(serialize_scenario(*snap), kJson);
             }));

  server.Put(R"(/scenarios/([^/]+))",
             guarded([&store](const httplib::Request& req, httplib::Response& res) {
               const std::string id = req.matches[1];
               lookup(store, id);
               Scenario s = parse_valid(req.body);
               const std::string doc = serialize_scenario(s);
               if (!store.replace(id, std::move(s))) {
                 throw Error(ErrorCode::NotFound, "no scenario with id '" + id + "'");
               }
               res.set_content(doc, kJson);
             }));

  server.Post(R"(/scenarios/([^/]+)/solve)",
              guarded([&store, options](const httplib::Request& req, httplib::Response& res) {
                const auto snap = lookup(store, req.matches[1]);
                res.set_content(serialize_result(solve_scenario(*snap, options)), kJson);
              }));

  server.Get(R"(/scenarios/([^/]+)/svg)",
             guarded([&store, options](const httplib::Request& req, httplib::Response& res) {
               const auto snap = lookup(store, req.matches[1]);
               res.set_content(render_svg(*snap, solve_scenario(*snap, options)),
                               "image/svg+xml");
             }));
}

}  // namespace haulplan
