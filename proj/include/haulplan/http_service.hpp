#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "haulplan/scenario.hpp"

namespace httplib {
class Server;
}

namespace haulplan {

inline constexpr int kDefaultPort = 8787;

/// HAULPLAN_PORT, or the default when unset. Throws InvalidArgument for a
/// value that is not a port number.
int port_from_env();

/// Scenario sessions keyed by id. Writers replace whole snapshots under a
/// lock; readers get an immutable snapshot and solve without holding it.
class ScenarioStore {
 public:
  using Snapshot = std::shared_ptr<const Scenario>;

  std::string create(Scenario scenario);
  Snapshot get(const std::string& id) const;
  /// Returns false when the id is unknown.
  bool replace(const std::string& id, Scenario scenario);

 private:
  mutable std::mutex mutex_;
  std::map<std::string, Snapshot> scenarios_;
  unsigned long next_id_ = 1;
};

/// Registers:
///   POST /scenarios               create, returns {id, scenario}
///   GET  /scenarios/{id}          scenario document
///   PUT  /scenarios/{id}          replace
///   POST /scenarios/{id}/solve    ResultSet
///   GET  /scenarios/{id}/svg      overlay
/// Errors are {code, message, route_id?}: 404 for unknown ids, 400 for bad
/// documents, 422 for planner failures.
void mount_routes(httplib::Server& server, ScenarioStore& store, SolveOptions options = {});

}  // namespace haulplan
