#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "haulplan/scenario.hpp"

namespace haulplan {

using Json = nlohmann::ordered_json;

/// Scenario documents store poses as meters plus compass bearings and all
/// truck rates in SI units (speeds m/s, fuel L/h, wear mm/h). Missing
/// parameter blocks fall back to the reference truck and turntable.
Json scenario_to_json(const Scenario& scenario);
/// Throws ScenarioInvalid on malformed documents.
Scenario scenario_from_json(const Json& doc);

std::string serialize_scenario(const Scenario& scenario);
Scenario parse_scenario(std::string_view text);

Json result_to_json(const ResultSet& result);
std::string serialize_result(const ResultSet& result);

/// {code, message, route_id?}
Json error_to_json(ErrorCode code, std::string_view message, std::string_view route_id = {});

}  // namespace haulplan
