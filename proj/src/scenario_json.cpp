#include "haulplan/scenario_json.hpp"

#include <string>

namespace haulplan {
namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ScenarioInvalid, what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

double number(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_number()) bad(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

double number_or(const Json& j, const char* key, double fallback) {
  return j.is_object() && j.contains(key) ? number(j, key) : fallback;
}

std::string text(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_string()) bad(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::string text_or(const Json& j, const char* key, std::string fallback) {
  return j.is_object() && j.contains(key) ? text(j, key) : fallback;
}

const Json& array_or_empty(const Json& j, const char* key) {
  static const Json empty = Json::array();
  if (!j.contains(key)) return empty;
  const Json& v = j.at(key);
  if (!v.is_array()) bad(std::string("field '") + key + "' must be an array");
  return v;
}

Json point_json(Vec2 p) { return Json::array({p.x, p.y}); }

Vec2 point_from(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    bad(std::string("field '") + key + "' must be [x, y]");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

Json pose_json(const SitePose& p) {
  return Json{{"x_m", p.x}, {"y_m", p.y}, {"bearing_deg", p.bearing_deg}};
}

SitePose pose_from(const Json& j) {
  if (!j.is_object()) bad("pose must be an object");
  return {number(j, "x_m"), number(j, "y_m"), number(j, "bearing_deg")};
}

Json truck_json(const TruckParams& t) {
  return Json{{"max_forward_speed_mps", t.v_fwd_max},
              {"max_reverse_speed_mps", t.v_rev_max},
              {"acceleration_mps2", t.accel},
              {"deceleration_mps2", t.decel},
              {"tipping_duration_s", t.tipping_duration},
              {"turning_radius_m", t.turning_radius},
              {"fuel_lph",
               {{"cruise_forward", t.fuel_cruise_fwd},
                {"cruise_reverse", t.fuel_cruise_rev},
                {"accel_forward", t.fuel_accel_fwd},
                {"accel_reverse", t.fuel_accel_rev},
                {"decel_or_idle", t.fuel_decel_or_idle},
                {"tipping", t.fuel_tipping}}},
              {"tyre_wear_mmph", {{"loaded", t.wear_loaded}, {"empty", t.wear_empty}}}};
}

TruckParams truck_from(const Json& j) {
  TruckParams t;
  if (!j.is_object()) bad("'truck' must be an object");
  t.v_fwd_max = number_or(j, "max_forward_speed_mps", t.v_fwd_max);
  t.v_rev_max = number_or(j, "max_reverse_speed_mps", t.v_rev_max);
  t.accel = number_or(j, "acceleration_mps2", t.accel);
  t.decel = number_or(j, "deceleration_mps2", t.decel);
  t.tipping_duration = number_or(j, "tipping_duration_s", t.tipping_duration);
  t.turning_radius = number_or(j, "turning_radius_m", t.turning_radius);
  if (j.contains("fuel_lph")) {
    const Json& f = j.at("fuel_lph");
    t.fuel_cruise_fwd = number_or(f, "cruise_forward", t.fuel_cruise_fwd);
    t.fuel_cruise_rev = number_or(f, "cruise_reverse", t.fuel_cruise_rev);
    t.fuel_accel_fwd = number_or(f, "accel_forward", t.fuel_accel_fwd);
    t.fuel_accel_rev = number_or(f, "accel_reverse", t.fuel_accel_rev);
    t.fuel_decel_or_idle = number_or(f, "decel_or_idle", t.fuel_decel_or_idle);
    t.fuel_tipping = number_or(f, "tipping", t.fuel_tipping);
  }
  if (j.contains("tyre_wear_mmph")) {
    const Json& w = j.at("tyre_wear_mmph");
    t.wear_loaded = number_or(w, "loaded", t.wear_loaded);
    t.wear_empty = number_or(w, "empty", t.wear_empty);
  }
  return t;
}

Section section_from(const std::string& s) {
  if (s == "inbound") return Section::Inbound;
  if (s == "outbound") return Section::Outbound;
  bad("waypoint section must be 'inbound' or 'outbound'");
}

Scenario parse_document(const Json& doc) {
  if (!doc.is_object()) bad("scenario must be a JSON object");
  Scenario s;
  const Json& version = member(doc, "schema_version");
  if (!version.is_number_integer()) bad("schema_version must be an integer");
  s.schema_version = version.get<int>();
  if (s.schema_version != kSchemaVersion) {
    bad("unsupported schema_version " + std::to_string(s.schema_version));
  }
  s.name = text_or(doc, "name", "");
  s.image_ref = text_or(doc, "image_ref", "");
  if (doc.contains("calibration") && !doc.at("calibration").is_null()) {
    const Json& c = doc.at("calibration");
    s.calibration = Calibration{point_from(c, "p1_px"), point_from(c, "p2_px"),
                                number(c, "distance_m"), number_or(c, "image_height_px", 0.0)};
  }
  if (doc.contains("truck")) s.truck = truck_from(doc.at("truck"));
  if (doc.contains("turntable")) {
    const Json& t = doc.at("turntable");
    s.turntable.diameter = number_or(t, "diameter_m", s.turntable.diameter);
    s.turntable.max_angular_speed_deg =
        number_or(t, "max_angular_speed_degps", s.turntable.max_angular_speed_deg);
    s.turntable.angular_accel_deg =
        number_or(t, "angular_accel_degps2", s.turntable.angular_accel_deg);
  }
  if (doc.contains("schedule")) {
    const Json& o = doc.at("schedule");
    s.schedule.trips_per_shift = number_or(o, "trips_per_shift", s.schedule.trips_per_shift);
    s.schedule.shifts_per_day = number_or(o, "shifts_per_day", s.schedule.shifts_per_day);
    s.schedule.days_per_year = number_or(o, "days_per_year", s.schedule.days_per_year);
  }
  for (const Json& p : array_or_empty(doc, "entry_exit_pairs")) {
    s.entry_exit_pairs.push_back(
        {text(p, "label"), pose_from(member(p, "entry")), pose_from(member(p, "exit"))});
  }
  for (const Json& d : array_or_empty(doc, "dump_points")) {
    s.dump_points.push_back({text(d, "label"), pose_from(member(d, "pose"))});
  }
  for (const Json& w : array_or_empty(doc, "waypoints")) {
    const Json& idx = member(w, "index");
    if (!idx.is_number_integer()) bad("waypoint index must be an integer");
    s.waypoints.push_back({text(w, "route_id"), section_from(text(w, "section")), idx.get<int>(),
                           pose_from(member(w, "pose"))});
  }
  for (const Json& o : array_or_empty(doc, "reverse_overrides")) {
    s.reverse_overrides.push_back({text(o, "route_id"), pose_from(member(o, "pose"))});
  }
  return s;
}

}  // namespace

Json scenario_to_json(const Scenario& s) {
  Json doc;
  doc["schema_version"] = s.schema_version;
  doc["name"] = s.name;
  doc["image_ref"] = s.image_ref;
  if (s.calibration) {
    doc["calibration"] = Json{{"p1_px", point_json(s.calibration->p1_px)},
                              {"p2_px", point_json(s.calibration->p2_px)},
                              {"distance_m", s.calibration->distance_m},
                              {"image_height_px", s.calibration->image_height_px}};
  } else {
    doc["calibration"] = nullptr;
  }
  doc["truck"] = truck_json(s.truck);
  doc["turntable"] = Json{{"diameter_m", s.turntable.diameter},
                          {"max_angular_speed_degps", s.turntable.max_angular_speed_deg},
                          {"angular_accel_degps2", s.turntable.angular_accel_deg}};
  doc["schedule"] = Json{{"trips_per_shift", s.schedule.trips_per_shift},
                         {"shifts_per_day", s.schedule.shifts_per_day},
                         {"days_per_year", s.schedule.days_per_year}};
  Json pairs = Json::array();
  for (const auto& p : s.entry_exit_pairs) {
    pairs.push_back({{"label", p.label}, {"entry", pose_json(p.entry)}, {"exit", pose_json(p.exit)}});
  }
  doc["entry_exit_pairs"] = std::move(pairs);
  Json dumps = Json::array();
  for (const auto& d : s.dump_points) dumps.push_back({{"label", d.label}, {"pose", pose_json(d.pose)}});
  doc["dump_points"] = std::move(dumps);
  Json wps = Json::array();
  for (const auto& w : s.waypoints) {
    wps.push_back({{"route_id", w.route_id},
                   {"section", std::string(to_string(w.section))},
                   {"index", w.index},
                   {"pose", pose_json(w.pose)}});
  }
  doc["waypoints"] = std::move(wps);
  Json ovs = Json::array();
  for (const auto& o : s.reverse_overrides) {
    ovs.push_back({{"route_id", o.route_id}, {"pose", pose_json(o.pose)}});
  }
  doc["reverse_overrides"] = std::move(ovs);
  return doc;
}

Scenario scenario_from_json(const Json& doc) {
  try {
    return parse_document(doc);
  } catch (const Json::exception& e) {
    bad(std::string("malformed scenario: ") + e.what());
  }
}

std::string serialize_scenario(const Scenario& scenario) {
  return scenario_to_json(scenario).dump(2) + "\n";
}

Scenario parse_scenario(std::string_view body) {
  Json doc;
  try {
    doc = Json::parse(body.begin(), body.end());
  } catch (const Json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  return scenario_from_json(doc);
}

namespace {

Json segment_json(const PathSegment& s, std::string_view leg) {
  Json j{{"leg", leg},
         {"kind", s.kind == SegmentKind::Arc ? "arc" : "straight"},
         {"direction", s.direction == Travel::Forward ? "forward" : "reverse"},
         {"length_m", s.length}};
  if (s.kind == SegmentKind::Arc) {
    j["turn"] = std::string(1, turn_letter(s.turn));
    j["radius_m"] = s.radius;
    j["sweep_deg"] = rad_to_deg(s.sweep);
  }
  return j;
}

std::string join_labels(const std::vector<PathPlan>& legs) {
  std::string out;
  for (const auto& l : legs) out += (out.empty() ? "" : "+") + l.form_label;
  return out;
}

Json trip_json(const TripPlan& trip) {
  Json j;
  std::string entry_form = join_labels(trip.inbound);
  entry_form += (entry_form.empty() ? "" : "+") + trip.manoeuvre_plan().form_label;
  j["form"] = entry_form + "/" + join_labels(trip.outbound);

  double length = trip.inbound_length() + trip.manoeuvre_plan().length() + trip.outbound_length();
  j["length_m"] = length;

  if (const auto* tt = std::get_if<TurntableApproach>(&trip.manoeuvre)) {
    j["manoeuvre"] = Json{{"type", "turntable"},
                          {"form", tt->plan.form_label},
                          {"entry_bearing_deg", heading_to_bearing(tt->entry_heading)},
                          {"rotation_deg", rad_to_deg(tt->rotation_angle)},
                          {"used_fallback", tt->used_fallback}};
  } else {
    const auto& rv = std::get<ReverseApproach>(trip.manoeuvre);
    const SitePose cusp = SitePose::from_directed(rv.reverse_point);
    j["manoeuvre"] = Json{{"type", "reverse"},
                          {"form", rv.plan.form_label},
                          {"reverse_point", {{"x_m", cusp.x}, {"y_m", cusp.y}, {"bearing_deg", cusp.bearing_deg}}},
                          {"forward_length_m", rv.forward_length},
                          {"reverse_length_m", rv.reverse_length},
                          {"overridden", rv.overridden},
                          {"long_reverse_warning", rv.long_reverse_warning}};
  }

  Json segs = Json::array();
  for (const auto& leg : trip.inbound)
    for (const auto& s : leg.segments) segs.push_back(segment_json(s, "inbound"));
  for (const auto& s : trip.manoeuvre_plan().segments) segs.push_back(segment_json(s, "manoeuvre"));
  for (const auto& leg : trip.outbound)
    for (const auto& s : leg.segments) segs.push_back(segment_json(s, "outbound"));
  j["segments"] = std::move(segs);
  return j;
}

Json cost_json(const CostBreakdown& c) {
  Json phases = Json::array();
  for (const auto& pc : c.ledger) {
    phases.push_back({{"kind", std::string(to_string(pc.phase.kind))},
                      {"direction", std::string(to_string(pc.phase.direction))},
                      {"loaded", pc.phase.loaded},
                      {"duration_s", pc.phase.duration},
                      {"distance_m", pc.phase.distance},
                      {"fuel_l", pc.fuel},
                      {"tyre_wear_mm", pc.tyre_wear}});
  }
  return Json{{"time_s", c.time},
              {"fuel_l", c.fuel},
              {"tyre_wear_mm", c.tyre_wear},
              {"phases", std::move(phases)}};
}

Json variant_json(const VariantResult& v, const std::string& route_id) {
  if (v.error || !v.trip || !v.cost) {
    const RouteError err = v.error.value_or(RouteError{ErrorCode::NoPathExists, "not solved"});
    return Json{{"status", "error"}, {"error", error_to_json(err.code, err.message, route_id)}};
  }
  Json j{{"status", "ok"}};
  Json trip = trip_json(*v.trip);
  for (auto& [k, val] : trip.items()) j[k] = std::move(val);
  j["cost"] = cost_json(*v.cost);
  Json poly = Json::array();
  for (const auto& p : v.polyline) {
    poly.push_back(Json::array(
        {p.x, p.y, heading_to_bearing(p.heading), p.direction == Travel::Forward ? 1 : -1}));
  }
  j["polyline"] = std::move(poly);
  return j;
}

Json savings_json(const Savings& s) {
  return Json{{"time_s", s.time},
              {"fuel_l", s.fuel},
              {"tyre_wear_mm", s.tyre_wear},
              {"annual_time_s", s.annual_time},
              {"annual_time_h", s.annual_time / 3600.0},
              {"annual_fuel_l", s.annual_fuel},
              {"annual_tyre_wear_mm", s.annual_tyre_wear}};
}

}  // namespace

Json result_to_json(const ResultSet& r) {
  Json doc;
  doc["schema_version"] = r.schema_version;
  doc["sample_step_m"] = r.sample_step;
  doc["schedule"] = Json{{"trips_per_shift", r.schedule.trips_per_shift},
                         {"shifts_per_day", r.schedule.shifts_per_day},
                         {"days_per_year", r.schedule.days_per_year}};
  Json routes = Json::array();
  int ok = 0;
  for (const auto& route : r.routes) {
    Json j{{"route_id", route.route_id}, {"pair", route.pair_label}, {"dump", route.dump_label}};
    j["turntable"] = variant_json(route.turntable, route.route_id);
    j["no_turntable"] = variant_json(route.no_turntable, route.route_id);
    j["savings"] = route.savings ? savings_json(*route.savings) : Json(nullptr);
    if (route.savings) ++ok;
    routes.push_back(std::move(j));
  }
  doc["routes"] = std::move(routes);
  doc["summary"] = Json{{"routes", r.routes.size()},
                        {"routes_with_savings", ok},
                        {"mean_savings", r.mean_savings ? savings_json(*r.mean_savings)
                                                        : Json(nullptr)}};
  return doc;
}

std::string serialize_result(const ResultSet& result) { return result_to_json(result).dump(2) + "\n"; }

Json error_to_json(ErrorCode code, std::string_view message, std::string_view route_id) {
  Json j{{"code", std::string(to_string(code))}, {"message", std::string(message)}};
  if (!route_id.empty()) j["route_id"] = std::string(route_id);
  return j;
}

}  // namespace haulplan
