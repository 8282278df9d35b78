#include "haulplan/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <tuple>

#include "haulplan/dubins.hpp"
#include "haulplan/reverse.hpp"
#include "haulplan/turntable.hpp"

namespace haulplan {

double bearing_to_heading(double bearing_deg) {
  return normalize_angle(kHalfPi - deg_to_rad(bearing_deg));
}

double heading_to_bearing(double heading) {
  double b = std::fmod(90.0 - rad_to_deg(heading), 360.0);
  if (b < 0.0) b += 360.0;
  if (b >= 360.0) b = 0.0;
  return b;
}

DirectedPoint SitePose::to_directed() const { return {x, y, bearing_to_heading(bearing_deg)}; }

SitePose SitePose::from_directed(const DirectedPoint& p) {
  return {p.x(), p.y(), heading_to_bearing(p.heading())};
}

PixelTransform::PixelTransform(double meters_per_pixel, double image_height_px)
    : scale_(meters_per_pixel), height_(image_height_px) {}

Vec2 PixelTransform::to_world(Vec2 px) const { return {px.x * scale_, (height_ - px.y) * scale_}; }

Vec2 PixelTransform::to_pixel(Vec2 world) const {
  return {world.x / scale_, height_ - world.y / scale_};
}

PixelTransform calibrate(Vec2 p1_px, Vec2 p2_px, double distance_m, double image_height_px) {
  const double span = norm(p2_px - p1_px);
  if (!(span > 0.0) || !std::isfinite(span)) {
    throw Error(ErrorCode::DegenerateCalibration, "calibration points must be distinct");
  }
  if (!(distance_m > 0.0) || !std::isfinite(distance_m)) {
    throw Error(ErrorCode::DegenerateCalibration, "calibration distance must be > 0");
  }
  if (!(image_height_px >= 0.0) || !std::isfinite(image_height_px)) {
    throw Error(ErrorCode::DegenerateCalibration, "image height must be >= 0");
  }
  return {distance_m / span, image_height_px};
}

PixelTransform calibrate(const Calibration& c) {
  return calibrate(c.p1_px, c.p2_px, c.distance_m, c.image_height_px);
}

std::string_view to_string(Section s) { return s == Section::Inbound ? "inbound" : "outbound"; }

TurntableSpec TurntableTemplate::at(const DirectedPoint& dump) const {
  TurntableSpec tt;
  tt.center = dump.position();
  tt.exit_heading = dump.heading();
  tt.diameter = diameter;
  tt.max_angular_speed = deg_to_rad(max_angular_speed_deg);
  tt.angular_accel = deg_to_rad(angular_accel_deg);
  return tt;
}

std::string make_route_id(const EntryExitPair& pair, const DumpPoint& dump) {
  return pair.label + "@" + dump.label;
}

namespace {

bool finite_pose(const SitePose& p) {
  return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.bearing_deg);
}

}  // namespace

std::vector<std::string> validate(const Scenario& s) {
  std::vector<std::string> issues;
  auto issue = [&](const std::string& msg) { issues.push_back(msg); };

  if (s.schema_version != kSchemaVersion) {
    issue("unsupported schema_version " + std::to_string(s.schema_version));
  }
  if (s.calibration) {
    try {
      calibrate(*s.calibration);
    } catch (const Error& e) {
      issue(std::string("calibration: ") + e.what());
    }
  }
  try {
    check_truck(s.truck);
  } catch (const Error& e) {
    issue(std::string("truck: ") + e.what());
  }
  if (!(s.turntable.diameter > 0.0) || !(s.turntable.max_angular_speed_deg > 0.0) ||
      !(s.turntable.angular_accel_deg > 0.0)) {
    issue("turntable: diameter and angular rates must be positive");
  }
  if (!(s.schedule.trips_per_shift >= 0.0) || !(s.schedule.shifts_per_day >= 0.0) ||
      !(s.schedule.days_per_year >= 0.0)) {
    issue("schedule: counts must be >= 0");
  }

  std::set<std::string> pair_labels;
  for (const auto& p : s.entry_exit_pairs) {
    if (p.label.empty()) issue("entry/exit pair with empty label");
    if (!pair_labels.insert(p.label).second) issue("duplicate entry/exit label '" + p.label + "'");
    if (!finite_pose(p.entry) || !finite_pose(p.exit)) {
      issue("entry/exit pair '" + p.label + "' has non-finite coordinates");
    }
  }
  std::set<std::string> dump_labels;
  for (const auto& d : s.dump_points) {
    if (d.label.empty()) issue("dump point with empty label");
    if (!dump_labels.insert(d.label).second) issue("duplicate dump label '" + d.label + "'");
    if (!finite_pose(d.pose)) issue("dump point '" + d.label + "' has non-finite coordinates");
  }
  std::set<std::string> routes;
  for (const auto& p : s.entry_exit_pairs) {
    for (const auto& d : s.dump_points) routes.insert(make_route_id(p, d));
  }

  std::set<std::tuple<std::string, Section, int>> slots;
  for (const auto& w : s.waypoints) {
    if (!routes.count(w.route_id)) issue("waypoint references unknown route '" + w.route_id + "'");
    if (!finite_pose(w.pose)) issue("waypoint on '" + w.route_id + "' has non-finite coordinates");
    if (!slots.insert({w.route_id, w.section, w.index}).second) {
      issue("duplicate waypoint index " + std::to_string(w.index) + " on '" + w.route_id + "'");
    }
  }
  std::set<std::string> overridden;
  for (const auto& o : s.reverse_overrides) {
    if (!routes.count(o.route_id)) {
      issue("reverse override references unknown route '" + o.route_id + "'");
    }
    if (!finite_pose(o.pose)) issue("reverse override on '" + o.route_id + "' is non-finite");
    if (!overridden.insert(o.route_id).second) {
      issue("more than one reverse override for '" + o.route_id + "'");
    }
  }
  return issues;
}

void require_valid(const Scenario& scenario) {
  const auto issues = validate(scenario);
  if (issues.empty()) return;
  std::ostringstream msg;
  for (std::size_t i = 0; i < issues.size(); ++i) msg << (i ? "; " : "") << issues[i];
  throw Error(ErrorCode::ScenarioInvalid, msg.str());
}

namespace {

std::vector<DirectedPoint> waypoints_for(const Scenario& s, const std::string& route_id,
                                         Section section) {
  std::vector<const Waypoint*> picked;
  for (const auto& w : s.waypoints) {
    if (w.route_id == route_id && w.section == section) picked.push_back(&w);
  }
  std::sort(picked.begin(), picked.end(),
            [](const Waypoint* a, const Waypoint* b) { return a->index < b->index; });
  std::vector<DirectedPoint> out;
  for (const auto* w : picked) out.push_back(w->pose.to_directed());
  return out;
}

std::vector<PathPlan> chain(const std::vector<DirectedPoint>& poses, double radius) {
  std::vector<PathPlan> legs;
  for (std::size_t i = 1; i < poses.size(); ++i) {
    legs.push_back(shortest_csc(poses[i - 1], poses[i], radius).plan);
  }
  return legs;
}

TripPlan plan_variant(const Scenario& s, const EntryExitPair& pair, const DumpPoint& dump,
                      const std::string& route_id, Variant variant) {
  const double radius = s.truck.turning_radius;
  const DirectedPoint dump_pose = dump.pose.to_directed();

  std::vector<DirectedPoint> in_poses{pair.entry.to_directed()};
  for (const auto& w : waypoints_for(s, route_id, Section::Inbound)) in_poses.push_back(w);
  std::vector<DirectedPoint> out_poses{dump_pose};
  for (const auto& w : waypoints_for(s, route_id, Section::Outbound)) out_poses.push_back(w);
  out_poses.push_back(pair.exit.to_directed());

  TripPlan trip;
  trip.route_id = route_id;
  trip.variant = variant;
  trip.inbound = chain(in_poses, radius);
  const DirectedPoint& approach_start = in_poses.back();

  if (variant == Variant::Turntable) {
    const TurntableSpec tt = s.turntable.at(dump_pose);
    trip.manoeuvre = plan_turntable_approach(approach_start, tt, radius);
    trip.turntable = tt;
  } else {
    const auto ov = std::find_if(s.reverse_overrides.begin(), s.reverse_overrides.end(),
                                 [&](const ReverseOverride& o) { return o.route_id == route_id; });
    if (ov != s.reverse_overrides.end()) {
      trip.manoeuvre =
          replan_with_reverse_override(approach_start, ov->pose.to_directed(), dump_pose, radius);
    } else {
      trip.manoeuvre = solve_reverse_approach(approach_start, dump_pose, radius);
    }
  }
  trip.outbound = chain(out_poses, radius);
  return trip;
}

}  // namespace

std::vector<RoutePlan> build_routes(const Scenario& scenario) {
  require_valid(scenario);
  std::vector<RoutePlan> out;
  for (const auto& pair : scenario.entry_exit_pairs) {
    for (const auto& dump : scenario.dump_points) {
      const std::string id = make_route_id(pair, dump);
      for (Variant v : {Variant::Turntable, Variant::NoTurntable}) {
        RoutePlan rp{id, pair.label, dump.label, v, std::nullopt, std::nullopt};
        try {
          rp.trip = plan_variant(scenario, pair, dump, id, v);
        } catch (const Error& e) {
          rp.error = RouteError{e.code(), e.what()};
        }
        out.push_back(std::move(rp));
      }
    }
  }
  return out;
}

ResultSet solve_scenario(const Scenario& scenario, const SolveOptions& options) {
  if (!(options.sample_step > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "sample step must be > 0");
  }
  const auto plans = build_routes(scenario);

  ResultSet rs;
  rs.sample_step = options.sample_step;
  rs.schedule = scenario.schedule;
  for (std::size_t i = 0; i + 1 < plans.size(); i += 2) {
    RouteResult route;
    route.route_id = plans[i].route_id;
    route.pair_label = plans[i].pair_label;
    route.dump_label = plans[i].dump_label;
    for (std::size_t j = i; j < i + 2; ++j) {
      const RoutePlan& rp = plans[j];
      VariantResult& vr = rp.variant == Variant::Turntable ? route.turntable : route.no_turntable;
      vr.variant = rp.variant;
      vr.error = rp.error;
      if (rp.trip) {
        vr.trip = rp.trip;
        vr.cost = trip_cost(*rp.trip, scenario.truck);
        vr.polyline = sample_trip(*rp.trip, options.sample_step);
      }
    }
    if (route.turntable.cost && route.no_turntable.cost) {
      route.savings =
          compare_and_annualize(*route.turntable.cost, *route.no_turntable.cost, scenario.schedule);
    }
    rs.routes.push_back(std::move(route));
  }

  double dt = 0.0, df = 0.0, dw = 0.0;
  int n = 0;
  for (const auto& r : rs.routes) {
    if (!r.savings) continue;
    dt += r.savings->time;
    df += r.savings->fuel;
    dw += r.savings->tyre_wear;
    ++n;
  }
  if (n > 0) rs.mean_savings = annualize(dt / n, df / n, dw / n, scenario.schedule);
  return rs;
}

}  // namespace haulplan
