#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "haulplan/geometry.hpp"
#include "haulplan/reverse.hpp"
#include "haulplan/turntable.hpp"

namespace haulplan {

enum class Variant { Turntable, NoTurntable };

std::string_view to_string(Variant v);

/// One entry → dump → exit haul for one variant.
///
/// Stops happen only at the end of the manoeuvre: on the turntable, or at the
/// reverse point and again at the dump. The truck is loaded until tipping
/// ends. Waypoints between legs shape geometry only.
struct TripPlan {
  std::string route_id;
  Variant variant = Variant::Turntable;
  /// Entry to the manoeuvre start, one leg per waypoint section.
  std::vector<PathPlan> inbound;
  std::variant<TurntableApproach, ReverseApproach> manoeuvre;
  /// Dump departure pose to the exit, one leg per waypoint section.
  std::vector<PathPlan> outbound;
  /// Rotation kinematics; present for the turntable variant.
  std::optional<TurntableSpec> turntable;
  /// Whether the truck crosses the entry and exit points at full speed.
  bool enter_at_speed = true;
  bool exit_at_speed = true;

  const PathPlan& manoeuvre_plan() const;
  double inbound_length() const;
  double outbound_length() const;
};

/// Largest positional gap between consecutive legs (inbound, manoeuvre,
/// outbound). The turntable rotation is the only allowed heading jump, so
/// it is not counted.
double chaining_gap(const TripPlan& trip);

/// Dense polyline over the whole trip, deduplicating leg junctions.
std::vector<PathSample> sample_trip(const TripPlan& trip, double step);

}  // namespace haulplan
