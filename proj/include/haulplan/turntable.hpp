#pragma once

#include "haulplan/geometry.hpp"

namespace haulplan {

struct TurntableSpec {
  Vec2 center;
  /// Heading of a truck driving directly away from the crusher.
  double exit_heading = 0.0;
  double diameter = 15.0;
  double max_angular_speed = deg_to_rad(6.0);  // rad/s
  double angular_accel = deg_to_rad(1.2);      // rad/s², also used to brake
};

/// Throws InvalidArgument unless diameter and angular rates are positive.
void check_turntable(const TurntableSpec& tt);

struct TurntableApproach {
  PathPlan plan;  // LS/RS, or a CSC form for perpendicular fallback entries
  double entry_heading = 0.0;
  double rotation_angle = 0.0;
  bool used_fallback = false;
};

/// The admissible entry range spans 180° centred on the toward-crusher
/// heading (exit + π). Its boundary, the perpendicular entries, is included.
bool admissible_entry(double entry_heading, double exit_heading);

/// Direct arc-straight entry when one lands inside the admissible range,
/// otherwise the shortest CSC arriving perpendicular to the exit heading.
/// Throws StartTooClose when the start is within one diameter of the centre.
TurntableApproach plan_turntable_approach(const DirectedPoint& start, const TurntableSpec& tt,
                                          double radius);

/// Trapezoidal (or triangular) rotation profile duration, rest to rest.
double rotation_time(double angle, const TurntableSpec& tt);

}  // namespace haulplan
