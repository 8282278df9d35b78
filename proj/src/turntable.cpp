#include "haulplan/turntable.hpp"

#include <cmath>
#include <optional>

#include "haulplan/dubins.hpp"
#include "haulplan/errors.hpp"

namespace haulplan {

void check_turntable(const TurntableSpec& tt) {
  if (!(tt.diameter > 0.0) || !(tt.max_angular_speed > 0.0) || !(tt.angular_accel > 0.0)) {
    throw Error(ErrorCode::InvalidArgument,
                "turntable diameter and angular rates must be positive");
  }
}

bool admissible_entry(double entry_heading, double exit_heading) {
  return angle_distance(entry_heading, exit_heading + kPi) <= kHalfPi + 1e-9;
}

TurntableApproach plan_turntable_approach(const DirectedPoint& start, const TurntableSpec& tt,
                                          double radius) {
  check_turntable(tt);
  if (norm(start.position() - tt.center) < tt.diameter) {
    throw Error(ErrorCode::StartTooClose,
                "approach start lies within one turntable diameter of the centre");
  }

  std::optional<TurntableApproach> best;
  for (auto& cand : solve_point_target(start, tt.center, radius)) {
    if (!admissible_entry(cand.entry_heading, tt.exit_heading)) continue;
    if (best && !(cand.total_length < best->plan.length())) continue;
    best = TurntableApproach{std::move(cand.plan), cand.entry_heading,
                             angle_distance(cand.entry_heading, tt.exit_heading), false};
  }
  if (best) return *best;

  std::optional<DubinsCandidate> fallback;
  for (double side : {kHalfPi, -kHalfPi}) {
    const DirectedPoint goal(tt.center, tt.exit_heading + side);
    for (auto& cand : solve_csc(start, goal, radius)) {
      if (!fallback || cand.total_length < fallback->total_length) fallback = std::move(cand);
    }
  }
  if (!fallback) {
    throw Error(ErrorCode::NoPathExists, "no admissible path onto the turntable");
  }
  const double entry = integrate_path(fallback->plan).heading();
  // The entry is perpendicular by construction; report the exact value.
  return TurntableApproach{std::move(fallback->plan), entry, kHalfPi, true};
}

double rotation_time(double angle, const TurntableSpec& tt) {
  check_turntable(tt);
  if (!(angle >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "rotation angle must be >= 0");
  }
  const double w = tt.max_angular_speed;
  const double a = tt.angular_accel;
  if (angle >= w * w / a) return angle / w + w / a;
  return 2.0 * std::sqrt(angle / a);
}

}  // namespace haulplan
