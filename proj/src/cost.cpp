#include "haulplan/cost.hpp"

#include <cmath>

#include "haulplan/errors.hpp"

namespace haulplan {

void check_truck(const TruckParams& p) {
  const double values[] = {p.v_fwd_max,       p.v_rev_max,      p.accel,
                           p.decel,           p.tipping_duration, p.turning_radius,
                           p.fuel_cruise_fwd, p.fuel_cruise_rev, p.fuel_accel_fwd,
                           p.fuel_accel_rev,  p.fuel_decel_or_idle, p.fuel_tipping,
                           p.wear_loaded,     p.wear_empty};
  for (double v : values) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw Error(ErrorCode::InvalidArgument, "truck parameters must be positive and finite");
    }
  }
  if (!(p.v_rev_max < p.v_fwd_max)) {
    throw Error(ErrorCode::InvalidArgument, "reverse speed must be below forward speed");
  }
}

std::string_view to_string(PhaseKind k) {
  switch (k) {
    case PhaseKind::Accel:
      return "accel";
    case PhaseKind::Cruise:
      return "cruise";
    case PhaseKind::Decel:
      return "decel";
    case PhaseKind::Idle:
      return "idle";
    case PhaseKind::Tipping:
      return "tipping";
    case PhaseKind::Rotate:
      return "rotate";
  }
  return "?";
}

std::string_view to_string(Motion m) {
  switch (m) {
    case Motion::Forward:
      return "forward";
    case Motion::Reverse:
      return "reverse";
    case Motion::None:
      return "none";
  }
  return "?";
}

double MotionProfile::duration() const {
  double t = 0.0;
  for (const auto& ph : phases) t += ph.duration;
  return t;
}

double MotionProfile::distance() const {
  double d = 0.0;
  for (const auto& ph : phases) d += ph.distance;
  return d;
}

void MotionProfile::append(const MotionProfile& other) {
  phases.insert(phases.end(), other.phases.begin(), other.phases.end());
}

void MotionProfile::append(const ProfilePhase& phase) { phases.push_back(phase); }

MotionProfile motion_time(double distance, double v_max, double accel, double decel,
                          bool start_at_rest, bool end_at_rest, Motion direction, bool loaded) {
  if (!(distance >= 0.0) || !std::isfinite(distance)) {
    throw Error(ErrorCode::InvalidArgument, "distance must be finite and >= 0");
  }
  if (!(v_max > 0.0) || !(accel > 0.0) || !(decel > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "speed and accelerations must be positive");
  }
  MotionProfile out;
  if (distance == 0.0) return out;

  auto phase = [&](PhaseKind kind, double duration, double dist) {
    if (duration > 0.0) out.phases.push_back({kind, duration, dist, direction, loaded});
  };

  const double d_acc = start_at_rest ? v_max * v_max / (2.0 * accel) : 0.0;
  const double d_dec = end_at_rest ? v_max * v_max / (2.0 * decel) : 0.0;

  if (distance >= d_acc + d_dec) {
    phase(PhaseKind::Accel, start_at_rest ? v_max / accel : 0.0, d_acc);
    phase(PhaseKind::Cruise, (distance - d_acc - d_dec) / v_max, distance - d_acc - d_dec);
    phase(PhaseKind::Decel, end_at_rest ? v_max / decel : 0.0, d_dec);
  } else if (start_at_rest && end_at_rest) {
    const double v_peak = std::sqrt(2.0 * distance * accel * decel / (accel + decel));
    const double da = v_peak * v_peak / (2.0 * accel);
    phase(PhaseKind::Accel, v_peak / accel, da);
    phase(PhaseKind::Decel, v_peak / decel, distance - da);
  } else if (start_at_rest) {
    phase(PhaseKind::Accel, std::sqrt(2.0 * distance / accel), distance);
  } else {
    phase(PhaseKind::Decel, std::sqrt(2.0 * distance / decel), distance);
  }
  return out;
}

double fuel_rate(const ProfilePhase& phase, const TruckParams& p) {
  switch (phase.kind) {
    case PhaseKind::Accel:
      return phase.direction == Motion::Reverse ? p.fuel_accel_rev : p.fuel_accel_fwd;
    case PhaseKind::Cruise:
      return phase.direction == Motion::Reverse ? p.fuel_cruise_rev : p.fuel_cruise_fwd;
    case PhaseKind::Decel:
    case PhaseKind::Idle:
    case PhaseKind::Rotate:
      return p.fuel_decel_or_idle;
    case PhaseKind::Tipping:
      return p.fuel_tipping;
  }
  return 0.0;
}

double wear_rate(const ProfilePhase& phase, const TruckParams& p) {
  return phase.loaded ? p.wear_loaded : p.wear_empty;
}

double fuel_of(const MotionProfile& profile, const TruckParams& p) {
  double total = 0.0;
  for (const auto& ph : profile.phases) total += fuel_rate(ph, p) * ph.duration / 3600.0;
  return total;
}

double wear_of(const MotionProfile& profile, const TruckParams& p) {
  double total = 0.0;
  for (const auto& ph : profile.phases) total += wear_rate(ph, p) * ph.duration / 3600.0;
  return total;
}

CostBreakdown cost_of(const MotionProfile& profile, const TruckParams& p) {
  CostBreakdown out;
  out.ledger.reserve(profile.phases.size());
  for (const auto& ph : profile.phases) {
    PhaseCost c{ph, fuel_rate(ph, p) * ph.duration / 3600.0,
                wear_rate(ph, p) * ph.duration / 3600.0};
    out.time += ph.duration;
    out.fuel += c.fuel;
    out.tyre_wear += c.tyre_wear;
    out.ledger.push_back(c);
  }
  return out;
}

MotionProfile trip_profile(const TripPlan& trip, const TruckParams& p) {
  check_truck(p);
  MotionProfile out;
  const bool from_rest = !trip.enter_at_speed;

  if (trip.variant == Variant::Turntable) {
    const auto& approach = std::get<TurntableApproach>(trip.manoeuvre);
    if (!trip.turntable) {
      throw Error(ErrorCode::InvalidArgument, "turntable trip is missing turntable kinematics");
    }
    out.append(motion_time(trip.inbound_length() + approach.plan.length(), p.v_fwd_max, p.accel,
                           p.decel, from_rest, true, Motion::Forward, true));
    const double spin = rotation_time(approach.rotation_angle, *trip.turntable);
    if (spin > 0.0) out.append({PhaseKind::Rotate, spin, 0.0, Motion::None, true});
  } else {
    const auto& approach = std::get<ReverseApproach>(trip.manoeuvre);
    out.append(motion_time(trip.inbound_length() + approach.forward_length, p.v_fwd_max,
                           p.accel, p.decel, from_rest, true, Motion::Forward, true));
    out.append(motion_time(approach.reverse_length, p.v_rev_max, p.accel, p.decel, true, true,
                           Motion::Reverse, true));
  }
  out.append({PhaseKind::Tipping, p.tipping_duration, 0.0, Motion::None, true});
  out.append(motion_time(trip.outbound_length(), p.v_fwd_max, p.accel, p.decel, true,
                         !trip.exit_at_speed, Motion::Forward, false));
  return out;
}

CostBreakdown trip_cost(const TripPlan& trip, const TruckParams& p) {
  return cost_of(trip_profile(trip, p), p);
}

Savings annualize(double time, double fuel, double tyre_wear, const OperatingSchedule& schedule) {
  Savings s;
  s.time = time;
  s.fuel = fuel;
  s.tyre_wear = tyre_wear;
  auto yearly = [&](double per_trip) {
    return per_trip * schedule.trips_per_shift * schedule.shifts_per_day * schedule.days_per_year;
  };
  s.annual_time = yearly(time);
  s.annual_fuel = yearly(fuel);
  s.annual_tyre_wear = yearly(tyre_wear);
  return s;
}

Savings compare_and_annualize(const CostBreakdown& with_turntable,
                              const CostBreakdown& without_turntable,
                              const OperatingSchedule& schedule) {
  return annualize(without_turntable.time - with_turntable.time,
                   without_turntable.fuel - with_turntable.fuel,
                   without_turntable.tyre_wear - with_turntable.tyre_wear, schedule);
}

}  // namespace haulplan
