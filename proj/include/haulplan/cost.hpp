#pragma once

#include <string_view>
#include <vector>

#include "haulplan/trip.hpp"

namespace haulplan {

inline constexpr double kmh_to_mps(double kmh) { return kmh / 3.6; }

/// Truck kinematics and consumption rates. Defaults are the reference haul
/// truck: 10 km/h forward, 2.5 km/h reverse, 28.4 m turning circle radius.
struct TruckParams {
  double v_fwd_max = kmh_to_mps(10.0);  // m/s
  double v_rev_max = kmh_to_mps(2.5);   // m/s
  double accel = 0.5;                   // m/s²
  double decel = 1.8;                   // m/s²
  double tipping_duration = 40.0;       // s
  double turning_radius = 28.4;         // m
  // Fuel, L/h.
  double fuel_cruise_fwd = 150.0;
  double fuel_cruise_rev = 205.0;
  double fuel_accel_fwd = 361.0;
  double fuel_accel_rev = 395.0;
  double fuel_decel_or_idle = 53.7;
  double fuel_tipping = 211.7;
  // Tyre wear, mm/h.
  double wear_loaded = 0.0231;
  double wear_empty = 0.0119;

  friend bool operator==(const TruckParams&, const TruckParams&) = default;
};

/// Throws InvalidArgument unless every value is positive and reverse speed
/// is below forward speed.
void check_truck(const TruckParams& p);

enum class PhaseKind { Accel, Cruise, Decel, Idle, Tipping, Rotate };
enum class Motion { Forward, Reverse, None };

std::string_view to_string(PhaseKind k);
std::string_view to_string(Motion m);

struct ProfilePhase {
  PhaseKind kind = PhaseKind::Idle;
  double duration = 0.0;  // s
  double distance = 0.0;  // m
  Motion direction = Motion::None;
  bool loaded = false;
};

struct MotionProfile {
  std::vector<ProfilePhase> phases;

  double duration() const;
  double distance() const;
  void append(const MotionProfile& other);
  void append(const ProfilePhase& phase);
};

/// Trapezoidal speed profile over `distance`. A boundary that is not a stop
/// is crossed at `v_max`; if the distance is too short to brake from (or
/// reach) `v_max`, the boundary speed is whatever the limits allow.
MotionProfile motion_time(double distance, double v_max, double accel, double decel,
                          bool start_at_rest, bool end_at_rest,
                          Motion direction = Motion::Forward, bool loaded = false);

double fuel_rate(const ProfilePhase& phase, const TruckParams& p);  // L/h
double wear_rate(const ProfilePhase& phase, const TruckParams& p);  // mm/h
double fuel_of(const MotionProfile& profile, const TruckParams& p);
double wear_of(const MotionProfile& profile, const TruckParams& p);

struct PhaseCost {
  ProfilePhase phase;
  double fuel = 0.0;
  double tyre_wear = 0.0;
};

struct CostBreakdown {
  double time = 0.0;       // s
  double fuel = 0.0;       // L
  double tyre_wear = 0.0;  // mm
  std::vector<PhaseCost> ledger;
};

CostBreakdown cost_of(const MotionProfile& profile, const TruckParams& p);

/// Phase sequence for a whole trip, including stops, rotation and tipping.
MotionProfile trip_profile(const TripPlan& trip, const TruckParams& p);
CostBreakdown trip_cost(const TripPlan& trip, const TruckParams& p);

struct OperatingSchedule {
  double trips_per_shift = 109.0;
  double shifts_per_day = 3.0;
  double days_per_year = 365.0;

  double trips_per_year() const { return trips_per_shift * shifts_per_day * days_per_year; }

  friend bool operator==(const OperatingSchedule&, const OperatingSchedule&) = default;
};

/// Per-trip differences (no-turntable minus turntable) and their yearly totals.
struct Savings {
  double time = 0.0;       // s per trip
  double fuel = 0.0;       // L per trip
  double tyre_wear = 0.0;  // mm per trip
  double annual_time = 0.0;       // s
  double annual_fuel = 0.0;       // L
  double annual_tyre_wear = 0.0;  // mm
};

Savings compare_and_annualize(const CostBreakdown& with_turntable,
                              const CostBreakdown& without_turntable,
                              const OperatingSchedule& schedule);

/// Annualizes per-trip deltas directly.
Savings annualize(double time, double fuel, double tyre_wear, const OperatingSchedule& schedule);

}  // namespace haulplan
