#pragma once

#include <optional>
#include <string>
#include <vector>

#include "haulplan/cost.hpp"
#include "haulplan/errors.hpp"
#include "haulplan/geometry.hpp"
#include "haulplan/trip.hpp"

namespace haulplan {

inline constexpr int kSchemaVersion = 1;

/// Compass bearing (degrees clockwise from north) to math heading.
double bearing_to_heading(double bearing_deg);
/// Math heading to compass bearing in [0, 360).
double heading_to_bearing(double heading);

/// A pose as stored in scenario files: meters in the calibrated world frame
/// and a compass bearing. Kept in file units so documents round-trip exactly.
struct SitePose {
  double x = 0.0;
  double y = 0.0;
  double bearing_deg = 0.0;

  DirectedPoint to_directed() const;
  static SitePose from_directed(const DirectedPoint& p);

  friend bool operator==(const SitePose&, const SitePose&) = default;
};

struct Calibration {
  Vec2 p1_px;
  Vec2 p2_px;
  double distance_m = 0.0;
  double image_height_px = 0.0;

  friend bool operator==(const Calibration&, const Calibration&) = default;
};

/// Uniform scale between image pixels (y down, origin top-left) and world
/// meters (y up, origin at the image's bottom-left corner).
class PixelTransform {
 public:
  PixelTransform(double meters_per_pixel, double image_height_px);

  double meters_per_pixel() const { return scale_; }
  double image_height_px() const { return height_; }
  Vec2 to_world(Vec2 px) const;
  Vec2 to_pixel(Vec2 world) const;

 private:
  double scale_;
  double height_;
};

/// Throws DegenerateCalibration for coincident points or a non-positive
/// distance.
PixelTransform calibrate(Vec2 p1_px, Vec2 p2_px, double distance_m, double image_height_px);
PixelTransform calibrate(const Calibration& c);

struct EntryExitPair {
  std::string label;
  SitePose entry;
  SitePose exit;

  friend bool operator==(const EntryExitPair&, const EntryExitPair&) = default;
};

struct DumpPoint {
  std::string label;
  SitePose pose;  // bearing is the departure direction

  friend bool operator==(const DumpPoint&, const DumpPoint&) = default;
};

enum class Section { Inbound, Outbound };
std::string_view to_string(Section s);

struct Waypoint {
  std::string route_id;
  Section section = Section::Inbound;
  int index = 0;  // order within the section
  SitePose pose;

  friend bool operator==(const Waypoint&, const Waypoint&) = default;
};

struct ReverseOverride {
  std::string route_id;
  SitePose pose;

  friend bool operator==(const ReverseOverride&, const ReverseOverride&) = default;
};

/// Turntable hardware shared by every dump point, in catalogue units.
struct TurntableTemplate {
  double diameter = 15.0;
  double max_angular_speed_deg = 6.0;
  double angular_accel_deg = 1.2;

  TurntableSpec at(const DirectedPoint& dump) const;

  friend bool operator==(const TurntableTemplate&, const TurntableTemplate&) = default;
};

struct Scenario {
  int schema_version = kSchemaVersion;
  std::string name;
  std::string image_ref;
  std::optional<Calibration> calibration;
  TruckParams truck;
  TurntableTemplate turntable;
  OperatingSchedule schedule;
  std::vector<EntryExitPair> entry_exit_pairs;
  std::vector<DumpPoint> dump_points;
  std::vector<Waypoint> waypoints;
  std::vector<ReverseOverride> reverse_overrides;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

std::string make_route_id(const EntryExitPair& pair, const DumpPoint& dump);

/// Human-readable problems; empty when the scenario is usable.
std::vector<std::string> validate(const Scenario& scenario);
/// Throws ScenarioInvalid listing every problem found by validate().
void require_valid(const Scenario& scenario);

struct RouteError {
  ErrorCode code = ErrorCode::NoPathExists;
  std::string message;
};

struct RoutePlan {
  std::string route_id;
  std::string pair_label;
  std::string dump_label;
  Variant variant = Variant::Turntable;
  std::optional<TripPlan> trip;
  std::optional<RouteError> error;
};

/// Both variants for every pair × dump combination, pair-major, turntable
/// variant first. Planner failures are recorded per route.
std::vector<RoutePlan> build_routes(const Scenario& scenario);

struct VariantResult {
  Variant variant = Variant::Turntable;
  std::optional<TripPlan> trip;
  std::optional<CostBreakdown> cost;
  std::vector<PathSample> polyline;
  std::optional<RouteError> error;
};

struct RouteResult {
  std::string route_id;
  std::string pair_label;
  std::string dump_label;
  VariantResult turntable;
  VariantResult no_turntable;
  std::optional<Savings> savings;  // only when both variants solved
};

struct ResultSet {
  int schema_version = kSchemaVersion;
  double sample_step = 1.0;
  OperatingSchedule schedule;
  std::vector<RouteResult> routes;
  /// Mean per-trip savings over the routes that have savings, annualized.
  std::optional<Savings> mean_savings;
};

struct SolveOptions {
  double sample_step = 1.0;  // m between polyline samples
};

/// Throws ScenarioInvalid for an invalid scenario; route failures are
/// reported in the result instead.
ResultSet solve_scenario(const Scenario& scenario, const SolveOptions& options = {});

}  // namespace haulplan
