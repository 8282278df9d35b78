#pragma once

#include <numbers>
#include <string>
#include <vector>

namespace haulplan {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kHalfPi = 0.5 * std::numbers::pi;

/// Reduces a finite angle to [0, 2π). Throws InvalidArgument otherwise.
double normalize_angle(double angle);

/// Smallest absolute difference between two headings, in [0, π].
double angle_distance(double a, double b);

inline double deg_to_rad(double deg) { return deg * (kPi / 180.0); }
inline double rad_to_deg(double rad) { return rad * (180.0 / kPi); }

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

double dot(Vec2 a, Vec2 b);
double cross(Vec2 a, Vec2 b);
double norm(Vec2 v);
/// Unit vector along a heading.
Vec2 heading_vector(double heading);
/// Unit vector 90° counterclockwise of a heading (towards the left of a
/// vehicle facing that heading).
Vec2 left_normal(double heading);

/// A planar pose in meters with a counterclockwise heading from +x.
/// The heading is always held in [0, 2π) and coordinates are finite.
class DirectedPoint {
 public:
  DirectedPoint() = default;
  DirectedPoint(double x, double y, double heading);
  DirectedPoint(Vec2 position, double heading);

  double x() const { return x_; }
  double y() const { return y_; }
  double heading() const { return heading_; }
  Vec2 position() const { return {x_, y_}; }

  friend bool operator==(const DirectedPoint&, const DirectedPoint&) = default;

 private:
  double x_ = 0.0;
  double y_ = 0.0;
  double heading_ = 0.0;
};

enum class SegmentKind { Arc, Straight };
enum class Travel { Forward, Reverse };
/// Turn side relative to the direction the vehicle faces, not the direction
/// of travel.
enum class Turn { Left, Right };

inline int turn_sign(Turn t) { return t == Turn::Left ? 1 : -1; }
inline int travel_sign(Travel d) { return d == Travel::Forward ? 1 : -1; }
char turn_letter(Turn t);

struct PathSegment {
  SegmentKind kind = SegmentKind::Straight;
  Travel direction = Travel::Forward;
  double length = 0.0;
  // Arc-only fields; ignored for straights.
  Turn turn = Turn::Left;
  double radius = 0.0;
  double sweep = 0.0;

  static PathSegment straight(double length, Travel direction = Travel::Forward);
  static PathSegment arc(Turn turn, double radius, double sweep,
                         Travel direction = Travel::Forward);

  /// Net heading change produced by traversing the whole segment.
  double heading_change() const;

  friend bool operator==(const PathSegment&, const PathSegment&) = default;
};

/// Throws InvalidArgument if the segment violates its invariants.
void check_segment(const PathSegment& segment);

struct PathPlan {
  DirectedPoint start;
  std::vector<PathSegment> segments;
  std::string form_label;

  double length() const;
  double length(Travel direction) const;
};

/// Pose after travelling `s` meters (0 ≤ s ≤ length) along a segment.
DirectedPoint advance(const DirectedPoint& pose, const PathSegment& segment, double s);
DirectedPoint integrate_segment(const DirectedPoint& pose, const PathSegment& segment);
DirectedPoint integrate_path(const PathPlan& plan);

/// The same route driven in the opposite sense: it starts where `plan` ends,
/// visits the segments in reverse order with the travel direction flipped,
/// and ends at `plan.start`.
PathPlan traverse_backward(const PathPlan& plan);

/// Concatenates plans that chain end to start. The label is taken from the
/// first plan. Throws InvalidArgument if the list is empty.
PathPlan concatenate(const std::vector<PathPlan>& plans);

struct PathSample {
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;
  Travel direction = Travel::Forward;
};

/// Points along the plan no more than `step` apart in arclength. The first
/// sample is the start pose and the last is integrate_path(plan); segment
/// boundaries (including cusps) are always sampled.
std::vector<PathSample> sample_path(const PathPlan& plan, double step);

}  // namespace haulplan
