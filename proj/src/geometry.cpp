#include "haulplan/geometry.hpp"

#include <cmath>

#include "haulplan/errors.hpp"

namespace haulplan {

double normalize_angle(double angle) {
  if (!std::isfinite(angle)) {
    throw Error(ErrorCode::InvalidArgument, "angle must be finite");
  }
  double r = std::fmod(angle, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod of a tiny negative value can round up to exactly 2π.
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double angle_distance(double a, double b) {
  const double d = normalize_angle(a - b);
  return d > kPi ? kTwoPi - d : d;
}

double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
double norm(Vec2 v) { return std::hypot(v.x, v.y); }
Vec2 heading_vector(double heading) { return {std::cos(heading), std::sin(heading)}; }
Vec2 left_normal(double heading) { return {-std::sin(heading), std::cos(heading)}; }

DirectedPoint::DirectedPoint(double x, double y, double heading)
    : x_(x), y_(y), heading_(normalize_angle(heading)) {
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw Error(ErrorCode::InvalidArgument, "pose coordinates must be finite");
  }
}

DirectedPoint::DirectedPoint(Vec2 position, double heading)
    : DirectedPoint(position.x, position.y, heading) {}

char turn_letter(Turn t) { return t == Turn::Left ? 'L' : 'R'; }

PathSegment PathSegment::straight(double length, Travel direction) {
  PathSegment s;
  s.kind = SegmentKind::Straight;
  s.direction = direction;
  s.length = length;
  return s;
}

PathSegment PathSegment::arc(Turn turn, double radius, double sweep, Travel direction) {
  PathSegment s;
  s.kind = SegmentKind::Arc;
  s.direction = direction;
  s.turn = turn;
  s.radius = radius;
  s.sweep = sweep;
  s.length = radius * sweep;
  return s;
}

double PathSegment::heading_change() const {
  if (kind == SegmentKind::Straight) return 0.0;
  return turn_sign(turn) * travel_sign(direction) * sweep;
}

void check_segment(const PathSegment& segment) {
  if (!(segment.length >= 0.0) || !std::isfinite(segment.length)) {
    throw Error(ErrorCode::InvalidArgument, "segment length must be finite and >= 0");
  }
  if (segment.kind == SegmentKind::Arc) {
    if (!(segment.radius > 0.0) || !(segment.sweep >= 0.0)) {
      throw Error(ErrorCode::InvalidArgument, "arc needs radius > 0 and sweep >= 0");
    }
    if (std::abs(segment.radius * segment.sweep - segment.length) > 1e-9) {
      throw Error(ErrorCode::InvalidArgument, "arc length must equal radius * sweep");
    }
  }
}

double PathPlan::length() const {
  double total = 0.0;
  for (const auto& s : segments) total += s.length;
  return total;
}

double PathPlan::length(Travel direction) const {
  double total = 0.0;
  for (const auto& s : segments) {
    if (s.direction == direction) total += s.length;
  }
  return total;
}

DirectedPoint advance(const DirectedPoint& pose, const PathSegment& segment, double s) {
  const double h = pose.heading();
  const int dir = travel_sign(segment.direction);
  if (segment.kind == SegmentKind::Straight) {
    const Vec2 p = pose.position() + (dir * s) * heading_vector(h);
    return {p, h};
  }
  const int k = turn_sign(segment.turn);
  const double r = segment.radius;
  const double delta = k * dir * (s / r);
  const double h1 = h + delta;
  // Rotation about the turning centre p + k·r·n(h).
  const Vec2 p{pose.x() + k * r * (std::sin(h1) - std::sin(h)),
               pose.y() - k * r * (std::cos(h1) - std::cos(h))};
  return {p, h1};
}

DirectedPoint integrate_segment(const DirectedPoint& pose, const PathSegment& segment) {
  check_segment(segment);
  if (segment.kind == SegmentKind::Arc) {
    // Integrate by sweep directly so arc endpoints do not pick up the
    // rounding of length / radius.
    const double h = pose.heading();
    const int k = turn_sign(segment.turn);
    const double r = segment.radius;
    const double h1 = h + segment.heading_change();
    const Vec2 p{pose.x() + k * r * (std::sin(h1) - std::sin(h)),
                 pose.y() - k * r * (std::cos(h1) - std::cos(h))};
    return {p, h1};
  }
  return advance(pose, segment, segment.length);
}

DirectedPoint integrate_path(const PathPlan& plan) {
  DirectedPoint pose = plan.start;
  for (const auto& s : plan.segments) pose = integrate_segment(pose, s);
  return pose;
}

PathPlan traverse_backward(const PathPlan& plan) {
  PathPlan out;
  out.start = integrate_path(plan);
  out.form_label = plan.form_label;
  out.segments.reserve(plan.segments.size());
  for (auto it = plan.segments.rbegin(); it != plan.segments.rend(); ++it) {
    PathSegment s = *it;
    s.direction = s.direction == Travel::Forward ? Travel::Reverse : Travel::Forward;
    out.segments.push_back(s);
  }
  return out;
}

PathPlan concatenate(const std::vector<PathPlan>& plans) {
  if (plans.empty()) {
    throw Error(ErrorCode::InvalidArgument, "cannot concatenate an empty list of plans");
  }
  PathPlan out;
  out.start = plans.front().start;
  out.form_label = plans.front().form_label;
  for (const auto& p : plans) {
    out.segments.insert(out.segments.end(), p.segments.begin(), p.segments.end());
  }
  return out;
}

std::vector<PathSample> sample_path(const PathPlan& plan, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw Error(ErrorCode::InvalidArgument, "sample step must be > 0");
  }
  std::vector<PathSample> out;
  DirectedPoint pose = plan.start;
  Travel first_dir = Travel::Forward;
  for (const auto& s : plan.segments) {
    if (s.length > 0.0) {
      first_dir = s.direction;
      break;
    }
  }
  out.push_back({pose.x(), pose.y(), pose.heading(), first_dir});
  for (const auto& seg : plan.segments) {
    check_segment(seg);
    if (seg.length == 0.0) continue;
    const auto n = static_cast<long>(std::ceil(seg.length / step - 1e-12));
    const long intervals = n < 1 ? 1 : n;
    for (long i = 1; i < intervals; ++i) {
      const double s = seg.length * static_cast<double>(i) / static_cast<double>(intervals);
      const DirectedPoint p = advance(pose, seg, s);
      out.push_back({p.x(), p.y(), p.heading(), seg.direction});
    }
    pose = integrate_segment(pose, seg);
    out.push_back({pose.x(), pose.y(), pose.heading(), seg.direction});
  }
  return out;
}

}  // namespace haulplan
