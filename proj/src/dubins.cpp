#include "haulplan/dubins.hpp"

#include <cmath>
#include <string>

#include "haulplan/errors.hpp"

namespace haulplan {
namespace {

// Centres closer than this are treated as coincident.
constexpr double kCoincident = 1e-9;
// Sweeps within this of a full turn are snapped to zero.
constexpr double kFullTurnSnap = 1e-10;

void require_radius(double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw Error(ErrorCode::InvalidArgument, "turning radius must be > 0");
  }
}

double sweep_to(double from, double to, int k) {
  const double s = normalize_angle(k * (to - from));
  return kTwoPi - s < kFullTurnSnap ? 0.0 : s;
}

Vec2 turn_centre(const DirectedPoint& p, int k, double radius) {
  return p.position() + (k * radius) * left_normal(p.heading());
}

}  // namespace

std::string_view to_string(CscForm form) {
  switch (form) {
    case CscForm::LSL:
      return "LSL";
    case CscForm::LSR:
      return "LSR";
    case CscForm::RSL:
      return "RSL";
    case CscForm::RSR:
      return "RSR";
  }
  return "?";
}

Turn first_turn(CscForm form) {
  return form == CscForm::LSL || form == CscForm::LSR ? Turn::Left : Turn::Right;
}

Turn last_turn(CscForm form) {
  return form == CscForm::LSL || form == CscForm::RSL ? Turn::Left : Turn::Right;
}

std::string_view to_string(CsForm form) { return form == CsForm::LS ? "LS" : "RS"; }

std::optional<DubinsCandidate> solve_csc_form(CscForm form, const DirectedPoint& start,
                                              const DirectedPoint& goal, double radius) {
  require_radius(radius);
  const Turn t1 = first_turn(form);
  const Turn t2 = last_turn(form);
  const int k1 = turn_sign(t1);
  const int k2 = turn_sign(t2);

  const Vec2 c1 = turn_centre(start, k1, radius);
  const Vec2 c2 = turn_centre(goal, k2, radius);
  const Vec2 d = c2 - c1;
  const double dist = norm(d);

  double straight = 0.0;
  double theta = 0.0;
  double sweep1 = 0.0;
  double sweep2 = 0.0;
  if (k1 == k2) {
    if (dist < kCoincident) {
      // Same circle: turn all the way on the first arc.
      sweep1 = sweep_to(start.heading(), goal.heading(), k1);
      sweep2 = 0.0;
    } else {
      straight = dist;
      theta = std::atan2(d.y, d.x);
      sweep1 = sweep_to(start.heading(), theta, k1);
      sweep2 = sweep_to(theta, goal.heading(), k2);
    }
  } else {
    // Inner tangent: c2 - c1 = L·u(θ) + (k2 - k1)·r·n(θ).
    const double gap = 2.0 * radius;
    if (dist < gap * (1.0 - 1e-12)) return std::nullopt;
    straight = dist > gap ? std::sqrt(dist * dist - gap * gap) : 0.0;
    theta = std::atan2(d.y, d.x) - std::atan2((k2 - k1) * radius, straight);
    sweep1 = sweep_to(start.heading(), theta, k1);
    sweep2 = sweep_to(theta, goal.heading(), k2);
  }

  DubinsCandidate c;
  c.form = form;
  c.plan.start = start;
  c.plan.form_label = std::string(to_string(form));
  c.plan.segments = {PathSegment::arc(t1, radius, sweep1), PathSegment::straight(straight),
                     PathSegment::arc(t2, radius, sweep2)};
  c.total_length = c.plan.length();
  return c;
}

std::vector<DubinsCandidate> solve_csc(const DirectedPoint& start, const DirectedPoint& goal,
                                       double radius) {
  std::vector<DubinsCandidate> out;
  for (CscForm f : kCscForms) {
    if (auto c = solve_csc_form(f, start, goal, radius)) out.push_back(std::move(*c));
  }
  return out;
}

DubinsCandidate shortest_csc(const DirectedPoint& start, const DirectedPoint& goal,
                             double radius) {
  auto all = solve_csc(start, goal, radius);
  if (all.empty()) {
    throw Error(ErrorCode::NoPathExists, "no arc-straight-arc path between the poses");
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < all.size(); ++i) {
    if (all[i].total_length < all[best].total_length) best = i;
  }
  return all[best];
}

std::vector<PointTargetCandidate> solve_point_target(const DirectedPoint& start, Vec2 target,
                                                     double radius) {
  require_radius(radius);
  std::vector<PointTargetCandidate> out;
  for (Turn t : {Turn::Left, Turn::Right}) {
    const int k = turn_sign(t);
    const Vec2 c = turn_centre(start, k, radius);
    const Vec2 d = target - c;
    const double dist = norm(d);
    if (dist < radius * (1.0 - 1e-12)) continue;
    // target - c = L·u(θ) - k·r·n(θ)
    const double straight = dist > radius ? std::sqrt(dist * dist - radius * radius) : 0.0;
    const double theta = std::atan2(d.y, d.x) + std::atan2(k * radius, straight);
    const double sweep = sweep_to(start.heading(), theta, k);

    PointTargetCandidate cand;
    cand.form = t == Turn::Left ? CsForm::LS : CsForm::RS;
    cand.plan.start = start;
    cand.plan.form_label = std::string(to_string(cand.form));
    cand.plan.segments = {PathSegment::arc(t, radius, sweep), PathSegment::straight(straight)};
    cand.entry_heading = normalize_angle(start.heading() + k * sweep);
    cand.total_length = cand.plan.length();
    out.push_back(std::move(cand));
  }
  if (out.empty()) {
    throw Error(ErrorCode::TargetInsideTurningCircle,
                "target lies inside both turning circles of the start pose");
  }
  return out;
}

}  // namespace haulplan
