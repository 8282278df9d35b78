#include "haulplan/reverse.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "haulplan/dubins.hpp"
#include "haulplan/errors.hpp"

namespace haulplan {
namespace {

constexpr int kScanIntervals = 3600;
constexpr double kRootTolerance = 1e-12;

struct FormTurns {
  Turn first;
  Turn second;  // the 90° arc
  Turn reverse;
};

FormTurns turns_of(ReverseForm form) {
  switch (form) {
    case ReverseForm::LSL_R:
      return {Turn::Left, Turn::Left, Turn::Right};
    case ReverseForm::LSR_L:
      return {Turn::Left, Turn::Right, Turn::Left};
    case ReverseForm::RSL_R:
      return {Turn::Right, Turn::Left, Turn::Right};
    case ReverseForm::RSR_L:
      return {Turn::Right, Turn::Right, Turn::Left};
  }
  return {Turn::Left, Turn::Left, Turn::Right};
}

// Geometry of the approach for a given reverse sweep, worked backwards from
// the dump pose. `residual` is zero when the straight through the pre-turn
// pose is tangent to the start circle on the correct side.
struct Backsolve {
  DirectedPoint cusp;
  DirectedPoint pre_turn;
  double residual = 0.0;
};

class FormSolver {
 public:
  FormSolver(ReverseForm form, const DirectedPoint& start, const DirectedPoint& dump,
             double radius)
      : form_(form), turns_(turns_of(form)), start_(start), dump_(dump), radius_(radius) {
    k1_ = turn_sign(turns_.first);
    start_centre_ = start.position() + (k1_ * radius) * left_normal(start.heading());
  }

  Backsolve at(double reverse_sweep) const {
    // Driving the reverse arc forwards from the dump recovers the cusp.
    const DirectedPoint cusp =
        integrate_segment(dump_, PathSegment::arc(turns_.reverse, radius_, reverse_sweep));
    const DirectedPoint pre = integrate_segment(
        cusp, PathSegment::arc(turns_.second, radius_, kHalfPi, Travel::Reverse));
    const double residual =
        dot(start_centre_ - pre.position(), left_normal(pre.heading())) - k1_ * radius_;
    return {cusp, pre, residual};
  }

  std::optional<ReverseApproach> build(double reverse_sweep) const {
    const Backsolve b = at(reverse_sweep);
    const double theta = b.pre_turn.heading();
    const Vec2 tangent = start_centre_ - (k1_ * radius_) * left_normal(theta);
    double straight = dot(b.pre_turn.position() - tangent, heading_vector(theta));
    if (straight < -1e-9) return std::nullopt;
    if (straight < 0.0) straight = 0.0;
    double sweep1 = normalize_angle(k1_ * (theta - start_.heading()));
    if (kTwoPi - sweep1 < 1e-10) sweep1 = 0.0;

    ReverseApproach out;
    out.form = form_;
    out.plan.start = start_;
    out.plan.form_label = std::string(to_string(form_));
    out.plan.segments = {
        PathSegment::arc(turns_.first, radius_, sweep1),
        PathSegment::straight(straight),
        PathSegment::arc(turns_.second, radius_, kHalfPi),
        PathSegment::arc(turns_.reverse, radius_, reverse_sweep, Travel::Reverse),
    };
    out.reverse_point = b.cusp;
    out.forward_length = out.plan.length(Travel::Forward);
    out.reverse_length = out.plan.length(Travel::Reverse);
    out.total_length = out.forward_length + out.reverse_length;
    return out;
  }

 private:
  ReverseForm form_;
  FormTurns turns_;
  DirectedPoint start_;
  DirectedPoint dump_;
  double radius_;
  int k1_ = 1;
  Vec2 start_centre_;
};

double bisect(const FormSolver& solver, double lo, double hi, double f_lo) {
  while (hi - lo > kRootTolerance) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = solver.at(mid).residual;
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

void keep_shorter(std::optional<ReverseApproach>& best, std::optional<ReverseApproach> cand) {
  if (cand && (!best || cand->total_length < best->total_length)) best = std::move(cand);
}

}  // namespace

std::string_view to_string(ReverseForm form) {
  switch (form) {
    case ReverseForm::LSL_R:
      return "LSL|R";
    case ReverseForm::LSR_L:
      return "LSR|L";
    case ReverseForm::RSL_R:
      return "RSL|R";
    case ReverseForm::RSR_L:
      return "RSR|L";
  }
  return "?";
}

std::optional<ReverseApproach> solve_reverse_form(ReverseForm form, const DirectedPoint& start,
                                                  const DirectedPoint& dump, double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw Error(ErrorCode::InvalidArgument, "turning radius must be > 0");
  }
  const FormSolver solver(form, start, dump, radius);
  std::optional<ReverseApproach> best;

  const double step = kMaxReverseSweep / kScanIntervals;
  double prev_b = 0.0;
  double prev_f = solver.at(0.0).residual;
  if (prev_f == 0.0) keep_shorter(best, solver.build(0.0));
  for (int i = 1; i <= kScanIntervals; ++i) {
    const double b = i == kScanIntervals ? kMaxReverseSweep : i * step;
    const double f = solver.at(b).residual;
    if (f == 0.0) {
      keep_shorter(best, solver.build(b));
    } else if (prev_f != 0.0 && (f < 0.0) != (prev_f < 0.0)) {
      keep_shorter(best, solver.build(bisect(solver, prev_b, b, prev_f)));
    }
    prev_b = b;
    prev_f = f;
  }
  return best;
}

ReverseApproach solve_reverse_approach(const DirectedPoint& start, const DirectedPoint& dump,
                                       double radius) {
  std::optional<ReverseApproach> best;
  for (ReverseForm f : kReverseForms) keep_shorter(best, solve_reverse_form(f, start, dump, radius));
  if (!best) {
    throw Error(ErrorCode::NoPathExists, "no one-cusp approach reaches the dump pose");
  }
  return *best;
}

ReverseApproach replan_with_reverse_override(const DirectedPoint& start,
                                             const DirectedPoint& reverse_override,
                                             const DirectedPoint& dump, double radius) {
  const DubinsCandidate forward = shortest_csc(start, reverse_override, radius);
  const DubinsCandidate tail = shortest_csc(dump, reverse_override, radius);
  const PathPlan backing = traverse_backward(tail.plan);

  std::string tail_letters(to_string(tail.form));
  std::reverse(tail_letters.begin(), tail_letters.end());

  ReverseApproach out;
  out.overridden = true;
  out.plan.start = start;
  out.plan.form_label = std::string(to_string(forward.form)) + "|" + tail_letters;
  out.plan.segments = forward.plan.segments;
  out.plan.segments.insert(out.plan.segments.end(), backing.segments.begin(),
                           backing.segments.end());
  out.reverse_point = reverse_override;
  out.forward_length = forward.total_length;
  out.reverse_length = tail.total_length;
  out.total_length = out.forward_length + out.reverse_length;
  out.long_reverse_warning = out.reverse_length > kLongReverseWarning;
  return out;
}

}  // namespace haulplan
