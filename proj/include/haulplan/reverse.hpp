#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "haulplan/geometry.hpp"

namespace haulplan {

/// One-cusp approach forms: a forward arc-straight-arc whose second arc
/// turns exactly 90°, a cusp, then one reverse arc onto the dump pose.
/// The reverse arc letter is relative to the way the truck faces.
enum class ReverseForm { LSL_R, LSR_L, RSL_R, RSR_L };
inline constexpr std::array<ReverseForm, 4> kReverseForms = {
    ReverseForm::LSL_R, ReverseForm::LSR_L, ReverseForm::RSL_R, ReverseForm::RSR_L};

std::string_view to_string(ReverseForm form);

/// Reversing further than this is flagged as implausible on override plans.
inline constexpr double kLongReverseWarning = 200.0;
/// The reverse arc may sweep at most half a circle.
inline constexpr double kMaxReverseSweep = kPi;

struct ReverseApproach {
  /// Set for optimizer output; empty for user-overridden plans.
  std::optional<ReverseForm> form;
  PathPlan plan;
  DirectedPoint reverse_point;  // the cusp pose
  double total_length = 0.0;
  double forward_length = 0.0;
  double reverse_length = 0.0;
  bool overridden = false;
  bool long_reverse_warning = false;
};

/// Solves a single form. Returns the shortest root with a nonnegative
/// straight and reverse sweep in [0, π], or nothing.
std::optional<ReverseApproach> solve_reverse_form(ReverseForm form, const DirectedPoint& start,
                                                  const DirectedPoint& dump, double radius);

/// Shortest approach over all four forms (ties go to the earlier form).
/// `dump` is the tipping pose: the truck faces its departure direction with
/// its rear to the crusher. Throws NoPathExists if no form is feasible.
ReverseApproach solve_reverse_approach(const DirectedPoint& start, const DirectedPoint& dump,
                                       double radius);

/// Forward shortest CSC to a user-chosen reverse pose, then the shortest CSC
/// from the dump to that pose driven backwards. The 90° rule does not apply.
ReverseApproach replan_with_reverse_override(const DirectedPoint& start,
                                             const DirectedPoint& reverse_override,
                                             const DirectedPoint& dump, double radius);

}  // namespace haulplan
