#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "haulplan/geometry.hpp"

namespace haulplan {

/// Arc-straight-arc forms. Declaration order is the tie-break order.
enum class CscForm { LSL, LSR, RSL, RSR };
inline constexpr std::array<CscForm, 4> kCscForms = {CscForm::LSL, CscForm::LSR,
                                                     CscForm::RSL, CscForm::RSR};

std::string_view to_string(CscForm form);
Turn first_turn(CscForm form);
Turn last_turn(CscForm form);

struct DubinsCandidate {
  CscForm form = CscForm::LSL;
  PathPlan plan;  // arc, straight, arc; all Forward, possibly zero-length
  double total_length = 0.0;
};

/// Builds the given CSC form between two directed points, or nothing when
/// the form does not exist (cross tangents of overlapping circles).
std::optional<DubinsCandidate> solve_csc_form(CscForm form, const DirectedPoint& start,
                                              const DirectedPoint& goal, double radius);

/// Every existing CSC form between two directed points, in form order.
/// Three-arc forms are deliberately not generated, so for goals closer than
/// about 4 radii the result may be longer than the true Dubins optimum.
std::vector<DubinsCandidate> solve_csc(const DirectedPoint& start, const DirectedPoint& goal,
                                       double radius);

/// Shortest element of solve_csc; ties resolve to the earlier form.
/// Throws NoPathExists when no form exists.
DubinsCandidate shortest_csc(const DirectedPoint& start, const DirectedPoint& goal,
                             double radius);

enum class CsForm { LS, RS };
std::string_view to_string(CsForm form);

struct PointTargetCandidate {
  CsForm form = CsForm::LS;
  PathPlan plan;  // arc then straight, both Forward
  double entry_heading = 0.0;
  double total_length = 0.0;
};

/// Arc-then-straight paths from a pose to a position with free final heading.
/// Throws TargetInsideTurningCircle when neither side admits a tangent.
std::vector<PointTargetCandidate> solve_point_target(const DirectedPoint& start, Vec2 target,
                                                     double radius);

}  // namespace haulplan
