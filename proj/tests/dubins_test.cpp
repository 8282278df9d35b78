#include "haulplan/dubins.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "haulplan/errors.hpp"
#include "oracles.hpp"

namespace haulplan {
namespace {

constexpr double kR = 28.4;

const DubinsCandidate* find_form(const std::vector<DubinsCandidate>& all, CscForm f) {
  for (const auto& c : all) {
    if (c.form == f) return &c;
  }
  return nullptr;
}

void expect_reaches(const PathPlan& plan, const DirectedPoint& goal) {
  const DirectedPoint end = integrate_path(plan);
  EXPECT_LE(norm(end.position() - goal.position()), 1e-6);
  EXPECT_LE(angle_distance(end.heading(), goal.heading()), 1e-9);
}

DirectedPoint mirror(const DirectedPoint& p) { return {p.x(), -p.y(), -p.heading()}; }

CscForm mirror(CscForm f) {
  switch (f) {
    case CscForm::LSL:
      return CscForm::RSR;
    case CscForm::LSR:
      return CscForm::RSL;
    case CscForm::RSL:
      return CscForm::LSR;
    case CscForm::RSR:
      return CscForm::LSL;
  }
  return f;
}

TEST(SolveCsc, CollinearAlignedPoses) {
  const auto all = solve_csc({0, 0, 0}, {100, 0, 0}, kR);
  const auto* lsl = find_form(all, CscForm::LSL);
  ASSERT_NE(lsl, nullptr);
  EXPECT_EQ(lsl->plan.segments[0].sweep, 0.0);
  EXPECT_NEAR(lsl->plan.segments[1].length, 100.0, 1e-9);
  EXPECT_EQ(lsl->plan.segments[2].sweep, 0.0);
  EXPECT_NEAR(lsl->total_length, 100.0, 1e-9);
  const auto best = shortest_csc({0, 0, 0}, {100, 0, 0}, kR);
  EXPECT_EQ(best.form, CscForm::LSL);
  EXPECT_NEAR(best.total_length, 100.0, 1e-9);
}

TEST(SolveCsc, HalfCircleDegenerate) {
  const auto all = solve_csc({0, 0, 0}, {0, 56.8, kPi}, kR);
  const auto* lsl = find_form(all, CscForm::LSL);
  ASSERT_NE(lsl, nullptr);
  EXPECT_NEAR(lsl->plan.segments[0].sweep, kPi, 1e-12);
  EXPECT_NEAR(lsl->plan.segments[1].length, 0.0, 1e-9);
  EXPECT_NEAR(lsl->plan.segments[2].sweep, 0.0, 1e-12);
  EXPECT_NEAR(lsl->total_length, kPi * kR, 1e-9);
  EXPECT_NEAR(lsl->total_length, 89.221, 1e-3);
}

TEST(SolveCsc, MatchesGridOracleAtSixtyForty) {
  // Frozen from oracle::dubins_grid (0.05° first-arc grid).
  const DirectedPoint start(0, 0, 0), goal(60, 40, kHalfPi);
  const std::pair<CscForm, double> expected[] = {{CscForm::LSL, 78.272464},
                                                 {CscForm::LSR, 249.197540},
                                                 {CscForm::RSL, 256.421576},
                                                 {CscForm::RSR, 424.046936}};
  const auto all = solve_csc(start, goal, kR);
  ASSERT_EQ(all.size(), 4u);
  for (const auto& [form, len] : expected) {
    const auto* c = find_form(all, form);
    ASSERT_NE(c, nullptr) << to_string(form);
    EXPECT_NEAR(c->total_length, len, 0.01) << to_string(form);
    EXPECT_LE(c->total_length, len * 1.005);
    expect_reaches(c->plan, goal);
  }
  EXPECT_EQ(shortest_csc(start, goal, kR).form, CscForm::LSL);
}

TEST(SolveCsc, CrossFormsOmittedWhenCirclesOverlap) {
  // Goal one meter to the left facing backwards: left circles nearly
  // coincide and the right/left cross circles sit well inside 2r.
  const auto all = solve_csc({0, 0, 0}, {10, 0, kPi}, kR);
  EXPECT_EQ(find_form(all, CscForm::LSR), nullptr);
  EXPECT_EQ(find_form(all, CscForm::RSL), nullptr);
  EXPECT_NE(find_form(all, CscForm::LSL), nullptr);
}

TEST(SolveCsc, TangentCrossCirclesGiveZeroStraight) {
  // Start left circle at (0, r); goal right circle at (0, 3r): touching.
  const DirectedPoint goal(-kR, 3 * kR, kHalfPi);
  const auto c = solve_csc_form(CscForm::LSR, {0, 0, 0}, goal, kR);
  ASSERT_TRUE(c.has_value());
  EXPECT_NEAR(c->plan.segments[1].length, 0.0, 1e-6);
  expect_reaches(c->plan, goal);
}

TEST(ShortestCsc, IdentityIsZeroLength) {
  const auto best = shortest_csc({5, 5, 1.0}, {5, 5, 1.0}, kR);
  EXPECT_EQ(best.form, CscForm::LSL);
  EXPECT_EQ(best.total_length, 0.0);
}

TEST(ShortestCsc, RejectsBadRadius) {
  EXPECT_THROW(shortest_csc({0, 0, 0}, {10, 0, 0}, 0.0), Error);
  EXPECT_THROW(solve_point_target({0, 0, 0}, {10, 0}, -1.0), Error);
}

TEST(ShortestCsc, TiesResolveToFormOrder) {
  // Straight ahead: LSL and RSR are both the pure straight.
  const auto best = shortest_csc({0, 0, 0}, {300, 0, 0}, kR);
  EXPECT_EQ(best.form, CscForm::LSL);
}

TEST(DubinsProperty, EndpointsCurvatureAndBounds) {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 2000; ++i) {
    const DirectedPoint s = oracle::random_pose(rng, 500.0);
    const DirectedPoint g = oracle::random_pose(rng, 500.0);
    const auto all = solve_csc(s, g, kR);
    ASSERT_FALSE(all.empty());
    for (const auto& c : all) {
      ASSERT_EQ(c.plan.segments.size(), 3u);
      for (const auto& seg : c.plan.segments) {
        ASSERT_EQ(seg.direction, Travel::Forward);
        if (seg.kind == SegmentKind::Arc) {
          ASSERT_EQ(seg.radius, kR);
          ASSERT_GE(seg.sweep, 0.0);
          ASSERT_LT(seg.sweep, kTwoPi);
        }
      }
      ASSERT_NEAR(c.total_length, c.plan.length(), 1e-12);
      const DirectedPoint end = integrate_path(c.plan);
      ASSERT_LE(norm(end.position() - g.position()), 1e-6);
      ASSERT_LE(angle_distance(end.heading(), g.heading()), 1e-9);
    }
    const auto best = shortest_csc(s, g, kR);
    for (const auto& c : all) ASSERT_LE(best.total_length, c.total_length);
    ASSERT_LE(best.total_length, norm(g.position() - s.position()) + 4 * kPi * kR);
  }
}

TEST(DubinsProperty, MirrorSymmetry) {
  std::mt19937_64 rng(102);
  for (int i = 0; i < 1000; ++i) {
    const DirectedPoint s = oracle::random_pose(rng, 500.0);
    const DirectedPoint g = oracle::random_pose(rng, 500.0);
    const auto all = solve_csc(s, g, kR);
    const auto mirrored = solve_csc(mirror(s), mirror(g), kR);
    ASSERT_EQ(all.size(), mirrored.size());
    for (const auto& c : all) {
      const auto* m = find_form(mirrored, mirror(c.form));
      ASSERT_NE(m, nullptr);
      ASSERT_NEAR(m->total_length, c.total_length, 1e-9);
    }
  }
}

TEST(DubinsProperty, RigidMotionInvariance) {
  std::mt19937_64 rng(103);
  std::uniform_real_distribution<double> phi_dist(-kPi, kPi), shift(-1000.0, 1000.0);
  for (int i = 0; i < 1000; ++i) {
    const DirectedPoint s = oracle::random_pose(rng, 500.0);
    const DirectedPoint g = oracle::random_pose(rng, 500.0);
    const double phi = phi_dist(rng), tx = shift(rng), ty = shift(rng);
    const double c = std::cos(phi), sn = std::sin(phi);
    auto move = [&](const DirectedPoint& p) {
      return DirectedPoint(c * p.x() - sn * p.y() + tx, sn * p.x() + c * p.y() + ty,
                           p.heading() + phi);
    };
    const auto all = solve_csc(s, g, kR);
    const auto moved = solve_csc(move(s), move(g), kR);
    ASSERT_EQ(all.size(), moved.size());
    for (std::size_t k = 0; k < all.size(); ++k) {
      ASSERT_EQ(all[k].form, moved[k].form);
      // Sweeps near 0 / 2π can flip by a full turn under rounding.
      const double d = std::abs(all[k].total_length - moved[k].total_length);
      ASSERT_TRUE(d < 1e-9 || std::abs(d - kTwoPi * kR) < 1e-6) << d;
    }
  }
}

TEST(SolvePointTarget, DeadAhead) {
  const auto all = solve_point_target({0, 0, 0}, {50, 0}, kR);
  ASSERT_FALSE(all.empty());
  const auto& ls = all.front();
  EXPECT_EQ(ls.form, CsForm::LS);
  EXPECT_EQ(ls.plan.segments[0].sweep, 0.0);
  EXPECT_NEAR(ls.plan.segments[1].length, 50.0, 1e-9);
  EXPECT_LE(angle_distance(ls.entry_heading, 0.0), 1e-12);
}

TEST(SolvePointTarget, AntipodeOfLeftCircle) {
  const auto all = solve_point_target({0, 0, 0}, {0, 56.8}, kR);
  ASSERT_FALSE(all.empty());
  const auto& ls = all.front();
  EXPECT_EQ(ls.form, CsForm::LS);
  EXPECT_NEAR(ls.plan.segments[0].sweep, kPi, 1e-9);
  EXPECT_NEAR(ls.plan.segments[1].length, 0.0, 1e-9);
  EXPECT_NEAR(ls.entry_heading, kPi, 1e-9);
}

TEST(SolvePointTarget, MatchesSweepGridOracle) {
  // Frozen from oracle::point_target_grid (0.01° sweep grid, 0.02 m accept).
  const DirectedPoint start(0, 0, 0);
  const auto all = solve_point_target(start, {40, 70}, kR);
  ASSERT_EQ(all.size(), 2u);
  const auto& ls = all[0];
  const auto& rs = all[1];
  EXPECT_EQ(ls.form, CsForm::LS);
  EXPECT_NEAR(rad_to_deg(ls.plan.segments[0].sweep), 75.58, 0.05);
  EXPECT_NEAR(rad_to_deg(ls.entry_heading), 75.58, 0.05);
  EXPECT_NEAR(ls.total_length, 87.71357, 0.05);
  EXPECT_EQ(rs.form, CsForm::RS);
  EXPECT_NEAR(rad_to_deg(rs.plan.segments[0].sweep), 307.62, 0.05);
  EXPECT_NEAR(rad_to_deg(rs.entry_heading), 52.38, 0.05);
  EXPECT_NEAR(rs.total_length, 254.83629, 0.05);
  for (const auto& c : all) {
    EXPECT_LE(norm(integrate_path(c.plan).position() - Vec2{40, 70}), 1e-6);
  }
}

TEST(SolvePointTarget, TargetInsideOneCircleLeavesOtherSide) {
  // (0, 20) is inside the left circle centred at (0, 28.4).
  const auto all = solve_point_target({0, 0, 0}, {0, 20}, kR);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0].form, CsForm::RS);
  EXPECT_LE(norm(integrate_path(all[0].plan).position() - Vec2{0, 20}), 1e-6);
}

TEST(SolvePointTargetProperty, AgreesWithGridOracle) {
  std::mt19937_64 rng(104);
  std::uniform_real_distribution<double> off(-100.0, 100.0);
  int compared = 0;
  for (int i = 0; i < 200; ++i) {
    const DirectedPoint s = oracle::random_pose(rng, 200.0);
    const Vec2 target{s.x() + off(rng), s.y() + off(rng)};
    for (const auto& c : solve_point_target(s, target, kR)) {
      ASSERT_LE(norm(integrate_path(c.plan).position() - target), 1e-6);
      const Turn t = c.form == CsForm::LS ? Turn::Left : Turn::Right;
      const auto hit = oracle::point_target_grid(t, s, target, kR);
      if (!std::isfinite(hit.sweep)) continue;
      ++compared;
      // The accept band of 0.02 m spans 0.02 / L radians of sweep.
      const double straight = c.plan.segments[1].length;
      const double window = 0.02 / std::max(straight, 0.02) + deg_to_rad(0.02);
      ASSERT_NEAR(hit.sweep, c.plan.segments[0].sweep, window);
      ASSERT_NEAR(hit.length, c.total_length, kR * window + 0.05);
    }
  }
  EXPECT_GT(compared, 300);
}

}  // namespace
}  // namespace haulplan
