// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "haulplan/cost.hpp"
#include "haulplan/dubins.hpp"
#include "haulplan/errors.hpp"
#include "haulplan/reverse.hpp"
#include "haulplan/scenario.hpp"
#include "haulplan/scenario_json.hpp"
#include "haulplan/svg.hpp"
#include "haulplan/turntable.hpp"
#include "oracles.hpp"

using namespace haulplan;

namespace {

constexpr double kR = 28.4;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Outcome dubins_optimality() {
  std::mt19937_64 rng(1001);
  const auto t0 = Clock::now();
  double planner_s = 0.0, worst_miss = 0.0, worst_ratio = 0.0;
  int over = 0;
  for (int i = 0; i < 1000; ++i) {
    const DirectedPoint s = oracle::random_pose(rng, 500.0);
    const DirectedPoint g = oracle::random_pose(rng, 500.0);
    const auto tp = Clock::now();
    const auto all = solve_csc(s, g, kR);
    const DubinsCandidate best = shortest_csc(s, g, kR);
    planner_s += seconds_since(tp);
    for (const auto& c : all) {
      const DirectedPoint end = integrate_path(c.plan);
      worst_miss = std::max({worst_miss, norm(end.position() - g.position()),
                             angle_distance(end.heading(), g.heading())});
    }
    const double grid = oracle::dubins_grid_min(s, g, kR);
    const double ratio = best.total_length / grid - 1.0;
    worst_ratio = std::max(worst_ratio, ratio);
    if (best.total_length > grid * 1.005) ++over;
  }
  const double total_s = seconds_since(t0);
  return {worst_miss <= 1e-6 && over == 0 && total_s < 60.0,
          fmt("1000 pairs, worst endpoint error %.2e, worst excess over grid %+.4f%%, "
              "%d over +0.5%%, planner %.3f s, total %.1f s",
              worst_miss, 100.0 * worst_ratio, over, planner_s, total_s)};
}

Outcome reverse_planner() {
  std::mt19937_64 rng(1002);
  int solved = 0, infeasible = 0, bad = 0;
  double worst_sweep = 0.0, worst_miss = 0.0, worst_gap = 0.0;
  while (solved < 500) {
    const DirectedPoint s = oracle::random_pose(rng, 500.0);
    const DirectedPoint d = oracle::random_pose(rng, 500.0);
    double oracle_form[4];
    double oracle_best = oracle::kInf;
    for (int f = 0; f < 4; ++f) {
      oracle_form[f] = oracle::reverse_grid(kReverseForms[f], s, d, kR).length;
      oracle_best = std::min(oracle_best, oracle_form[f]);
    }
    ReverseApproach got;
    try {
      got = solve_reverse_approach(s, d, kR);
    } catch (const Error& e) {
      ++infeasible;
      // Both must agree that no form fits.
      if (e.code() != ErrorCode::NoPathExists || std::isfinite(oracle_best)) ++bad;
      continue;
    }
    ++solved;
    worst_sweep = std::max(worst_sweep, std::abs(got.plan.segments[2].sweep - kHalfPi));
    const DirectedPoint end = integrate_path(got.plan);
    worst_miss = std::max({worst_miss, norm(end.position() - d.position()),
                           angle_distance(end.heading(), d.heading())});
    // The chosen form is the shortest feasible one: its length matches the
    // oracle's minimum over all forms.
    const double gap = std::abs(got.total_length - oracle_best);
    worst_gap = std::max(worst_gap, gap);
    if (gap > 0.05) ++bad;
  }
  const ReverseApproach constructed =
      solve_reverse_approach({106.8, 0.0, kPi}, {0.0, 0.0, 0.0}, kR);
  const double expected = 50.0 + kPi * kR;
  const double err = std::abs(constructed.total_length - expected);
  return {bad == 0 && worst_sweep <= 1e-9 && worst_miss < 1e-6 && err <= 1e-6,
          fmt("500 solved (%d infeasible, oracle agrees), 90 deg arc error %.1e rad, endpoint "
              "error %.1e, worst gap to 0.02 deg oracle %.4f m, %d disagreements; constructed "
              "case %.9f m (expected %.9f)",
              infeasible, worst_sweep, worst_miss, worst_gap, bad, constructed.total_length,
              expected)};
}

Outcome turntable_rules() {
  const double exit = 0.7;
  const bool table = admissible_entry(exit + kPi, exit) && admissible_entry(exit + kHalfPi, exit) &&
                     admissible_entry(exit - kHalfPi, exit) && !admissible_entry(exit, exit);
  const TurntableSpec tt;
  const double t180 = rotation_time(kPi, tt), t90 = rotation_time(kHalfPi, tt);
  auto numeric = [&](double a) {
    return oracle::integrate_motion(a, tt.max_angular_speed, tt.angular_accel, tt.angular_accel,
                                    true, true);
  };
  const double n180 = numeric(kPi), n90 = numeric(kHalfPi);
  const bool times = std::abs(t180 - 35.0) <= 1e-9 && std::abs(t90 - 20.0) <= 1e-9 &&
                     std::abs(n180 - 35.0) <= 0.01 && std::abs(n90 - 20.0) <= 0.01;
  return {table && times,
          fmt("truth table %s; rotation 180 deg %.12f s (1 ms integration %.4f), 90 deg %.12f s "
              "(%.4f)",
              table ? "exact" : "WRONG", t180, n180, t90, n90)};
}

Outcome kinematics() {
  const TruckParams p;
  const double t100 =
      motion_time(100.0, p.v_fwd_max, p.accel, p.decel, true, true).duration();
  const double t5 = motion_time(5.0, p.v_fwd_max, p.accel, p.decel, true, true).duration();
  const double n100 = oracle::integrate_motion(100.0, p.v_fwd_max, p.accel, p.decel, true, true);
  const double n5 = oracle::integrate_motion(5.0, p.v_fwd_max, p.accel, p.decel, true, true);
  const bool ok = std::abs(t100 - 39.549) <= 0.01 && std::abs(t100 - n100) <= 0.01 &&
                  std::abs(t5 - 5.055) <= 0.01 && std::abs(t5 - n5) <= 0.01;
  return {ok, fmt("100 m %.4f s (integration %.4f), 5 m %.4f s (integration %.4f)", t100, n100,
                  t5, n5)};
}

Outcome annualization() {
  const Savings s = annualize(50.25, 4.022, 4.78e-4, OperatingSchedule{});
  const double hours = s.annual_time / 3600.0;
  const bool ok = std::abs(hours / 1666.0 - 1.0) <= 0.01 &&
                  std::abs(s.annual_fuel / 480000.0 - 1.0) <= 0.01 &&
                  std::abs(s.annual_tyre_wear / 57.0 - 1.0) <= 0.02;
  return {ok, fmt("%.1f h (1666 +-1%%), %.0f L (480000 +-1%%), %.2f mm (57 +-2%%)", hours,
                  s.annual_fuel, s.annual_tyre_wear)};
}

Outcome demo_fixture() {
  const ResultSet r = solve_scenario(parse_scenario(read_file(HAULPLAN_DEMO_SCENARIO)));
  bool ok = r.routes.size() == 4;
  std::string detail;
  for (const auto& route : r.routes) {
    if (!route.savings) {
      ok = false;
      detail += route.route_id + " unsolved; ";
      continue;
    }
    const Savings& s = *route.savings;
    ok = ok && s.time > 0 && s.fuel > 0 && s.tyre_wear > 0 && s.time >= 10 && s.time <= 120 &&
         s.fuel >= 1 && s.fuel <= 8;
    detail += fmt("%s dt %.2f s df %.3f L dw %.2e mm; ", route.route_id.c_str(), s.time, s.fuel,
                  s.tyre_wear);
  }
  return {ok, detail.substr(0, detail.size() - 2)};
}

Outcome json_round_trip() {
  const std::string text = read_file(HAULPLAN_DEMO_SCENARIO);
  const Scenario s = parse_scenario(text);
  Scenario rich = s;
  rich.calibration = Calibration{{12.5, 40.25}, {812.75, 40.25}, 400.0, 900.0};
  rich.reverse_overrides.push_back({"right@front", {1.0 / 3.0, -47.123456789, 170.000001}});
  const std::string doc = serialize_scenario(rich);
  const bool lossless = parse_scenario(doc) == rich && serialize_scenario(parse_scenario(doc)) == doc;
  const std::string a = serialize_result(solve_scenario(parse_scenario(text)));
  const std::string b = serialize_result(solve_scenario(parse_scenario(text)));
  return {lossless && a == b, fmt("scenario round-trip %s; two solves %s (%zu bytes)",
                                  lossless ? "lossless" : "LOSSY",
                                  a == b ? "identical" : "DIFFER", a.size())};
}

Outcome cli_path() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / fmt("haulplan-acceptance-%d", static_cast<int>(::getpid()));
  fs::create_directories(dir);
  const fs::path out = dir / "result.json", svg = dir / "paths.svg";
  const std::string cmd = std::string("\"") + HAULPLAN_CLI + "\" solve --scenario \"" +
                          HAULPLAN_DEMO_SCENARIO + "\" --out \"" + out.string() + "\" --svg \"" +
                          svg.string() + "\"";
  const int rc = std::system(cmd.c_str());
  const int code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  std::size_t routes = 0;
  int polylines = 0;
  bool parsed = false;
  try {
    routes = Json::parse(read_file(out))["routes"].size();
    parsed = true;
  } catch (const std::exception&) {
  }
  const std::string drawing = read_file(svg);
  for (std::size_t at = drawing.find("<polyline "); at != std::string::npos;
       at = drawing.find("<polyline ", at + 1)) {
    ++polylines;
  }
  fs::remove_all(dir);
  return {code == 0 && parsed && routes == 4 && polylines == 8,
          fmt("exit %d, result JSON %s with %zu routes, SVG with %d polylines", code,
              parsed ? "parsed" : "MISSING", routes, polylines)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"dubins-optimality", dubins_optimality},
      {"reverse-planner", reverse_planner},
      {"turntable-rules", turntable_rules},
      {"kinematics", kinematics},
      {"annualization", annualization},
      {"demo-fixture-savings", demo_fixture},
      {"scenario-json-round-trip", json_round_trip},
      {"cli-solve", cli_path},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
