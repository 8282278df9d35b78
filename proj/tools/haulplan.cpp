// haulplan: plan haul routes at a crusher with and without turntables.
//
//   haulplan solve --scenario site.json [--out result.json] [--svg overlay.svg]
//                  [--sample-step 1.0]
//   haulplan validate --scenario site.json
//   haulplan serve [--port N]          (default: $HAULPLAN_PORT or 8787)
//
// Exit codes: 0 success, 1 I/O or usage failure, 2 scenario errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <httplib.h>

#include "haulplan/http_service.hpp"
#include "haulplan/scenario_json.hpp"
#include "haulplan/svg.hpp"

namespace {

constexpr int kExitIo = 1;
constexpr int kExitScenario = 2;

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  return static_cast<bool>(out);
}

int load(const std::string& path, haulplan::Scenario& scenario) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "haulplan: cannot read " << path << "\n";
    return kExitIo;
  }
  try {
    scenario = haulplan::parse_scenario(text);
    haulplan::require_valid(scenario);
  } catch (const haulplan::Error& e) {
    std::cerr << "haulplan: " << path << ": " << haulplan::to_string(e.code()) << ": " << e.what()
              << "\n";
    return kExitScenario;
  }
  return 0;
}

int run_solve(const std::string& scenario_path, const std::string& out_path,
              const std::string& svg_path, double sample_step) {
  haulplan::Scenario scenario;
  if (int rc = load(scenario_path, scenario)) return rc;

  haulplan::ResultSet result;
  try {
    result = haulplan::solve_scenario(scenario, {sample_step});
  } catch (const haulplan::Error& e) {
    std::cerr << "haulplan: " << haulplan::to_string(e.code()) << ": " << e.what() << "\n";
    return kExitScenario;
  }

  const std::string doc = haulplan::serialize_result(result);
  if (out_path.empty()) {
    std::cout << doc;
  } else if (!write_file(out_path, doc)) {
    std::cerr << "haulplan: cannot write " << out_path << "\n";
    return kExitIo;
  }
  if (!svg_path.empty() && !write_file(svg_path, haulplan::render_svg(scenario, result))) {
    std::cerr << "haulplan: cannot write " << svg_path << "\n";
    return kExitIo;
  }

  for (const auto& r : result.routes) {
    for (const auto* v : {&r.turntable, &r.no_turntable}) {
      if (v->error) {
        std::cerr << "haulplan: route " << r.route_id << " (" << haulplan::to_string(v->variant)
                  << "): " << haulplan::to_string(v->error->code) << ": " << v->error->message
                  << "\n";
      }
    }
  }
  return 0;
}

int run_validate(const std::string& scenario_path) {
  haulplan::Scenario scenario;
  if (int rc = load(scenario_path, scenario)) return rc;
  std::cout << scenario_path << ": ok (" << scenario.entry_exit_pairs.size() << " pairs, "
            << scenario.dump_points.size() << " dump points)\n";
  return 0;
}

int run_serve(int port, double sample_step) {
  httplib::Server server;
  haulplan::ScenarioStore store;
  haulplan::mount_routes(server, store, {sample_step});
  std::cerr << "haulplan: listening on 0.0.0.0:" << port << "\n";
  if (!server.listen("0.0.0.0", port)) {
    std::cerr << "haulplan: cannot listen on port " << port << "\n";
    return kExitIo;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Haul route planner for crushers with and without truck turntables"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string out_path;
  std::string svg_path;
  double sample_step = 1.0;

  auto* solve = app.add_subcommand("solve", "Plan every route and cost both variants");
  solve->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
  solve->add_option("--out", out_path, "Write the ResultSet JSON here (default: stdout)");
  solve->add_option("--svg", svg_path, "Write an SVG overlay of the paths");
  solve->add_option("--sample-step", sample_step, "Polyline sample spacing in meters")
      ->check(CLI::PositiveNumber);

  auto* validate = app.add_subcommand("validate", "Check a scenario file without solving");
  validate->add_option("--scenario", scenario_path, "Scenario JSON file")->required();

  int port = -1;
  auto* serve = app.add_subcommand("serve", "Run the HTTP API");
  serve->add_option("--port", port, "Listen port (default: $HAULPLAN_PORT or 8787)");
  serve->add_option("--sample-step", sample_step, "Polyline sample spacing in meters")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (solve->parsed()) return run_solve(scenario_path, out_path, svg_path, sample_step);
  if (validate->parsed()) return run_validate(scenario_path);
  if (serve->parsed()) {
    if (port < 0) {
      try {
        port = haulplan::port_from_env();
      } catch (const haulplan::Error& e) {
        std::cerr << "haulplan: " << e.what() << "\n";
        return kExitIo;
      }
    }
    return run_serve(port, sample_step);
  }
  return kExitIo;
}
