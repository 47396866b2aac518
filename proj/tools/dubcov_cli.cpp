// Batch planner front-end over the dubcov C API: decompose a map, plan
// coverage tours, or recompute statistics from an existing mission file.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dubcov.h"

namespace {

struct StringDeleter {
  void operator()(char* s) const { dubcov_string_free(s); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

struct GridDeleter {
  void operator()(dubcov_grid* g) const { dubcov_grid_free(g); }
};
using GridHandle = std::unique_ptr<dubcov_grid, GridDeleter>;

struct PlanDeleter {
  void operator()(dubcov_plan* p) const { dubcov_plan_free(p); }
};
using PlanHandle = std::unique_ptr<dubcov_plan, PlanDeleter>;

[[noreturn]] void die(dubcov_status status) {
  std::fprintf(stderr, "dubcov: %s: %s\n", dubcov_status_name(status), dubcov_last_error());
  std::exit(1);
}

[[noreturn]] void die(const std::string& message) {
  std::fprintf(stderr, "dubcov: %s\n", message.c_str());
  std::exit(1);
}

void write_file(const std::string& path, const char* content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) die("cannot write " + path);
  out << content;
  if (!out) die("write failed for " + path);
  std::printf("wrote %s\n", path.c_str());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

GridHandle load_grid(const std::string& map_path, const std::string& meta_path) {
  dubcov_grid* grid = nullptr;
  const dubcov_status status = dubcov_grid_load(map_path.c_str(), meta_path.c_str(), &grid);
  if (status != DUBCOV_OK) die(status);
  return GridHandle(grid);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dubcov: complete-coverage tours for teams of Dubins vehicles"};
  app.require_subcommand(1);

  std::string map_path, meta_path, out_dir = ".", mission_path;
  int robots = 1;
  double radius = 5.0, footprint = 4.5;
  std::string algorithm = "dcrc", solver = "heuristic";
  unsigned long long seed = 0;
  bool emit_svg = false, line4_depot = false;

  auto add_map_flags = [&](CLI::App* cmd) {
    cmd->add_option("--map", map_path, "occupancy map (PGM or ASCII grid)")->required();
    cmd->add_option("--meta", meta_path, "JSON sidecar (resolution_m, depot, free_threshold)")
        ->required();
  };

  CLI::App* decompose = app.add_subcommand("decompose", "boustrophedon cells (and passes)");
  add_map_flags(decompose);
  decompose->add_option("--footprint", footprint, "sensor footprint in meters");
  bool with_passes = false;
  decompose->add_flag("--passes", with_passes, "also emit passes and the pass graph");
  decompose->add_option("--out", out_dir, "output directory");
  decompose->add_flag("--svg", emit_svg, "also write an SVG overlay");

  CLI::App* plan = app.add_subcommand("plan", "plan k coverage tours");
  add_map_flags(plan);
  plan->add_option("--robots", robots, "number of robots k")->required();
  plan->add_option("--radius", radius, "minimum turning radius in meters");
  plan->add_option("--footprint", footprint, "sensor footprint in meters");
  plan->add_option("--algorithm", algorithm, "dcrc or dcac")
      ->check(CLI::IsMember({"dcrc", "dcac"}));
  plan->add_option("--solver", solver, "exact or heuristic")
      ->check(CLI::IsMember({"exact", "heuristic"}));
  plan->add_option("--seed", seed, "heuristic solver seed");
  plan->add_option("--out", out_dir, "output directory");
  plan->add_flag("--svg", emit_svg, "also write an SVG rendering");
  plan->add_flag("--line4-depot", line4_depot,
                 "measure the split bound c_max from the depot instead of the first route vertex");

  CLI::App* stats = app.add_subcommand("stats", "recompute costs from a mission file");
  stats->add_option("--mission", mission_path, "mission JSON produced by plan")->required();

  CLI11_PARSE(app, argc, argv);

  if (decompose->parsed()) {
    GridHandle grid = load_grid(map_path, meta_path);
    const double fp = with_passes ? footprint : 0.0;
    char* json = nullptr;
    dubcov_status status = dubcov_decompose_json(grid.get(), fp, &json);
    if (status != DUBCOV_OK) die(status);
    ApiString json_owned(json);
    write_file(out_dir + "/cells.json", json_owned.get());
    if (emit_svg) {
      char* svg = nullptr;
      status = dubcov_decompose_svg(grid.get(), fp, &svg);
      if (status != DUBCOV_OK) die(status);
      ApiString svg_owned(svg);
      write_file(out_dir + "/cells.svg", svg_owned.get());
    }
    return 0;
  }

  if (plan->parsed()) {
    GridHandle grid = load_grid(map_path, meta_path);
    dubcov_plan_params params{};
    params.robots = robots;
    params.turning_radius_m = radius;
    params.footprint_m = footprint;
    params.algorithm = algorithm == "dcrc" ? DUBCOV_ALGORITHM_DCRC : DUBCOV_ALGORITHM_DCAC;
    params.solver = solver == "exact" ? DUBCOV_SOLVER_EXACT : DUBCOV_SOLVER_HEURISTIC;
    params.seed = seed;
    params.split_cmax_from_depot = line4_depot ? 1 : 0;

    dubcov_plan* raw = nullptr;
    dubcov_status status = dubcov_plan_create(grid.get(), &params, &raw);
    if (status != DUBCOV_OK) die(status);
    PlanHandle plan_handle(raw);

    char* mission = nullptr;
    status = dubcov_plan_mission_json(plan_handle.get(), &mission);
    if (status != DUBCOV_OK) die(status);
    ApiString mission_owned(mission);
    write_file(out_dir + "/mission.json", mission_owned.get());

    char* report = nullptr;
    status = dubcov_plan_report_json(plan_handle.get(), &report);
    if (status != DUBCOV_OK) die(status);
    ApiString report_owned(report);
    write_file(out_dir + "/report.json", report_owned.get());

    if (emit_svg) {
      char* svg = nullptr;
      status = dubcov_plan_svg(plan_handle.get(), &svg);
      if (status != DUBCOV_OK) die(status);
      ApiString svg_owned(svg);
      write_file(out_dir + "/plan.svg", svg_owned.get());
    }

    std::printf("%s k=%d max_cost=%.2f utilization=%.2f coverage=%.4f\n", algorithm.c_str(),
                robots, dubcov_plan_max_cost(plan_handle.get()),
                dubcov_plan_utilization(plan_handle.get()),
                dubcov_plan_coverage_fraction(plan_handle.get()));
    return 0;
  }

  // stats
  const std::string mission_text = read_file(mission_path);
  char* report = nullptr;
  const dubcov_status status = dubcov_mission_stats_json(mission_text.c_str(), &report);
  if (status != DUBCOV_OK) die(status);
  ApiString report_owned(report);
  std::printf("%s\n", report_owned.get());
  return 0;
}
