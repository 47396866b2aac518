#include "planner.hpp"

#include <json.hpp>

#include "bcd.hpp"

namespace dubcov {

namespace {
using nlohmann::ordered_json;
}

const char* algorithm_name(Algorithm a) { return a == Algorithm::Dcrc ? "dcrc" : "dcac"; }
const char* solver_name(RouteSolver s) {
  return s == RouteSolver::Exact ? "exact" : "heuristic";
}

PlanOutput plan(const OccupancyGrid& grid, Algorithm algorithm, const PlanConfig& config) {
  if (config.robots < 1) throw std::invalid_argument("robot count k must be >= 1");

  const std::vector<Cell> cells = bcd(grid);
  const std::vector<Pass> passes = gen_all_passes(cells, config.footprint, grid.height());
  if (passes.empty()) throw std::invalid_argument("map has no free space to cover");

  // Single-robot route doubles as the ideal-cost baseline and, for route
  // clustering, as the parent route to split. Area clustering only solves
  // per-cluster instances exactly, so its baseline may fall back to the
  // heuristic when the whole map exceeds the exact-solver guard.
  RouteSolver baseline_solver = config.solver;
  if (algorithm == Algorithm::Dcac && baseline_solver == RouteSolver::Exact &&
      static_cast<int>(passes.size()) > kExactSolverPassLimit)
    baseline_solver = RouteSolver::Heuristic;
  const DubinsGraph graph = DubinsGraph::build(passes, config.turning_radius);
  const Route route = solve_route(graph, baseline_solver, config.seed);
  const double single_cost = route_cost(route, grid.depot());

  PlanOutput out;
  if (algorithm == Algorithm::Dcrc) {
    out.tours = split_route(route, config.robots, grid.depot(), config.split);
  } else {
    const PassGraph pass_graph = build_pass_graph(passes, grid.resolution());
    out.tours = solve_clusters(passes, pass_graph, config, grid.depot());
  }

  out.report = make_report(out.tours, grid, config.footprint, config.robots, single_cost);
  out.mission = build_mission(out.tours, algorithm_name(algorithm), solver_name(config.solver),
                              config.robots, config.turning_radius, config.footprint,
                              config.seed, grid.depot());
  return out;
}

std::string report_to_json(const PlanReport& report, Algorithm algorithm,
                           const PlanConfig& config) {
  ordered_json j;
  j["algorithm"] = algorithm_name(algorithm);
  j["solver"] = solver_name(config.solver);
  j["robots"] = config.robots;
  j["turning_radius_m"] = config.turning_radius;
  j["footprint_m"] = config.footprint;
  j["seed"] = config.seed;
  j["tour_costs_m"] = report.tour_costs;
  j["max_cost_m"] = report.max_cost;
  j["ideal_cost_m"] = report.ideal_cost;
  j["utilization"] = report.utilization;
  j["coverage_fraction"] = report.coverage_fraction;
  j["single_route_cost_m"] = report.single_route_cost;
  return j.dump(2);
}

std::string decomposition_to_json(const OccupancyGrid& grid, double footprint) {
  const std::vector<Cell> cells = bcd(grid);

  ordered_json j;
  j["width"] = grid.width();
  j["height"] = grid.height();
  j["resolution_m"] = grid.resolution();
  j["free_area_m2"] = grid.free_area();
  j["cells"] = ordered_json::array();
  for (const Cell& cell : cells) {
    ordered_json cj;
    cj["id"] = cell.id;
    cj["x_min_m"] = cell.x_min();
    cj["x_max_m"] = cell.x_max();
    cj["columns"] = ordered_json::array();
    for (int col = cell.col_begin; col < cell.col_end; ++col) {
      cj["columns"].push_back({{"x_m", (col + 0.5) * grid.resolution()},
                               {"floor_m", cell.floor_at(col, grid.height())},
                               {"ceiling_m", cell.ceiling_at(col, grid.height())}});
    }
    cj["neighbors"] = cell.neighbors;
    j["cells"].push_back(std::move(cj));
  }

  if (footprint > 0.0) {
    const std::vector<Pass> passes = gen_all_passes(cells, footprint, grid.height());
    const PassGraph graph = build_pass_graph(passes, grid.resolution());
    j["passes"] = ordered_json::array();
    for (const Pass& p : passes) {
      j["passes"].push_back({{"id", p.id},
                             {"cell_id", p.cell_id},
                             {"center_x_m", p.center_x},
                             {"y_low_m", p.y_low},
                             {"y_high_m", p.y_high},
                             {"width_m", p.width}});
    }
    j["pass_graph"] = ordered_json::array();
    for (const PassGraphEdge& e : graph.edges)
      j["pass_graph"].push_back({{"u", e.u}, {"v", e.v}, {"cost_m", e.cost}});
  }
  return j.dump(2);
}

}  // namespace dubcov
