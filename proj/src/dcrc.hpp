#pragma once

#include <cstdint>
#include <vector>

#include "dcs.hpp"
#include "grid.hpp"

namespace dubcov {

// One robot's mission: a contiguous segment of a parent coverage route
// plus Euclidean depot legs. May be empty when k exceeds the pass count.
struct Tour {
  int robot_id = -1;
  std::vector<RouteStop> stops;
  std::vector<DubinsPath> transitions;  // between consecutive stops
  double cost = 0.0;

  bool empty() const { return stops.empty(); }
};

struct SplitOptions {
  // The per-vertex round-trip bound c_max measures travel from the route's
  // first vertex; this switches it to the depot instead.
  bool measure_cmax_from_depot = false;
};

// Intermediate quantities of the split, exposed for verification.
struct SplitDiagnostics {
  double route_cost = 0.0;  // c(R)
  double c_max = 0.0;
};

// Cuts the route into k contiguous, order-preserving tours. Tour i grows
// while its cost stays within (c(R) - 2*c_max)*i/k + c_max (1-based i);
// vertices left when the budgets run out go to the last tour.
std::vector<Tour> split_route(const Route& route, int k, const Point& v_s,
                              const SplitOptions& options = {},
                              SplitDiagnostics* diagnostics = nullptr);

struct PlanConfig {
  int robots = 1;
  double turning_radius = 1.0;
  double footprint = 1.0;
  RouteSolver solver = RouteSolver::Heuristic;
  std::uint64_t seed = 0;
  SplitOptions split;
};

// Full route-clustering pipeline: decompose, generate passes, solve the
// single-robot route, split into k tours.
std::vector<Tour> dcrc(const OccupancyGrid& grid, const PlanConfig& config);

// Seg-of-route tour with the line-8 cost (depot legs to midpoints).
Tour make_tour(int robot_id, std::vector<RouteStop> stops, std::vector<DubinsPath> transitions,
               const Point& v_s);

double tour_cost(const Tour& tour, const Point& v_s);

}  // namespace dubcov
