#include "dcrc.hpp"

#include <cmath>
#include <stdexcept>

#include "passes.hpp"

namespace dubcov {

double tour_cost(const Tour& tour, const Point& v_s) {
  if (tour.stops.empty()) return 0.0;
  double cost = distance(v_s, tour.stops.front().midpoint) +
                distance(tour.stops.back().midpoint, v_s);
  for (const RouteStop& s : tour.stops) cost += s.pass_length;
  for (const DubinsPath& t : tour.transitions) cost += t.total_length;
  return cost;
}

Tour make_tour(int robot_id, std::vector<RouteStop> stops, std::vector<DubinsPath> transitions,
               const Point& v_s) {
  Tour tour;
  tour.robot_id = robot_id;
  tour.stops = std::move(stops);
  tour.transitions = std::move(transitions);
  tour.cost = tour_cost(tour, v_s);
  return tour;
}

std::vector<Tour> split_route(const Route& route, int k, const Point& v_s,
                              const SplitOptions& options, SplitDiagnostics* diagnostics) {
  if (k < 1) throw std::invalid_argument("robot count k must be >= 1");
  if (route.stops.empty()) throw std::invalid_argument("route must be non-empty");

  const std::size_t n = route.stops.size();
  const double total = route_cost(route, v_s);

  // c_max = max_i c(v_1, v_i) + w(v_i, v_{i+1}) + c(v_{i+1}, v_1), travel
  // legs Euclidean between pass midpoints.
  const Point anchor = options.measure_cmax_from_depot ? v_s : route.stops.front().midpoint;
  double c_max = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double term = distance(anchor, route.stops[i].midpoint) +
                        route.transitions[i].total_length +
                        distance(route.stops[i + 1].midpoint, anchor);
    c_max = std::max(c_max, term);
  }
  if (diagnostics) {
    diagnostics->route_cost = total;
    diagnostics->c_max = c_max;
  }

  std::vector<Tour> tours;
  tours.reserve(k);
  std::size_t next = 0;
  for (int i = 1; i <= k; ++i) {
    const double budget = (total - 2.0 * c_max) * static_cast<double>(i) / k + c_max;
    std::size_t begin = next;
    Tour tour;
    tour.robot_id = i - 1;
    while (next < n && tour_cost(tour, v_s) <= budget) {
      tour.stops.push_back(route.stops[next]);
      if (next > begin) tour.transitions.push_back(route.transitions[next - 1]);
      ++next;
    }
    tour.cost = tour_cost(tour, v_s);
    tours.push_back(std::move(tour));
  }

  // Budgets exhausted early: the remainder rides with the last robot.
  while (next < n) {
    Tour& last = tours.back();
    if (!last.stops.empty()) last.transitions.push_back(route.transitions[next - 1]);
    last.stops.push_back(route.stops[next]);
    ++next;
  }
  tours.back().cost = tour_cost(tours.back(), v_s);

  return tours;
}

std::vector<Tour> dcrc(const OccupancyGrid& grid, const PlanConfig& config) {
  if (config.robots < 1) throw std::invalid_argument("robot count k must be >= 1");

  const std::vector<Cell> cells = bcd(grid);
  const std::vector<Pass> passes = gen_all_passes(cells, config.footprint, grid.height());
  if (passes.empty()) throw std::invalid_argument("map has no free space to cover");

  const DubinsGraph graph = DubinsGraph::build(passes, config.turning_radius);
  const Route route = solve_route(graph, config.solver, config.seed);
  return split_route(route, config.robots, grid.depot(), config.split);
}

}  // namespace dubcov
