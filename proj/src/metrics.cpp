#include "metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace dubcov {

double ideal_cost(double single_cost, int k) {
  if (k < 1) throw std::invalid_argument("robot count k must be >= 1");
  return single_cost / k;
}

double utilization(const std::vector<Tour>& tours, int k) {
  if (k < 1) throw std::invalid_argument("robot count k must be >= 1");
  int used = 0;
  for (const Tour& t : tours)
    if (!t.empty()) ++used;
  return static_cast<double>(used) / k;
}

double coverage_fraction(const std::vector<Tour>& tours, const OccupancyGrid& grid, double s,
                         double step) {
  if (!(step > 0.0) || step > grid.resolution() + 1e-12)
    throw std::invalid_argument("sampling step must be in (0, resolution]");

  struct Segment {
    Point a, b;
  };
  std::vector<Segment> centerlines;
  for (const Tour& tour : tours)
    for (const RouteStop& stop : tour.stops)
      centerlines.push_back({{stop.entry.x, stop.entry.y}, {stop.exit.x, stop.exit.y}});

  std::size_t free_total = 0;
  std::size_t covered = 0;
  const double reach = 0.5 * s + 1e-9;
  for (int row = 0; row < grid.height(); ++row) {
    for (int col = 0; col < grid.width(); ++col) {
      if (!grid.free_at(col, row)) continue;
      ++free_total;
      const Point c = grid.pixel_center(col, row);
      for (const Segment& seg : centerlines) {
        // Passes are vertical; cheap reject on the x distance.
        if (std::fabs(c.x - seg.a.x) > reach) continue;
        if (point_segment_distance(c, seg.a, seg.b) <= reach) {
          ++covered;
          break;
        }
      }
    }
  }
  if (free_total == 0) return 0.0;
  return static_cast<double>(covered) / static_cast<double>(free_total);
}

PlanReport make_report(const std::vector<Tour>& tours, const OccupancyGrid& grid, double s,
                       int k, double single_route_cost) {
  PlanReport report;
  report.tour_costs.reserve(tours.size());
  for (const Tour& t : tours) report.tour_costs.push_back(t.cost);
  report.max_cost =
      report.tour_costs.empty()
          ? 0.0
          : *std::max_element(report.tour_costs.begin(), report.tour_costs.end());
  report.ideal_cost = ideal_cost(single_route_cost, k);
  report.utilization = utilization(tours, k);
  report.coverage_fraction = coverage_fraction(tours, grid, s, grid.resolution());
  report.single_route_cost = single_route_cost;
  return report;
}

}  // namespace dubcov
