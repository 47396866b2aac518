#pragma once

#include <vector>

#include "dcrc.hpp"
#include "grid.hpp"

namespace dubcov {

// Evaluation quantities for a k-robot plan.
struct PlanReport {
  std::vector<double> tour_costs;
  double max_cost = 0.0;
  double ideal_cost = 0.0;          // single-route cost / k
  double utilization = 0.0;         // non-empty tours / k
  double coverage_fraction = 0.0;   // free pixels within s/2 of a traversed centerline
  double single_route_cost = 0.0;   // same instance solved for one robot
};

// single_cost / k; throws for k < 1.
double ideal_cost(double single_cost, int k);

double utilization(const std::vector<Tour>& tours, int k);

// Fraction of free pixel centers within s/2 of some traversed pass
// centerline; transitions and depot legs earn no credit. step bounds the
// sampling granularity and must not exceed the grid resolution.
double coverage_fraction(const std::vector<Tour>& tours, const OccupancyGrid& grid, double s,
                         double step);

PlanReport make_report(const std::vector<Tour>& tours, const OccupancyGrid& grid, double s,
                       int k, double single_route_cost);

}  // namespace dubcov
