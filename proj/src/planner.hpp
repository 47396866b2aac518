#pragma once

#include <string>
#include <vector>

#include "dcac.hpp"
#include "dcrc.hpp"
#include "metrics.hpp"
#include "mission.hpp"

namespace dubcov {

enum class Algorithm { Dcrc, Dcac };

const char* algorithm_name(Algorithm a);
const char* solver_name(RouteSolver s);

struct PlanOutput {
  std::vector<Tour> tours;
  PlanReport report;
  Mission mission;
};

// Runs the selected pipeline and assembles the report (including the
// single-robot baseline cost) and the mission file.
PlanOutput plan(const OccupancyGrid& grid, Algorithm algorithm, const PlanConfig& config);

std::string report_to_json(const PlanReport& report, Algorithm algorithm,
                           const PlanConfig& config);

// Cells (and with footprint > 0, passes and the pass graph) as JSON.
std::string decomposition_to_json(const OccupancyGrid& grid, double footprint);

}  // namespace dubcov
