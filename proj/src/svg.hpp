#pragma once

#include <string>
#include <vector>

#include "bcd.hpp"
#include "grid.hpp"
#include "mission.hpp"
#include "passes.hpp"

namespace dubcov {

// Map plus decomposition overlay: one tinted polygon per cell, optional
// pass centerlines and pass-graph edges.
std::string render_decomposition_svg(const OccupancyGrid& grid, const std::vector<Cell>& cells,
                                     const std::vector<Pass>* passes, const PassGraph* graph);

// Map plus per-robot programs. Covering strips are drawn beneath the
// transition curves; transitions that cross occupied pixels are flagged in
// red so plans can be audited.
std::string render_mission_svg(const OccupancyGrid& grid, const Mission& mission);

}  // namespace dubcov
