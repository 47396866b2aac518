#pragma once

#include <utility>
#include <vector>

#include "grid.hpp"

namespace dubcov {

// Obstacle-free cell produced by the vertical sweep. Spans pixel columns
// [col_begin, col_end); each column holds a single contiguous free run of
// raster rows (inclusive, row 0 at the top).
struct Cell {
  int id = -1;
  int col_begin = 0;
  int col_end = 0;
  std::vector<std::pair<int, int>> rows;  // per column: {top_row, bottom_row}
  std::vector<int> neighbors;             // sorted cell ids sharing a vertical boundary
  double resolution = 1.0;

  double x_min() const { return col_begin * resolution; }
  double x_max() const { return col_end * resolution; }
  int span_count() const { return col_end - col_begin; }

  // World-frame lower/upper boundary of the free span in column `col`.
  double floor_at(int col, int grid_height) const {
    return (grid_height - rows[col - col_begin].second - 1) * resolution;
  }
  double ceiling_at(int col, int grid_height) const {
    return (grid_height - rows[col - col_begin].first) * resolution;
  }
};

// Tallies of sweep events, exposed for verification.
struct SweepEvents {
  int new_component_cells = 0;  // cells opened with no predecessor slice
  int split_created_cells = 0;  // cells opened because a predecessor branched
  int merge_created_cells = 0;  // cells opened by fusing several predecessors
};

std::vector<Cell> bcd(const OccupancyGrid& grid);
std::vector<Cell> bcd(const OccupancyGrid& grid, SweepEvents* events);

}  // namespace dubcov
