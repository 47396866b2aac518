#pragma once

#include <vector>

#include "bcd.hpp"
#include "geometry.hpp"

namespace dubcov {

// Axis-aligned coverage strip of width s with a vertical centerline. The
// centerline spans the free interval common to every raster column the
// strip covers inside its cell.
struct Pass {
  int id = -1;
  int cell_id = -1;
  double center_x = 0.0;
  double y_low = 0.0;
  double y_high = 0.0;
  double width = 0.0;

  double length() const { return y_high - y_low; }
  Point midpoint() const { return {center_x, 0.5 * (y_low + y_high)}; }
  double strip_x_min() const { return center_x - 0.5 * width; }
  double strip_x_max() const { return center_x + 0.5 * width; }
};

struct PassGraphEdge {
  int u = 0;
  int v = 0;
  double cost = 0.0;
};

// Undirected strip-adjacency graph; vertex i is passes[i].
struct PassGraph {
  int vertex_count = 0;
  std::vector<PassGraphEdge> edges;
  std::vector<std::vector<std::pair<int, double>>> adjacency;
};

// Splits one cell into passes of width s, ordered by (center_x, y_low).
// Ids are assigned sequentially starting at id_base. Throws
// std::invalid_argument for s <= 0.
std::vector<Pass> gen_passes(const Cell& cell, double s, int grid_height, int id_base = 0);

// Convenience: passes over all cells with globally sequential ids.
std::vector<Pass> gen_all_passes(const std::vector<Cell>& cells, double s, int grid_height);

// Two passes are connected iff their strips touch or overlap in x (within
// one pixel) and their y-extents overlap.
PassGraph build_pass_graph(const std::vector<Pass>& passes, double resolution);

}  // namespace dubcov
