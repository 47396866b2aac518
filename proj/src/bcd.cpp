#include "bcd.hpp"

#include <algorithm>

namespace dubcov {

namespace {

struct Slice {
  int top = 0;
  int bottom = 0;  // inclusive
  int cell = -1;
};

bool overlaps(const Slice& a, const Slice& b) {
  return a.top <= b.bottom && b.top <= a.bottom;
}

std::vector<Slice> column_slices(const OccupancyGrid& grid, int col) {
  std::vector<Slice> slices;
  int row = 0;
  const int h = grid.height();
  while (row < h) {
    while (row < h && !grid.free_at(col, row)) ++row;
    if (row >= h) break;
    const int top = row;
    while (row < h && grid.free_at(col, row)) ++row;
    slices.push_back(Slice{top, row - 1, -1});
  }
  return slices;
}

}  // namespace

std::vector<Cell> bcd(const OccupancyGrid& grid) { return bcd(grid, nullptr); }

std::vector<Cell> bcd(const OccupancyGrid& grid, SweepEvents* events) {
  std::vector<Cell> cells;
  std::vector<std::vector<int>> neighbor_sets;

  auto open_cell = [&](int col, const Slice& s) -> int {
    const int id = static_cast<int>(cells.size());
    Cell c;
    c.id = id;
    c.col_begin = col;
    c.col_end = col + 1;
    c.rows.push_back({s.top, s.bottom});
    c.resolution = grid.resolution();
    cells.push_back(std::move(c));
    neighbor_sets.emplace_back();
    return id;
  };
  auto extend_cell = [&](int id, const Slice& s) {
    cells[id].rows.push_back({s.top, s.bottom});
    cells[id].col_end += 1;
  };
  auto link = [&](int a, int b) {
    if (a == b || a < 0 || b < 0) return;
    neighbor_sets[a].push_back(b);
    neighbor_sets[b].push_back(a);
  };

  std::vector<Slice> prev;
  for (int col = 0; col < grid.width(); ++col) {
    std::vector<Slice> cur = column_slices(grid, col);

    // Predecessor/successor counts under 4-connectivity.
    std::vector<int> pred_count(cur.size(), 0);
    std::vector<int> succ_count(prev.size(), 0);
    std::vector<int> sole_pred(cur.size(), -1);
    for (std::size_t i = 0; i < prev.size(); ++i) {
      for (std::size_t j = 0; j < cur.size(); ++j) {
        if (overlaps(prev[i], cur[j])) {
          ++succ_count[i];
          ++pred_count[j];
          sole_pred[j] = static_cast<int>(i);
        }
      }
    }

    for (std::size_t j = 0; j < cur.size(); ++j) {
      if (pred_count[j] == 1 && succ_count[sole_pred[j]] == 1) {
        // Continuation of the predecessor's cell.
        cur[j].cell = prev[sole_pred[j]].cell;
        extend_cell(cur[j].cell, cur[j]);
      } else {
        cur[j].cell = open_cell(col, cur[j]);
        if (events) {
          if (pred_count[j] == 0)
            ++events->new_component_cells;
          else if (pred_count[j] == 1)
            ++events->split_created_cells;
          else
            ++events->merge_created_cells;
        }
      }
    }

    // Adjacency between distinct cells meeting across this column boundary.
    for (std::size_t i = 0; i < prev.size(); ++i)
      for (std::size_t j = 0; j < cur.size(); ++j)
        if (overlaps(prev[i], cur[j])) link(prev[i].cell, cur[j].cell);

    prev = std::move(cur);
  }

  for (std::size_t id = 0; id < cells.size(); ++id) {
    auto& n = neighbor_sets[id];
    std::sort(n.begin(), n.end());
    n.erase(std::unique(n.begin(), n.end()), n.end());
    cells[id].neighbors = std::move(n);
  }
  return cells;
}

}  // namespace dubcov
