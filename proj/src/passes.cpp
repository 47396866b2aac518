#include "passes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dubcov {

namespace {

// Emits one pass per maximal column run whose free intervals share a
// common window; runs break where the running intersection would become
// empty (a blocking column).
void emit_strip_passes(const Cell& cell, double center_x, double s, int grid_height,
                       std::vector<Pass>& out) {
  const double res = cell.resolution;
  int c0 = static_cast<int>(std::floor((center_x - 0.5 * s) / res + 1e-9));
  int c1 = static_cast<int>(std::ceil((center_x + 0.5 * s) / res - 1e-9)) - 1;
  c0 = std::max(c0, cell.col_begin);
  c1 = std::min(c1, cell.col_end - 1);
  if (c0 > c1) {
    c0 = c1 = std::clamp(static_cast<int>(std::floor(center_x / res)), cell.col_begin,
                         cell.col_end - 1);
  }

  double lo = cell.floor_at(c0, grid_height);
  double hi = cell.ceiling_at(c0, grid_height);
  for (int col = c0 + 1; col <= c1 + 1; ++col) {
    bool close = col > c1;
    double nlo = 0.0, nhi = 0.0;
    if (!close) {
      nlo = std::max(lo, cell.floor_at(col, grid_height));
      nhi = std::min(hi, cell.ceiling_at(col, grid_height));
      close = !(nlo < nhi);
    }
    if (close) {
      Pass p;
      p.cell_id = cell.id;
      p.center_x = center_x;
      p.y_low = lo;
      p.y_high = hi;
      p.width = s;
      out.push_back(p);
      if (col <= c1) {
        lo = cell.floor_at(col, grid_height);
        hi = cell.ceiling_at(col, grid_height);
      }
    } else {
      lo = nlo;
      hi = nhi;
    }
  }
}

}  // namespace

std::vector<Pass> gen_passes(const Cell& cell, double s, int grid_height, int id_base) {
  if (!(s > 0.0)) throw std::invalid_argument("footprint s must be > 0");

  const double w = cell.x_max() - cell.x_min();
  const int count = std::max(1, static_cast<int>(std::ceil(w / s - 1e-12)));

  std::vector<Pass> passes;
  for (int i = 0; i < count; ++i) {
    double cx;
    if (count == 1) {
      cx = 0.5 * (cell.x_min() + cell.x_max());
    } else if (i == count - 1) {
      cx = cell.x_max() - 0.5 * s;  // clamp the final strip to the cell edge
    } else {
      cx = cell.x_min() + (i + 0.5) * s;
    }
    emit_strip_passes(cell, cx, s, grid_height, passes);
  }

  std::sort(passes.begin(), passes.end(), [](const Pass& a, const Pass& b) {
    if (a.center_x != b.center_x) return a.center_x < b.center_x;
    return a.y_low < b.y_low;
  });
  for (std::size_t i = 0; i < passes.size(); ++i) passes[i].id = id_base + static_cast<int>(i);
  return passes;
}

std::vector<Pass> gen_all_passes(const std::vector<Cell>& cells, double s, int grid_height) {
  std::vector<Pass> all;
  for (const Cell& cell : cells) {
    auto ps = gen_passes(cell, s, grid_height, static_cast<int>(all.size()));
    all.insert(all.end(), ps.begin(), ps.end());
  }
  return all;
}

PassGraph build_pass_graph(const std::vector<Pass>& passes, double resolution) {
  PassGraph g;
  g.vertex_count = static_cast<int>(passes.size());
  g.adjacency.resize(passes.size());

  const double x_tol = 0.5 * resolution;
  for (std::size_t i = 0; i < passes.size(); ++i) {
    for (std::size_t j = i + 1; j < passes.size(); ++j) {
      const Pass& a = passes[i];
      const Pass& b = passes[j];
      const double gap = std::max(a.strip_x_min(), b.strip_x_min()) -
                         std::min(a.strip_x_max(), b.strip_x_max());
      if (gap > x_tol) continue;
      const double y_overlap = std::min(a.y_high, b.y_high) - std::max(a.y_low, b.y_low);
      if (!(y_overlap > 1e-9)) continue;
      const double cost = distance(a.midpoint(), b.midpoint());
      g.edges.push_back({static_cast<int>(i), static_cast<int>(j), cost});
      g.adjacency[i].push_back({static_cast<int>(j), cost});
      g.adjacency[j].push_back({static_cast<int>(i), cost});
    }
  }
  return g;
}

}  // namespace dubcov
