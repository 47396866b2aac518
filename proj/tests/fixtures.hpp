#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "grid.hpp"

namespace dubcov::testing {

// Builds a grid from '.'/'#' art; rows top-down as drawn.
inline OccupancyGrid grid_from_ascii(const std::string& art, double resolution = 1.0,
                                     Point depot = {0.0, 0.0}) {
  GridMeta meta;
  meta.resolution_m = resolution;
  meta.depot = depot;
  return OccupancyGrid::parse(art, meta);
}

inline OccupancyGrid uniform_grid(int width, int height, bool free, double resolution = 1.0,
                                  Point depot = {0.0, 0.0}) {
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(width) * height, free ? 1 : 0);
  return OccupancyGrid(width, height, resolution, depot, std::move(cells));
}

// Free rectangle with randomly placed rectangular and disc obstacles until
// roughly the requested occupied fraction is reached.
inline OccupancyGrid random_obstacle_grid(int width, int height, double density,
                                          std::uint64_t seed, double resolution = 1.0,
                                          Point depot = {0.0, 0.0}) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(width) * height, 1);
  const auto target = static_cast<std::size_t>(density * width * height);
  std::size_t occupied = 0;
  std::uniform_int_distribution<int> cx(0, width - 1), cy(0, height - 1), sz(1, std::max(2, width / 8));
  int guard = 0;
  while (occupied < target && ++guard < 10000) {
    const int x0 = cx(rng), y0 = cy(rng);
    const int w = sz(rng), h = sz(rng);
    const bool disc = (rng() & 1) != 0;
    for (int r = y0; r < std::min(height, y0 + h); ++r) {
      for (int c = x0; c < std::min(width, x0 + w); ++c) {
        if (disc) {
          const double dx = c - x0 - 0.5 * w, dy = r - y0 - 0.5 * h;
          if (dx * dx / (0.25 * w * w + 1e-9) + dy * dy / (0.25 * h * h + 1e-9) > 1.0) continue;
        }
        auto& px = cells[static_cast<std::size_t>(r) * width + c];
        if (px) {
          px = 0;
          ++occupied;
        }
      }
    }
  }
  return OccupancyGrid(width, height, resolution, depot, std::move(cells));
}

// Lake-like blob: union of discs along a jittered loop, free inside.
inline OccupancyGrid blob_grid(int size, std::uint64_t seed, double resolution = 1.0,
                               Point depot = {0.0, 0.0}) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(size) * size, 0);
  std::uniform_real_distribution<double> jitter(0.6, 1.0);
  const double cx = size / 2.0, cy = size / 2.0;
  const int arms = 14;
  std::vector<double> radii(arms);
  for (double& r : radii) r = jitter(rng) * 0.45 * size;
  for (int row = 0; row < size; ++row) {
    for (int col = 0; col < size; ++col) {
      const double dx = col + 0.5 - cx, dy = row + 0.5 - cy;
      const double angle = std::atan2(dy, dx) + kPi;
      const double t = angle / kTwoPi * arms;
      const int a0 = static_cast<int>(t) % arms;
      const int a1 = (a0 + 1) % arms;
      const double frac = t - static_cast<int>(t);
      const double limit = radii[a0] * (1.0 - frac) + radii[a1] * frac;
      if (std::hypot(dx, dy) < limit) cells[static_cast<std::size_t>(row) * size + col] = 1;
    }
  }
  return OccupancyGrid(size, size, resolution, depot, std::move(cells));
}

// Free pixels grouped by 4-connectivity; returns component id per pixel
// (-1 for occupied) and the component count.
inline std::pair<std::vector<int>, int> flood_components(const OccupancyGrid& grid) {
  const int w = grid.width(), h = grid.height();
  std::vector<int> comp(static_cast<std::size_t>(w) * h, -1);
  int count = 0;
  std::vector<std::pair<int, int>> stack;
  for (int row = 0; row < h; ++row) {
    for (int col = 0; col < w; ++col) {
      if (!grid.free_at(col, row) || comp[static_cast<std::size_t>(row) * w + col] >= 0) continue;
      stack.push_back({col, row});
      comp[static_cast<std::size_t>(row) * w + col] = count;
      while (!stack.empty()) {
        auto [c, r] = stack.back();
        stack.pop_back();
        const int dc[4] = {1, -1, 0, 0};
        const int dr[4] = {0, 0, 1, -1};
        for (int d = 0; d < 4; ++d) {
          const int nc = c + dc[d], nr = r + dr[d];
          if (!grid.in_bounds(nc, nr) || !grid.free_at(nc, nr)) continue;
          auto& slot = comp[static_cast<std::size_t>(nr) * w + nc];
          if (slot >= 0) continue;
          slot = count;
          stack.push_back({nc, nr});
        }
      }
      ++count;
    }
  }
  return {comp, count};
}

}  // namespace dubcov::testing
