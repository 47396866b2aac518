#include <doctest.h>

#include <set>

#include "bcd.hpp"
#include "fixtures.hpp"

using namespace dubcov;
using namespace dubcov::testing;

namespace {

// Pixel partition check: every free pixel in exactly one cell, occupied in
// none, each cell column a single contiguous interval.
void check_partition(const OccupancyGrid& grid, const std::vector<Cell>& cells) {
  std::vector<int> owner(static_cast<std::size_t>(grid.width()) * grid.height(), -1);
  for (const Cell& cell : cells) {
    REQUIRE(cell.col_begin < cell.col_end);
    REQUIRE(cell.rows.size() == static_cast<std::size_t>(cell.span_count()));
    for (int col = cell.col_begin; col < cell.col_end; ++col) {
      const auto [top, bottom] = cell.rows[col - cell.col_begin];
      REQUIRE(top <= bottom);
      CHECK(cell.floor_at(col, grid.height()) < cell.ceiling_at(col, grid.height()));
      for (int row = top; row <= bottom; ++row) {
        auto& slot = owner[static_cast<std::size_t>(row) * grid.width() + col];
        CHECK(slot == -1);  // interior-disjoint
        slot = cell.id;
        CHECK(grid.free_at(col, row));
      }
    }
  }
  for (int row = 0; row < grid.height(); ++row)
    for (int col = 0; col < grid.width(); ++col)
      CHECK((owner[static_cast<std::size_t>(row) * grid.width() + col] >= 0) ==
            grid.free_at(col, row));
}

void check_adjacency_symmetric(const std::vector<Cell>& cells) {
  for (const Cell& cell : cells) {
    for (const int n : cell.neighbors) {
      REQUIRE(n >= 0);
      REQUIRE(n < static_cast<int>(cells.size()));
      CHECK(n != cell.id);
      const auto& back = cells[n].neighbors;
      CHECK(std::count(back.begin(), back.end(), cell.id) == 1);
    }
  }
}

}  // namespace

TEST_CASE("obstacle-free rectangle yields one cell") {
  const OccupancyGrid grid = uniform_grid(20, 10, true);
  const auto cells = bcd(grid);
  REQUIRE(cells.size() == 1);
  CHECK(cells[0].id == 0);
  CHECK(cells[0].x_min() == doctest::Approx(0.0));
  CHECK(cells[0].x_max() == doctest::Approx(20.0));
  CHECK(cells[0].neighbors.empty());
  check_partition(grid, cells);
}

TEST_CASE("centered rectangular obstacle yields four cells") {
  std::string art;
  for (int r = 0; r < 9; ++r) {
    for (int c = 0; c < 12; ++c) {
      const bool obstacle = r >= 3 && r < 6 && c >= 4 && c < 8;
      art += obstacle ? '#' : '.';
    }
    art += '\n';
  }
  const OccupancyGrid grid = grid_from_ascii(art);
  SweepEvents events;
  const auto cells = bcd(grid, &events);
  REQUIRE(cells.size() == 4);
  check_partition(grid, cells);
  check_adjacency_symmetric(cells);

  // Sweep order: left block, then above/below the obstacle, then right.
  CHECK(cells[0].col_begin == 0);
  CHECK(cells[1].col_begin == 4);
  CHECK(cells[2].col_begin == 4);
  CHECK(cells[3].col_begin == 8);
  CHECK(events.new_component_cells == 1);
  CHECK(events.split_created_cells == 2);
  CHECK(events.merge_created_cells == 1);

  CHECK(cells[0].neighbors == std::vector<int>{1, 2});
  CHECK(cells[3].neighbors == std::vector<int>{1, 2});
}

TEST_CASE("all-occupied grid yields no cells") {
  const OccupancyGrid grid = uniform_grid(6, 6, false);
  CHECK(bcd(grid).empty());
}

TEST_CASE("cells are column-convex and ids follow sweep order") {
  const OccupancyGrid grid = grid_from_ascii(
      "......\n"
      "..##..\n"
      "..##..\n"
      "......\n"
      "#.....\n");
  const auto cells = bcd(grid);
  check_partition(grid, cells);
  check_adjacency_symmetric(cells);
  for (std::size_t i = 0; i < cells.size(); ++i) CHECK(cells[i].id == static_cast<int>(i));
  for (std::size_t i = 1; i < cells.size(); ++i)
    CHECK(cells[i - 1].col_begin <= cells[i].col_begin);
}

TEST_CASE("event tally matches cell count against the flood-fill oracle") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const OccupancyGrid grid = random_obstacle_grid(32, 32, 0.05 + 0.005 * seed, seed);
    SweepEvents events;
    const auto cells = bcd(grid, &events);
    check_partition(grid, cells);
    check_adjacency_symmetric(cells);

    // Every opened cell is accounted to exactly one event kind.
    CHECK(static_cast<int>(cells.size()) == events.new_component_cells +
                                                events.split_created_cells +
                                                events.merge_created_cells);

    // The sweep's adjacency structure must recover free-space connectivity:
    // grouping cells by neighbor links gives one group per flood component.
    const auto [comp, comp_count] = flood_components(grid);
    std::vector<int> group(cells.size(), -1);
    int groups = 0;
    for (std::size_t s = 0; s < cells.size(); ++s) {
      if (group[s] >= 0) continue;
      std::vector<int> stack{static_cast<int>(s)};
      group[s] = groups;
      while (!stack.empty()) {
        const int c = stack.back();
        stack.pop_back();
        for (const int n : cells[c].neighbors) {
          if (group[n] < 0) {
            group[n] = groups;
            stack.push_back(n);
          }
        }
      }
      ++groups;
    }
    CHECK(groups == comp_count);
    CHECK(events.new_component_cells >= comp_count);

    // No cell straddles two flood-fill components.
    for (const Cell& cell : cells) {
      const int c0 = comp[static_cast<std::size_t>(cell.rows[0].first) * grid.width() +
                          cell.col_begin];
      for (int col = cell.col_begin; col < cell.col_end; ++col) {
        const auto [top, bottom] = cell.rows[col - cell.col_begin];
        for (int row = top; row <= bottom; ++row)
          REQUIRE(comp[static_cast<std::size_t>(row) * grid.width() + col] == c0);
      }
    }
  }
}

TEST_CASE("diagonally touching free regions stay separate cells") {
  const OccupancyGrid grid = grid_from_ascii(
      ".#\n"
      "#.\n");
  const auto cells = bcd(grid);
  REQUIRE(cells.size() == 2);
  CHECK(cells[0].neighbors.empty());
  CHECK(cells[1].neighbors.empty());
}
