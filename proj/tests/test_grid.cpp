#include <doctest.h>

#include <string>

#include "fixtures.hpp"
#include "grid.hpp"

using namespace dubcov;
using dubcov::testing::grid_from_ascii;

namespace {

GridMeta meta(double res = 1.0, Point depot = {0, 0}, int threshold = 128) {
  GridMeta m;
  m.resolution_m = res;
  m.depot = depot;
  m.free_threshold = threshold;
  return m;
}

}  // namespace

TEST_CASE("P2 all-white map is fully free") {
  const std::string pgm = "P2\n3 3\n255\n255 255 255 255 255 255 255 255 255\n";
  const OccupancyGrid g = OccupancyGrid::parse(pgm, meta());
  CHECK(g.width() == 3);
  CHECK(g.height() == 3);
  CHECK(g.free_count() == 9);
}

TEST_CASE("P2 all-black map has no free cells") {
  const std::string pgm = "P2\n3 3\n255\n0 0 0 0 0 0 0 0 0\n";
  const OccupancyGrid g = OccupancyGrid::parse(pgm, meta());
  CHECK(g.free_count() == 0);
}

TEST_CASE("P5 with short payload reports truncation") {
  std::string pgm = "P5\n4 4\n255\n";
  pgm.append(15, static_cast<char>(255));
  CHECK_THROWS_AS(OccupancyGrid::parse(pgm, meta()), TruncatedPayloadError);
}

TEST_CASE("P5 payload is read binary, including comment-like bytes") {
  std::string pgm = "P5\n# a comment\n2 2\n255\n";
  const char payload[4] = {static_cast<char>(255), 0, static_cast<char>(200), 10};
  pgm.append(payload, 4);
  const OccupancyGrid g = OccupancyGrid::parse(pgm, meta());
  CHECK(g.free_at(0, 0));
  CHECK_FALSE(g.free_at(1, 0));
  CHECK(g.free_at(0, 1));
  CHECK_FALSE(g.free_at(1, 1));
}

TEST_CASE("threshold boundary maps >= threshold to free") {
  const std::string pgm = "P2\n2 1\n255\n128 127\n";
  const OccupancyGrid g = OccupancyGrid::parse(pgm, meta());
  CHECK(g.free_at(0, 0));
  CHECK_FALSE(g.free_at(1, 0));
}

TEST_CASE("malformed headers are rejected with the named error") {
  CHECK_THROWS_AS(OccupancyGrid::parse("P7\n2 2\n255\n", meta()), MalformedHeaderError);
  CHECK_THROWS_AS(OccupancyGrid::parse("P2\n-3 2\n255\n", meta()), MalformedHeaderError);
  CHECK_THROWS_AS(OccupancyGrid::parse("P2\n2\n", meta()), MalformedHeaderError);
  CHECK_THROWS_AS(OccupancyGrid::parse("", meta()), MalformedHeaderError);
}

TEST_CASE("non-positive resolution is its own error") {
  CHECK_THROWS_AS(OccupancyGrid::parse("P2\n1 1\n255\n255\n", meta(0.0)),
                  NonPositiveResolutionError);
  CHECK_THROWS_AS(OccupancyGrid::parse_meta("{\"resolution_m\": -1, \"depot\": [0, 0]}"),
                  NonPositiveResolutionError);
}

TEST_CASE("metadata parsing validates fields") {
  const GridMeta m = OccupancyGrid::parse_meta(
      "{\"resolution_m\": 2.5, \"depot\": [3.0, -1.0], \"free_threshold\": 10}");
  CHECK(m.resolution_m == doctest::Approx(2.5));
  CHECK(m.depot.x == doctest::Approx(3.0));
  CHECK(m.depot.y == doctest::Approx(-1.0));
  CHECK(m.free_threshold == 10);

  CHECK_THROWS_AS(OccupancyGrid::parse_meta("not json"), BadMetadataError);
  CHECK_THROWS_AS(OccupancyGrid::parse_meta("{\"resolution_m\": 1.0}"), BadMetadataError);
  CHECK_THROWS_AS(OccupancyGrid::parse_meta(
                      "{\"resolution_m\": 1.0, \"depot\": [0, 0], \"free_threshold\": 999}"),
                  BadMetadataError);
}

TEST_CASE("ASCII grid format") {
  const OccupancyGrid g = grid_from_ascii("..#\n.##\n...\n");
  CHECK(g.width() == 3);
  CHECK(g.height() == 3);
  CHECK(g.free_count() == 6);
  CHECK_FALSE(g.free_at(2, 0));
  CHECK(g.free_at(0, 2));
  CHECK_THROWS_AS(grid_from_ascii("..\n...\n"), MalformedHeaderError);
  CHECK_THROWS_AS(grid_from_ascii("..x\n"), MalformedHeaderError);
}

TEST_CASE("free_area scales with resolution squared") {
  SUBCASE("mixed grid") {
    // 10x10 with 40 occupied -> 60 free at resolution 2 -> 240 m^2.
    std::string art;
    for (int r = 0; r < 10; ++r) {
      for (int c = 0; c < 10; ++c) art += (r < 4) ? '#' : '.';
      art += '\n';
    }
    const OccupancyGrid g = grid_from_ascii(art, 2.0);
    CHECK(g.free_area() == doctest::Approx(240.0));
  }
  SUBCASE("all occupied") {
    const OccupancyGrid g = dubcov::testing::uniform_grid(5, 5, false);
    CHECK(g.free_area() == doctest::Approx(0.0));
  }
  SUBCASE("200x200 all free at 1 m/px") {
    const OccupancyGrid g = dubcov::testing::uniform_grid(200, 200, true);
    CHECK(g.free_area() == doctest::Approx(40000.0));
  }
}

TEST_CASE("world frame mapping puts row 0 at the top") {
  const OccupancyGrid g = grid_from_ascii("#.\n..\n", 2.0);
  // Pixel (1, 0) is the top-right; its center is (3, 3) in meters.
  const Point p = g.pixel_center(1, 0);
  CHECK(p.x == doctest::Approx(3.0));
  CHECK(p.y == doctest::Approx(3.0));
  CHECK(g.free_at_world(3.0, 3.0));
  CHECK_FALSE(g.free_at_world(1.0, 3.0));  // top-left is occupied
  CHECK_FALSE(g.free_at_world(-1.0, 1.0));
  CHECK_FALSE(g.free_at_world(1.0, 99.0));
}

TEST_CASE("parsing is deterministic") {
  const std::string pgm = "P2\n4 2\n255\n255 0 255 0 0 255 0 255\n";
  const OccupancyGrid a = OccupancyGrid::parse(pgm, meta());
  const OccupancyGrid b = OccupancyGrid::parse(pgm, meta());
  for (int row = 0; row < 2; ++row)
    for (int col = 0; col < 4; ++col) CHECK(a.free_at(col, row) == b.free_at(col, row));
}
