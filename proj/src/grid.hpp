#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "geometry.hpp"

namespace dubcov {

class GridError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Map file has an unrecognized or inconsistent header.
class MalformedHeaderError : public GridError {
 public:
  using GridError::GridError;
};

// Map file declares more pixels than the payload contains.
class TruncatedPayloadError : public GridError {
 public:
  using GridError::GridError;
};

class NonPositiveResolutionError : public GridError {
 public:
  using GridError::GridError;
};

// Sidecar metadata missing fields, wrong types, or non-finite values.
class BadMetadataError : public GridError {
 public:
  using GridError::GridError;
};

class IoError : public GridError {
 public:
  using GridError::GridError;
};

struct GridMeta {
  double resolution_m = 0.0;
  Point depot;
  int free_threshold = 128;
};

// Binary occupancy raster with metric scaling and a mission depot.
//
// World frame: origin at the lower-left corner of the raster, x to the
// right, y up. Pixel (col, row) with row 0 at the top of the raster has
// its center at ((col + 0.5) * res, (height - row - 0.5) * res).
// Immutable after construction.
class OccupancyGrid {
 public:
  OccupancyGrid(int width, int height, double resolution, Point depot,
                std::vector<std::uint8_t> free_cells);

  // Parses a P2/P5 portable graymap or the ASCII '.'/'#' grid format.
  static OccupancyGrid parse(std::string_view bytes, const GridMeta& meta);
  static OccupancyGrid load(const std::string& map_path, const std::string& meta_path);
  static GridMeta parse_meta(std::string_view json_text);

  int width() const { return width_; }
  int height() const { return height_; }
  double resolution() const { return resolution_; }
  const Point& depot() const { return depot_; }

  bool free_at(int col, int row) const {
    return free_[static_cast<std::size_t>(row) * width_ + col] != 0;
  }
  bool in_bounds(int col, int row) const {
    return col >= 0 && col < width_ && row >= 0 && row < height_;
  }
  // False for coordinates outside the map.
  bool free_at_world(double x, double y) const;

  std::size_t free_count() const { return free_count_; }
  double free_area() const { return static_cast<double>(free_count_) * resolution_ * resolution_; }

  Point pixel_center(int col, int row) const {
    return {(col + 0.5) * resolution_, (height_ - row - 0.5) * resolution_};
  }

  // World y of the bottom edge of pixel row `row`.
  double row_bottom_y(int row) const { return (height_ - row - 1) * resolution_; }
  // World y of the top edge of pixel row `row`.
  double row_top_y(int row) const { return (height_ - row) * resolution_; }
  double col_left_x(int col) const { return col * resolution_; }

 private:
  int width_;
  int height_;
  double resolution_;
  Point depot_;
  std::vector<std::uint8_t> free_;
  std::size_t free_count_;
};

}  // namespace dubcov
