#include "grid.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace dubcov {

namespace {

// Tokenizer for PGM headers: skips whitespace and '#' comments.
struct PgmReader {
  std::string_view data;
  std::size_t pos = 0;

  void skip_separators() {
    while (pos < data.size()) {
      const char c = data[pos];
      if (c == '#') {
        while (pos < data.size() && data[pos] != '\n') ++pos;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
      } else {
        break;
      }
    }
  }

  long next_int(const char* what) {
    skip_separators();
    if (pos >= data.size() || !std::isdigit(static_cast<unsigned char>(data[pos])))
      throw MalformedHeaderError(std::string("expected integer for ") + what);
    long value = 0;
    while (pos < data.size() && std::isdigit(static_cast<unsigned char>(data[pos]))) {
      value = value * 10 + (data[pos] - '0');
      if (value > 1000000000L) throw MalformedHeaderError(std::string("absurd value for ") + what);
      ++pos;
    }
    return value;
  }
};

std::vector<std::uint8_t> parse_pgm(std::string_view bytes, int threshold, int& width, int& height) {
  PgmReader rd{bytes};
  rd.skip_separators();
  if (rd.pos + 2 > bytes.size()) throw MalformedHeaderError("missing PGM magic");
  const char m0 = bytes[rd.pos];
  const char m1 = bytes[rd.pos + 1];
  if (m0 != 'P' || (m1 != '2' && m1 != '5')) throw MalformedHeaderError("not a P2/P5 graymap");
  const bool binary = m1 == '5';
  rd.pos += 2;

  const long w = rd.next_int("width");
  const long h = rd.next_int("height");
  const long maxval = rd.next_int("maxval");
  if (w < 1 || h < 1) throw MalformedHeaderError("non-positive image dimensions");
  if (maxval < 1 || maxval > 65535) throw MalformedHeaderError("maxval out of range");

  const std::size_t count = static_cast<std::size_t>(w) * static_cast<std::size_t>(h);
  std::vector<std::uint8_t> free(count, 0);

  auto classify = [&](long v) -> std::uint8_t {
    if (v < 0 || v > maxval) throw MalformedHeaderError("pixel value exceeds maxval");
    const long scaled = maxval == 255 ? v : (v * 255 + maxval / 2) / maxval;
    return scaled >= threshold ? 1 : 0;
  };

  if (binary) {
    // Exactly one separator byte between maxval and the payload.
    if (rd.pos >= bytes.size() || !std::isspace(static_cast<unsigned char>(bytes[rd.pos])))
      throw MalformedHeaderError("missing separator before P5 payload");
    ++rd.pos;
    const int bytes_per_px = maxval > 255 ? 2 : 1;
    if (bytes.size() - rd.pos < count * bytes_per_px)
      throw TruncatedPayloadError("P5 payload shorter than declared size");
    for (std::size_t i = 0; i < count; ++i) {
      long v;
      if (bytes_per_px == 1) {
        v = static_cast<unsigned char>(bytes[rd.pos + i]);
      } else {
        v = static_cast<unsigned char>(bytes[rd.pos + 2 * i]) * 256 +
            static_cast<unsigned char>(bytes[rd.pos + 2 * i + 1]);
      }
      free[i] = classify(v);
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      rd.skip_separators();
      if (rd.pos >= bytes.size()) throw TruncatedPayloadError("P2 payload ended early");
      free[i] = classify(rd.next_int("pixel"));
    }
  }

  width = static_cast<int>(w);
  height = static_cast<int>(h);
  return free;
}

std::vector<std::uint8_t> parse_ascii_grid(std::string_view bytes, int& width, int& height) {
  std::vector<std::uint8_t> free;
  int w = -1;
  int h = 0;
  int line_len = 0;
  auto end_line = [&]() {
    if (line_len == 0) return;
    if (w < 0) w = line_len;
    if (line_len != w) throw MalformedHeaderError("ASCII grid rows have unequal lengths");
    ++h;
    line_len = 0;
  };
  for (const char c : bytes) {
    if (c == '\n') {
      end_line();
    } else if (c == '.') {
      free.push_back(1);
      ++line_len;
    } else if (c == '#') {
      free.push_back(0);
      ++line_len;
    } else if (c == '\r' || c == ' ' || c == '\t') {
      continue;
    } else {
      throw MalformedHeaderError("ASCII grid contains characters other than '.' and '#'");
    }
  }
  end_line();
  if (w <= 0 || h <= 0) throw MalformedHeaderError("empty ASCII grid");
  width = w;
  height = h;
  return free;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

OccupancyGrid::OccupancyGrid(int width, int height, double resolution, Point depot,
                             std::vector<std::uint8_t> free_cells)
    : width_(width), height_(height), resolution_(resolution), depot_(depot),
      free_(std::move(free_cells)) {
  if (width_ < 1 || height_ < 1) throw MalformedHeaderError("grid dimensions must be >= 1");
  if (!(resolution_ > 0.0) || !std::isfinite(resolution_))
    throw NonPositiveResolutionError("resolution must be > 0");
  if (!is_finite(depot_)) throw BadMetadataError("depot coordinates must be finite");
  if (free_.size() != static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_))
    throw MalformedHeaderError("cell buffer does not match declared dimensions");
  free_count_ = 0;
  for (const auto v : free_)
    if (v) ++free_count_;
}

bool OccupancyGrid::free_at_world(double x, double y) const {
  const int col = static_cast<int>(std::floor(x / resolution_));
  const int row = height_ - 1 - static_cast<int>(std::floor(y / resolution_));
  if (!in_bounds(col, row)) return false;
  return free_at(col, row);
}

GridMeta OccupancyGrid::parse_meta(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw BadMetadataError(std::string("metadata is not valid JSON: ") + e.what());
  }
  GridMeta meta;
  try {
    meta.resolution_m = j.at("resolution_m").get<double>();
    const auto& depot = j.at("depot");
    if (!depot.is_array() || depot.size() != 2)
      throw BadMetadataError("depot must be an [x, y] array");
    meta.depot = Point{depot[0].get<double>(), depot[1].get<double>()};
    if (j.contains("free_threshold")) meta.free_threshold = j["free_threshold"].get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw BadMetadataError(std::string("metadata missing required field: ") + e.what());
  }
  if (!(meta.resolution_m > 0.0) || !std::isfinite(meta.resolution_m))
    throw NonPositiveResolutionError("resolution_m must be > 0");
  if (!is_finite(meta.depot)) throw BadMetadataError("depot coordinates must be finite");
  if (meta.free_threshold < 0 || meta.free_threshold > 255)
    throw BadMetadataError("free_threshold must be in [0, 255]");
  return meta;
}

OccupancyGrid OccupancyGrid::parse(std::string_view bytes, const GridMeta& meta) {
  if (!(meta.resolution_m > 0.0) || !std::isfinite(meta.resolution_m))
    throw NonPositiveResolutionError("resolution_m must be > 0");
  if (meta.free_threshold < 0 || meta.free_threshold > 255)
    throw BadMetadataError("free_threshold must be in [0, 255]");

  std::size_t probe = 0;
  while (probe < bytes.size() && std::isspace(static_cast<unsigned char>(bytes[probe]))) ++probe;

  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> free;
  if (probe < bytes.size() && bytes[probe] == 'P') {
    free = parse_pgm(bytes, meta.free_threshold, width, height);
  } else if (probe < bytes.size() && (bytes[probe] == '.' || bytes[probe] == '#')) {
    free = parse_ascii_grid(bytes, width, height);
  } else {
    throw MalformedHeaderError("unrecognized map format (want P2/P5 PGM or '.'/'#' grid)");
  }
  return OccupancyGrid(width, height, meta.resolution_m, meta.depot, std::move(free));
}

OccupancyGrid OccupancyGrid::load(const std::string& map_path, const std::string& meta_path) {
  const std::string map_bytes = read_file(map_path);
  const GridMeta meta = parse_meta(read_file(meta_path));
  return parse(map_bytes, meta);
}

}  // namespace dubcov
