#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dubcov {

namespace {

constexpr const char* kRobotColors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                        "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
constexpr int kRobotColorCount = 10;

constexpr const char* kCellColors[] = {"#a6cee3", "#b2df8a", "#fdbf6f", "#cab2d6",
                                       "#fb9a99", "#ffff99", "#80b1d3", "#fccde5"};
constexpr int kCellColorCount = 8;

struct SvgWriter {
  std::ostringstream out;
  double height_m;
  double scale;

  SvgWriter(double width_m, double h_m) : height_m(h_m) {
    scale = 800.0 / std::max(width_m, h_m);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << width_m * scale << "\" height=\"" << h_m * scale << "\" viewBox=\"0 0 "
        << width_m * scale << " " << h_m * scale << "\">\n";
    out.precision(8);
  }

  double sx(double x) const { return x * scale; }
  double sy(double y) const { return (height_m - y) * scale; }

  void rect(double x, double y, double w, double h, const std::string& style) {
    out << "<rect x=\"" << sx(x) << "\" y=\"" << sy(y + h) << "\" width=\"" << w * scale
        << "\" height=\"" << h * scale << "\" " << style << "/>\n";
  }
  void line(const Point& a, const Point& b, const std::string& style) {
    out << "<line x1=\"" << sx(a.x) << "\" y1=\"" << sy(a.y) << "\" x2=\"" << sx(b.x)
        << "\" y2=\"" << sy(b.y) << "\" " << style << "/>\n";
  }
  void circle(const Point& c, double r_px, const std::string& style) {
    out << "<circle cx=\"" << sx(c.x) << "\" cy=\"" << sy(c.y) << "\" r=\"" << r_px << "\" "
        << style << "/>\n";
  }
  void text(const Point& at, const std::string& label, const std::string& style) {
    out << "<text x=\"" << sx(at.x) << "\" y=\"" << sy(at.y) << "\" " << style << ">" << label
        << "</text>\n";
  }
  // The y flip mirrors orientation, so a world-ccw arc uses sweep flag 1.
  void arc(const MissionElement& e, const std::string& style) {
    const bool large = e.sweep > kPi;
    out << "<path d=\"M " << sx(e.start.x) << " " << sy(e.start.y) << " A "
        << e.radius * scale << " " << e.radius * scale << " 0 " << (large ? 1 : 0) << " "
        << (e.ccw ? 1 : 0) << " " << sx(e.end.x) << " " << sy(e.end.y) << "\" fill=\"none\" "
        << style << "/>\n";
  }
  std::string finish() {
    out << "</svg>\n";
    return out.str();
  }
};

void draw_map(SvgWriter& svg, const OccupancyGrid& grid) {
  const double res = grid.resolution();
  svg.rect(0, 0, grid.width() * res, grid.height() * res, "fill=\"#ffffff\"");
  // Free area in gray, merged into per-row runs.
  for (int row = 0; row < grid.height(); ++row) {
    int col = 0;
    while (col < grid.width()) {
      if (!grid.free_at(col, row)) {
        ++col;
        continue;
      }
      const int begin = col;
      while (col < grid.width() && grid.free_at(col, row)) ++col;
      svg.rect(begin * res, grid.row_bottom_y(row), (col - begin) * res, res,
               "fill=\"#d4dde4\"");
    }
  }
}

bool crosses_obstacle(const OccupancyGrid& grid, const MissionElement& e) {
  const double step = 0.5 * grid.resolution();
  const double len = e.length();
  const int n = std::max(2, static_cast<int>(std::ceil(len / step)) + 1);
  for (int i = 0; i <= n; ++i) {
    const double t = static_cast<double>(i) / n;
    Point p;
    if (e.kind == MissionElement::Kind::Line) {
      p = {e.start.x + t * (e.end.x - e.start.x), e.start.y + t * (e.end.y - e.start.y)};
    } else {
      const double a0 = std::atan2(e.start.y - e.center.y, e.start.x - e.center.x);
      const double a = e.ccw ? a0 + t * e.sweep : a0 - t * e.sweep;
      p = {e.center.x + e.radius * std::cos(a), e.center.y + e.radius * std::sin(a)};
    }
    const int col = static_cast<int>(std::floor(p.x / grid.resolution()));
    const int row = grid.height() - 1 - static_cast<int>(std::floor(p.y / grid.resolution()));
    if (grid.in_bounds(col, row) && !grid.free_at(col, row)) return true;
  }
  return false;
}

}  // namespace

std::string render_decomposition_svg(const OccupancyGrid& grid, const std::vector<Cell>& cells,
                                     const std::vector<Pass>* passes, const PassGraph* graph) {
  const double res = grid.resolution();
  SvgWriter svg(grid.width() * res, grid.height() * res);
  draw_map(svg, grid);

  for (const Cell& cell : cells) {
    const std::string fill = kCellColors[cell.id % kCellColorCount];
    for (int col = cell.col_begin; col < cell.col_end; ++col) {
      const double y0 = cell.floor_at(col, grid.height());
      const double y1 = cell.ceiling_at(col, grid.height());
      svg.rect(col * res, y0, res, y1 - y0, "fill=\"" + fill + "\" fill-opacity=\"0.6\"");
    }
    const int mid_col = (cell.col_begin + cell.col_end) / 2;
    const int c = std::min(mid_col, cell.col_end - 1);
    const Point label{(c + 0.5) * res,
                      0.5 * (cell.floor_at(c, grid.height()) + cell.ceiling_at(c, grid.height()))};
    svg.text(label, std::to_string(cell.id), "font-size=\"12\" text-anchor=\"middle\"");
  }

  if (passes != nullptr) {
    if (graph != nullptr) {
      for (const PassGraphEdge& e : graph->edges)
        svg.line((*passes)[e.u].midpoint(), (*passes)[e.v].midpoint(),
                 "stroke=\"#888888\" stroke-width=\"0.7\"");
    }
    for (const Pass& p : *passes) {
      svg.line({p.center_x, p.y_low}, {p.center_x, p.y_high},
               "stroke=\"#333333\" stroke-width=\"1.2\"");
      svg.circle(p.midpoint(), 2.0, "fill=\"#333333\"");
    }
  }
  return svg.finish();
}

std::string render_mission_svg(const OccupancyGrid& grid, const Mission& mission) {
  const double res = grid.resolution();
  SvgWriter svg(grid.width() * res, grid.height() * res);
  draw_map(svg, grid);

  // Covering strips first so transition curves stay visible on top.
  for (const RobotProgram& program : mission.programs) {
    const std::string color = kRobotColors[program.robot_id % kRobotColorCount];
    for (const MissionElement& e : program.elements) {
      if (!e.covering) continue;
      const double x = std::min(e.start.x, e.end.x) - 0.5 * mission.footprint;
      const double y = std::min(e.start.y, e.end.y);
      svg.rect(x, y, mission.footprint, std::fabs(e.end.y - e.start.y),
               "fill=\"" + color + "\" fill-opacity=\"0.18\"");
    }
  }

  for (const RobotProgram& program : mission.programs) {
    const std::string color = kRobotColors[program.robot_id % kRobotColorCount];
    for (const MissionElement& e : program.elements) {
      std::string style = "stroke=\"" + color + "\" stroke-width=\"1.6\"";
      if (!e.covering && crosses_obstacle(grid, e))
        style = "stroke=\"#ff0000\" stroke-width=\"1.6\" stroke-dasharray=\"4 2\"";
      if (e.kind == MissionElement::Kind::Arc) {
        svg.arc(e, style);
      } else {
        svg.line(e.start, e.end, style);
      }
    }
  }

  svg.circle(mission.depot, 5.0, "fill=\"#000000\"");
  svg.text({mission.depot.x, mission.depot.y}, "depot",
           "font-size=\"12\" dx=\"8\" dominant-baseline=\"middle\"");
  return svg.finish();
}

}  // namespace dubcov
