#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dcrc.hpp"
#include "geometry.hpp"

namespace dubcov {

class MissionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One waypoint-program element. Arcs store their circle so a vehicle (or
// the renderer) can reproduce the exact curve; `covering` marks pass
// traversal as opposed to transit.
struct MissionElement {
  enum class Kind { Line, Arc };
  Kind kind = Kind::Line;
  Point start;
  Point end;
  double heading_start = 0.0;
  double heading_end = 0.0;
  bool covering = false;
  // Arc fields; radius matches the plan's turning radius for transitions.
  Point center;
  bool ccw = false;
  double sweep = 0.0;  // radians, positive
  double radius = 0.0;

  double length() const;
};

struct RobotProgram {
  int robot_id = 0;
  double cost = 0.0;
  std::vector<MissionElement> elements;
};

struct Mission {
  int schema_version = 1;
  std::string algorithm;  // "dcrc" | "dcac"
  std::string solver;     // "exact" | "heuristic"
  int robots = 0;
  double turning_radius = 0.0;
  double footprint = 0.0;
  std::uint64_t seed = 0;
  Point depot;
  std::vector<RobotProgram> programs;
};

// Expands tours into continuous element chains: a depot line to the first
// pass entry, pass centerlines, Dubins transition segments, and a line
// back to the depot.
Mission build_mission(const std::vector<Tour>& tours, const std::string& algorithm,
                      const std::string& solver, int robots, double turning_radius,
                      double footprint, std::uint64_t seed, const Point& depot);

std::string mission_to_json(const Mission& mission);
Mission mission_from_json(const std::string& text);  // throws MissionError

struct MissionStats {
  std::vector<double> stored_costs;
  std::vector<double> recomputed_costs;
  double max_cost = 0.0;
};

// Re-derives each robot's cost from its element geometry alone: Euclidean
// depot legs to the first/last covering-element midpoints plus the lengths
// of everything between the two depot lines.
MissionStats recompute_stats(const Mission& mission);

std::vector<MissionElement> dubins_path_elements(const DubinsPath& path);

}  // namespace dubcov
