#pragma once

#include <array>
#include <vector>

#include "geometry.hpp"

namespace dubcov {

struct Configuration {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;  // heading in [0, 2*pi)
};

enum class DubinsWord { LSL, RSR, LSR, RSL, RLR, LRL };

enum class SegmentKind { Left, Straight, Right };

// Segment kinds of a word, in traversal order.
std::array<SegmentKind, 3> word_segments(DubinsWord word);
const char* word_name(DubinsWord word);

// Shortest curvature-bounded forward path between two oriented
// configurations: three segments, each a left arc, right arc, or straight.
struct DubinsPath {
  Configuration start;
  Configuration end;
  double radius = 1.0;
  DubinsWord word = DubinsWord::LSL;
  std::array<double, 3> seg_lengths{};  // meters (arcs as arc length)
  double total_length = 0.0;
};

// Minimum over the six closed-form words; ties broken by word order
// LSL < RSR < LSR < RSL < RLR < LRL. A path always exists for r > 0.
DubinsPath dubins_shortest(const Configuration& from, const Configuration& to, double r);

// Pose after traveling arc_len meters along the path (clamped to its ends).
Configuration dubins_at(const DubinsPath& path, double arc_len);

// Poses at uniform arc-length spacing <= step, including both endpoints.
std::vector<Configuration> sample_path(const DubinsPath& path, double step);

}  // namespace dubcov
