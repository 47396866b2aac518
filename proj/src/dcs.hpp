#pragma once

#include <cstdint>
#include <vector>

#include "dubins.hpp"
#include "passes.hpp"

namespace dubcov {

enum class PassDirection { Ascending = 0, Descending = 1 };

// One of the two directed traversals of a pass. Ascending runs the
// centerline bottom-up with heading pi/2, descending top-down with 3*pi/2.
struct DirectedPassNode {
  int pass_id = -1;
  PassDirection direction = PassDirection::Ascending;
  Configuration entry;
  Configuration exit;
};

// Directed weighted graph with two nodes per pass (node 2*i and 2*i+1 for
// pass index i) and arcs between nodes of different passes, weighted by
// the shortest Dubins path from exit to entry.
class DubinsGraph {
 public:
  // Throws std::invalid_argument on an empty pass list or r <= 0.
  static DubinsGraph build(std::vector<Pass> passes, double r);

  int pass_count() const { return static_cast<int>(passes_.size()); }
  int node_count() const { return 2 * pass_count(); }
  double radius() const { return radius_; }

  const Pass& pass(int index) const { return passes_[index]; }
  const std::vector<Pass>& passes() const { return passes_; }
  int pass_index_of(int node) const { return node / 2; }

  DirectedPassNode node(int id) const;
  // Infinity for arcs within one pass group.
  double weight(int from, int to) const { return weights_[from * node_count() + to]; }
  // Recomputes the transition path realizing weight(from, to).
  DubinsPath transition(int from, int to) const;

  double pass_length_sum() const { return pass_length_sum_; }

 private:
  std::vector<Pass> passes_;
  double radius_ = 1.0;
  std::vector<double> weights_;
  double pass_length_sum_ = 0.0;
};

// One stop of a coverage route: a pass with its traversal direction.
struct RouteStop {
  int pass_id = -1;
  PassDirection direction = PassDirection::Ascending;
  Configuration entry;
  Configuration exit;
  Point midpoint;
  double pass_length = 0.0;
};

// Open Hamiltonian-over-passes coverage route. interior_cost is the sum of
// pass lengths plus Dubins transition lengths; depot legs are not included.
struct Route {
  std::vector<RouteStop> stops;
  std::vector<DubinsPath> transitions;  // stops.size() - 1 entries
  double interior_cost = 0.0;
};

enum class RouteSolver { Exact, Heuristic };

// Largest instance the exact dynamic program accepts.
inline constexpr int kExactSolverPassLimit = 12;

// Visits every pass exactly once in one of its two directions. Exact mode
// (guarded at kExactSolverPassLimit) minimizes interior cost by dynamic
// programming over (visited set, current node); heuristic mode is greedy
// construction plus 2-opt and or-opt, deterministic for a given seed.
Route solve_route(const DubinsGraph& graph, RouteSolver solver, std::uint64_t seed);

// Alg-style total: Euclidean depot leg to the first pass midpoint, interior
// cost, Euclidean leg back from the last pass midpoint.
double route_cost(const Route& route, const Point& v_s);

RouteStop make_route_stop(const Pass& pass, PassDirection direction);

}  // namespace dubcov
