#include "dcs.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <random>
#include <stdexcept>

namespace dubcov {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

DirectedPassNode directed_node(const Pass& pass, PassDirection dir) {
  DirectedPassNode n;
  n.pass_id = pass.id;
  n.direction = dir;
  if (dir == PassDirection::Ascending) {
    n.entry = {pass.center_x, pass.y_low, kPi / 2.0};
    n.exit = {pass.center_x, pass.y_high, kPi / 2.0};
  } else {
    n.entry = {pass.center_x, pass.y_high, 3.0 * kPi / 2.0};
    n.exit = {pass.center_x, pass.y_low, 3.0 * kPi / 2.0};
  }
  return n;
}

// Route state used by the solvers: node ids plus a running transition sum.
struct Tsp {
  const DubinsGraph& g;
  std::vector<int> order;  // node ids, one per pass group

  double transition_sum() const {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) s += g.weight(order[i], order[i + 1]);
    return s;
  }
};

std::vector<int> exact_order(const DubinsGraph& g) {
  const int n = g.pass_count();
  const int nodes = g.node_count();
  const std::uint32_t full = (n >= 32) ? 0u : ((1u << n) - 1u);
  const std::size_t states = static_cast<std::size_t>(full + 1) * nodes;

  std::vector<double> dp(states, kInf);
  std::vector<int> parent(states, -1);
  auto idx = [nodes](std::uint32_t mask, int v) {
    return static_cast<std::size_t>(mask) * nodes + v;
  };

  for (int v = 0; v < nodes; ++v) dp[idx(1u << (v / 2), v)] = 0.0;

  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    for (int v = 0; v < nodes; ++v) {
      const double cur = dp[idx(mask, v)];
      if (cur == kInf) continue;
      if (!(mask & (1u << (v / 2)))) continue;
      for (int u = 0; u < nodes; ++u) {
        const std::uint32_t g_u = 1u << (u / 2);
        if (mask & g_u) continue;
        const double cand = cur + g.weight(v, u);
        if (cand < dp[idx(mask | g_u, u)]) {
          dp[idx(mask | g_u, u)] = cand;
          parent[idx(mask | g_u, u)] = v;
        }
      }
    }
  }

  int best_v = 0;
  double best = kInf;
  for (int v = 0; v < nodes; ++v) {
    if (dp[idx(full, v)] < best) {
      best = dp[idx(full, v)];
      best_v = v;
    }
  }

  std::vector<int> order;
  std::uint32_t mask = full;
  int v = best_v;
  while (v >= 0) {
    order.push_back(v);
    const int p = parent[idx(mask, v)];
    mask &= ~(1u << (v / 2));
    v = p;
  }
  std::reverse(order.begin(), order.end());
  return order;
}

std::vector<int> greedy_order(const DubinsGraph& g, std::uint64_t seed) {
  const int n = g.pass_count();
  const int nodes = g.node_count();
  std::mt19937_64 rng(seed);
  const int start = static_cast<int>(rng() % static_cast<std::uint64_t>(nodes));

  std::vector<int> order{start};
  std::vector<char> used(n, 0);
  used[start / 2] = 1;
  int cur = start;
  for (int placed = 1; placed < n; ++placed) {
    int best_u = -1;
    double best_w = kInf;
    for (int u = 0; u < nodes; ++u) {
      if (used[u / 2]) continue;
      const double w = g.weight(cur, u);
      if (w < best_w) {
        best_w = w;
        best_u = u;
      }
    }
    order.push_back(best_u);
    used[best_u / 2] = 1;
    cur = best_u;
  }
  return order;
}

int flip(int node) { return node ^ 1; }

// 2-opt with direction flips (i == j degenerates to a lone flip).
// Reversing a segment flips every node in it: the opposite-direction node
// of a pass is the time reversal of the original, so the segment's internal
// transition cost is preserved and only the boundary arcs change.
bool two_opt_sweep(const DubinsGraph& g, std::vector<int>& order, double& cost) {
  const int m = static_cast<int>(order.size());
  auto w = [&](int a, int b) { return g.weight(a, b); };
  bool improved = false;
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      if (i == 0 && j == m - 1) continue;  // whole-route reversal is cost-neutral
      double delta = 0.0;
      if (i > 0) delta += w(order[i - 1], flip(order[j])) - w(order[i - 1], order[i]);
      if (j < m - 1) delta += w(flip(order[i]), order[j + 1]) - w(order[j], order[j + 1]);
      if (delta < -1e-12) {
        std::reverse(order.begin() + i, order.begin() + j + 1);
        for (int p = i; p <= j; ++p) order[p] = flip(order[p]);
        cost += delta;
        improved = true;
      }
    }
  }
  return improved;
}

// Or-opt: relocate a run of 1..3 stops to another gap, optionally reversed.
bool or_opt_sweep(const DubinsGraph& g, std::vector<int>& order, double& cost) {
  const int m = static_cast<int>(order.size());
  auto w = [&](int a, int b) { return g.weight(a, b); };
  bool improved = false;
  for (int len = 1; len <= 3 && len < m; ++len) {
    for (int i = 0; i + len <= m; ++i) {
      const int j = i + len - 1;
      const bool has_left = i > 0;
      const bool has_right = j < m - 1;
      const double detach = (has_left ? w(order[i - 1], order[i]) : 0.0) +
                            (has_right ? w(order[j], order[j + 1]) : 0.0) -
                            ((has_left && has_right) ? w(order[i - 1], order[j + 1]) : 0.0);

      // Gap positions in the sequence with the segment removed.
      const int mr = m - len;
      auto reduced = [&](int p) { return p < i ? order[p] : order[p + len]; };
      bool applied = false;
      for (int gap = 0; gap <= mr && !applied; ++gap) {
        if (gap == i) continue;  // original position
        const int before = gap > 0 ? reduced(gap - 1) : -1;
        const int after = gap < mr ? reduced(gap) : -1;
        for (int orient = 0; orient < 2; ++orient) {
          const int head = orient ? flip(order[j]) : order[i];
          const int tail = orient ? flip(order[i]) : order[j];
          double attach = 0.0;
          if (before >= 0) attach += w(before, head);
          if (after >= 0) attach += w(tail, after);
          if (before >= 0 && after >= 0) attach -= w(before, after);
          const double delta = attach - detach;
          if (delta < -1e-12) {
            std::vector<int> seg(order.begin() + i, order.begin() + j + 1);
            if (orient) {
              std::reverse(seg.begin(), seg.end());
              for (int& s : seg) s = flip(s);
            }
            order.erase(order.begin() + i, order.begin() + j + 1);
            order.insert(order.begin() + gap, seg.begin(), seg.end());
            cost += delta;
            improved = true;
            applied = true;
            break;
          }
        }
      }
    }
  }
  return improved;
}

void improve_order(const DubinsGraph& g, std::vector<int>& order) {
  const int m = static_cast<int>(order.size());
  if (m < 2) return;

  double cost = 0.0;
  for (int i = 0; i + 1 < m; ++i) cost += g.weight(order[i], order[i + 1]);

  const int max_sweeps = 200;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    const bool a = two_opt_sweep(g, order, cost);
    const bool b = or_opt_sweep(g, order, cost);
    if (!a && !b) break;
  }

  // Accumulated deltas must agree with a from-scratch evaluation.
  double check = 0.0;
  for (int i = 0; i + 1 < m; ++i) check += g.weight(order[i], order[i + 1]);
  assert(std::fabs(check - cost) < 1e-6);
  (void)cost;
}

}  // namespace

DubinsGraph DubinsGraph::build(std::vector<Pass> passes, double r) {
  if (passes.empty()) throw std::invalid_argument("pass list must be non-empty");
  if (!(r > 0.0)) throw std::invalid_argument("turning radius must be > 0");

  DubinsGraph g;
  g.passes_ = std::move(passes);
  g.radius_ = r;
  const int nodes = g.node_count();
  g.weights_.assign(static_cast<std::size_t>(nodes) * nodes, kInf);

  std::vector<DirectedPassNode> dn(nodes);
  for (int id = 0; id < nodes; ++id)
    dn[id] = directed_node(g.passes_[id / 2], static_cast<PassDirection>(id % 2));

  for (int a = 0; a < nodes; ++a) {
    for (int b = 0; b < nodes; ++b) {
      if (a / 2 == b / 2) continue;
      g.weights_[static_cast<std::size_t>(a) * nodes + b] =
          dubins_shortest(dn[a].exit, dn[b].entry, r).total_length;
    }
  }

  g.pass_length_sum_ = 0.0;
  for (const Pass& p : g.passes_) g.pass_length_sum_ += p.length();
  return g;
}

DirectedPassNode DubinsGraph::node(int id) const {
  return directed_node(passes_[id / 2], static_cast<PassDirection>(id % 2));
}

DubinsPath DubinsGraph::transition(int from, int to) const {
  return dubins_shortest(node(from).exit, node(to).entry, radius_);
}

RouteStop make_route_stop(const Pass& pass, PassDirection direction) {
  const DirectedPassNode n = directed_node(pass, direction);
  RouteStop stop;
  stop.pass_id = pass.id;
  stop.direction = direction;
  stop.entry = n.entry;
  stop.exit = n.exit;
  stop.midpoint = pass.midpoint();
  stop.pass_length = pass.length();
  return stop;
}

Route solve_route(const DubinsGraph& graph, RouteSolver solver, std::uint64_t seed) {
  if (solver == RouteSolver::Exact && graph.pass_count() > kExactSolverPassLimit)
    throw std::invalid_argument("exact solver is limited to " +
                                std::to_string(kExactSolverPassLimit) + " passes");

  std::vector<int> order;
  if (solver == RouteSolver::Exact) {
    order = exact_order(graph);
  } else {
    order = greedy_order(graph, seed);
    improve_order(graph, order);
  }

  Route route;
  route.stops.reserve(order.size());
  for (const int id : order)
    route.stops.push_back(
        make_route_stop(graph.pass(id / 2), static_cast<PassDirection>(id % 2)));
  route.interior_cost = graph.pass_length_sum();
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    route.transitions.push_back(graph.transition(order[i], order[i + 1]));
    route.interior_cost += route.transitions.back().total_length;
  }
  return route;
}

double route_cost(const Route& route, const Point& v_s) {
  if (route.stops.empty()) throw std::invalid_argument("route must be non-empty");
  return distance(v_s, route.stops.front().midpoint) + route.interior_cost +
         distance(route.stops.back().midpoint, v_s);
}

}  // namespace dubcov
