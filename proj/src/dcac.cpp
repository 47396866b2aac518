#include "dcac.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "bcd.hpp"

namespace dubcov {

namespace {

struct Neighbor {
  int vertex;
  double cost;
};

// Adjacency with neighbor lists sorted by pass id for deterministic BFS.
std::vector<std::vector<Neighbor>> sorted_adjacency(const PassGraph& graph) {
  std::vector<std::vector<Neighbor>> adj(graph.vertex_count);
  for (const PassGraphEdge& e : graph.edges) {
    adj[e.u].push_back({e.v, e.cost});
    adj[e.v].push_back({e.u, e.cost});
  }
  for (auto& list : adj)
    std::sort(list.begin(), list.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
  return adj;
}

std::vector<int> connected_components(const std::vector<std::vector<Neighbor>>& adj) {
  std::vector<int> comp(adj.size(), -1);
  int count = 0;
  for (std::size_t s = 0; s < adj.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::queue<int> q;
    q.push(static_cast<int>(s));
    comp[s] = count;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (const Neighbor& n : adj[u]) {
        if (comp[n.vertex] < 0) {
          comp[n.vertex] = count;
          q.push(n.vertex);
        }
      }
    }
    ++count;
  }
  return comp;
}

// Vertices ordered by distance of their pass midpoint to v_s, id tie-break.
int nearest_vertex(const std::vector<int>& candidates, const std::vector<Pass>& passes,
                   const Point& v_s) {
  int best = -1;
  double best_d = std::numeric_limits<double>::infinity();
  for (const int v : candidates) {
    const double d = distance(passes[v].midpoint(), v_s);
    if (d < best_d || (d == best_d && v < best)) {
      best_d = d;
      best = v;
    }
  }
  return best;
}

// Cost of a BFS spanning forest over `vertices`, seeded repeatedly at the
// depot-nearest unreached vertex.
double spanning_cost(const std::vector<int>& vertices,
                     const std::vector<std::vector<Neighbor>>& adj,
                     const std::vector<Pass>& passes, const Point& v_s) {
  std::vector<char> in_set(adj.size(), 0);
  for (const int v : vertices) in_set[v] = 1;
  std::vector<char> reached(adj.size(), 0);
  double total = 0.0;

  std::vector<int> unreached = vertices;
  while (!unreached.empty()) {
    const int seed = nearest_vertex(unreached, passes, v_s);
    std::queue<int> q;
    q.push(seed);
    reached[seed] = 1;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (const Neighbor& n : adj[u]) {
        if (!in_set[n.vertex] || reached[n.vertex]) continue;
        reached[n.vertex] = 1;
        total += n.cost;
        q.push(n.vertex);
      }
    }
    std::erase_if(unreached, [&](int v) { return reached[v]; });
  }
  return total;
}

// Grows one cluster by FIFO BFS from the depot-nearest unassigned vertex.
// Growth stops the first time admitting a vertex would reach the budget;
// with absorb_all the budget is ignored and BFS restarts across gaps so
// every remaining vertex of `pool` is taken.
Cluster grow_cluster(int id, const std::vector<int>& pool, std::vector<char>& assigned,
                     const std::vector<std::vector<Neighbor>>& adj,
                     const std::vector<Pass>& passes, const Point& v_s, double budget,
                     bool absorb_all) {
  Cluster cluster;
  cluster.id = id;

  std::vector<int> unassigned;
  for (const int v : pool)
    if (!assigned[v]) unassigned.push_back(v);
  if (unassigned.empty()) return cluster;

  while (!unassigned.empty()) {
    const int seed = nearest_vertex(unassigned, passes, v_s);
    assigned[seed] = 1;
    cluster.pass_ids.push_back(seed);
    std::queue<int> q;
    q.push(seed);
    bool closed = false;
    while (!q.empty() && !closed) {
      const int u = q.front();
      q.pop();
      for (const Neighbor& n : adj[u]) {
        if (assigned[n.vertex]) continue;
        if (!absorb_all && cluster.size + n.cost >= budget - 1e-12) {
          closed = true;
          break;
        }
        assigned[n.vertex] = 1;
        cluster.pass_ids.push_back(n.vertex);
        cluster.size += n.cost;
        q.push(n.vertex);
      }
    }
    if (!absorb_all) break;  // only the absorbing cluster spans BFS gaps
    std::erase_if(unassigned, [&](int v) { return assigned[v]; });
  }
  return cluster;
}

// Largest-remainder apportionment of k clusters over component sizes with
// a minimum of one per component (requires k >= number of components).
std::vector<int> apportion(const std::vector<double>& sizes, int k) {
  const int c = static_cast<int>(sizes.size());
  std::vector<int> quota(c, 1);
  int extra = k - c;
  const double total = std::accumulate(sizes.begin(), sizes.end(), 0.0);
  if (extra <= 0) return quota;
  if (total <= 0.0) {
    for (int i = 0; extra > 0; i = (i + 1) % c, --extra) ++quota[i];
    return quota;
  }
  std::vector<double> remainder(c);
  int assigned = 0;
  for (int i = 0; i < c; ++i) {
    const double ideal = extra * sizes[i] / total;
    const int whole = static_cast<int>(ideal);
    quota[i] += whole;
    assigned += whole;
    remainder[i] = ideal - whole;
  }
  std::vector<int> idx(c);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return remainder[a] > remainder[b]; });
  for (int i = 0; i < extra - assigned; ++i) ++quota[idx[i]];
  return quota;
}

}  // namespace

std::vector<Cluster> bfs_clustering(const PassGraph& graph, const std::vector<Pass>& passes,
                                    int k, const Point& v_s) {
  if (k < 1) throw std::invalid_argument("cluster count k must be >= 1");
  if (graph.vertex_count == 0) throw std::invalid_argument("pass graph must be non-empty");

  const auto adj = sorted_adjacency(graph);
  const std::vector<int> comp = connected_components(adj);
  const int comp_count = 1 + *std::max_element(comp.begin(), comp.end());

  std::vector<std::vector<int>> members(comp_count);
  for (int v = 0; v < graph.vertex_count; ++v) members[comp[v]].push_back(v);
  std::vector<double> sizes(comp_count);
  for (int c = 0; c < comp_count; ++c) sizes[c] = spanning_cost(members[c], adj, passes, v_s);

  std::vector<char> assigned(graph.vertex_count, 0);
  std::vector<Cluster> clusters;

  if (k < comp_count) {
    // Fewer clusters than free-space components: each cluster takes whole
    // components, largest first onto the lightest cluster.
    std::vector<int> order(comp_count);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return sizes[a] > sizes[b]; });
    clusters.resize(k);
    std::vector<double> load(k, 0.0);
    for (int i = 0; i < k; ++i) clusters[i].id = i;
    for (const int c : order) {
      const int target = static_cast<int>(
          std::min_element(load.begin(), load.end()) - load.begin());
      Cluster grown = grow_cluster(clusters[target].id, members[c], assigned, adj, passes, v_s,
                                   0.0, /*absorb_all=*/true);
      clusters[target].pass_ids.insert(clusters[target].pass_ids.end(), grown.pass_ids.begin(),
                                       grown.pass_ids.end());
      clusters[target].size += grown.size;
      load[target] += sizes[c];
    }
    return clusters;
  }

  const std::vector<int> quotas = apportion(sizes, k);
  int next_id = 0;
  for (int c = 0; c < comp_count; ++c) {
    for (int j = 0; j < quotas[c]; ++j) {
      const bool last = j == quotas[c] - 1;
      std::vector<int> remaining;
      for (const int v : members[c])
        if (!assigned[v]) remaining.push_back(v);
      const double remaining_size = spanning_cost(remaining, adj, passes, v_s);
      const double budget = remaining_size / (quotas[c] - j);
      clusters.push_back(grow_cluster(next_id, members[c], assigned, adj, passes, v_s, budget,
                                      /*absorb_all=*/last));
      ++next_id;
    }
  }
  return clusters;
}

std::vector<Tour> solve_clusters(const std::vector<Pass>& passes, const PassGraph& graph,
                                 const PlanConfig& config, const Point& v_s) {
  const std::vector<Cluster> clusters = bfs_clustering(graph, passes, config.robots, v_s);

  std::vector<Tour> tours;
  tours.reserve(clusters.size());
  for (const Cluster& cluster : clusters) {
    if (cluster.pass_ids.empty()) {
      Tour empty;
      empty.robot_id = cluster.id;
      tours.push_back(std::move(empty));
      continue;
    }
    std::vector<int> ids = cluster.pass_ids;
    std::sort(ids.begin(), ids.end());
    std::vector<Pass> cluster_passes;
    cluster_passes.reserve(ids.size());
    for (const int id : ids) cluster_passes.push_back(passes[id]);

    const DubinsGraph sub = DubinsGraph::build(std::move(cluster_passes), config.turning_radius);
    const Route route = solve_route(sub, config.solver, config.seed);

    Tour tour;
    tour.robot_id = cluster.id;
    tour.stops = route.stops;
    tour.transitions = route.transitions;
    tour.cost = route_cost(route, v_s);
    tours.push_back(std::move(tour));
  }
  return tours;
}

std::vector<Tour> dcac(const OccupancyGrid& grid, const PlanConfig& config) {
  if (config.robots < 1) throw std::invalid_argument("robot count k must be >= 1");

  const std::vector<Cell> cells = bcd(grid);
  const std::vector<Pass> passes = gen_all_passes(cells, config.footprint, grid.height());
  if (passes.empty()) throw std::invalid_argument("map has no free space to cover");

  const PassGraph graph = build_pass_graph(passes, grid.resolution());
  return solve_clusters(passes, graph, config, grid.depot());
}

}  // namespace dubcov
