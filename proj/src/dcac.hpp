#pragma once

#include <vector>

#include "dcrc.hpp"
#include "passes.hpp"

namespace dubcov {

// Connected group of passes grown by BFS. `size` is the summed cost of the
// BFS tree edges used to discover its members.
struct Cluster {
  int id = -1;
  std::vector<int> pass_ids;  // in BFS discovery order
  double size = 0.0;
};

// Partitions the graph's vertices into k clusters. Each cluster grows by
// BFS from the unassigned pass nearest the depot and closes when admitting
// the next vertex would reach its share of the remaining spanning cost;
// the final cluster of each component absorbs the leftovers. Components
// get their own cluster quota, apportioned by size (largest remainder,
// at least one each while k allows).
std::vector<Cluster> bfs_clustering(const PassGraph& graph, const std::vector<Pass>& passes,
                                    int k, const Point& v_s);

// Full area-clustering pipeline: decompose, generate passes, cluster, then
// solve one coverage route per cluster.
std::vector<Tour> dcac(const OccupancyGrid& grid, const PlanConfig& config);

// Clustering plus per-cluster route solving over precomputed passes.
std::vector<Tour> solve_clusters(const std::vector<Pass>& passes, const PassGraph& graph,
                                 const PlanConfig& config, const Point& v_s);

}  // namespace dubcov
