#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "dualnav/mil_range.hpp"
#include "dualnav/virtual_world.hpp"

namespace dualnav {

struct VPath {
  std::vector<NodeId> nodes;
  double length = 0.0;
  double bound = 0.0;  // summed per-edge bound (alpha or beta) along the path
};

using EdgeWeight = std::function<double(double length)>;

// Single-source Dijkstra under `weight` (infinite weights remove the edge). Ties: shorter, then lower node ids.
struct ShortestTree {
  std::vector<double> dist;
  std::vector<double> length;  // virtual length along the chosen tree path
  std::vector<double> bound;   // summed `bound` along the chosen tree path
  std::vector<std::optional<NodeId>> pred;
  std::optional<VPath> path_to(NodeId target) const;
};

ShortestTree dijkstra_tree(const VirtualGraph& graph, NodeId source, const EdgeWeight& weight, const EdgeWeight& bound);
std::optional<VPath> dijkstra_path(const VirtualGraph& graph, NodeId s, NodeId t, const EdgeWeight& weight,
                                   const EdgeWeight& bound);

// Hop-count diameter of the graph (largest finite BFS distance).
int hop_diameter(const VirtualGraph& graph);

}  // namespace dualnav
