#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "dualnav/rw_path.hpp"

namespace oracles {

using namespace dualnav;

struct Best {
  double length = 0.0, cost = 0.0;
  std::vector<LocoState> states;
};

// Exhaustive search over simple loco-state paths (cycles never help with non-negative lengths and costs).
// Returns the shortest path within budget, ties by cost.
std::optional<Best> shortest_within_budget(const MILProvider& provider, const DROPQuery& query);

// Least total MIL over all simple loco-state paths to the target.
std::optional<double> least_cost(const MILProvider& provider, const DROPQuery& query);

// Every simple v-path from s to t (node sequences), for small graphs.
std::vector<std::vector<NodeId>> all_simple_vpaths(const VirtualGraph& graph, NodeId s, NodeId t);

}  // namespace oracles
