#pragma once

#include <memory>
#include <vector>

#include "dualnav/mil.hpp"
#include "dualnav/rw_path.hpp"

namespace dualnav {

struct KnapsackItem {
  int weight = 0;
  int value = 0;
};

// DROP instance whose optimum encodes a 0/1 knapsack optimum. Gadget i links a_i to a_{i+1} directly
// (length V+2, no cost) or via b_{i+1} (lengths V-v+1 and 1, cost w), V the largest value.
struct KnapsackReduction {
  std::vector<KnapsackItem> items;
  int capacity = 0;
  std::shared_ptr<TableMILProvider> provider;
  DROPQuery query;
  std::vector<NodeId> a_nodes, b_nodes;

  // Items chosen by a path: those whose b-node it visits.
  std::vector<int> decode(const RWPath& path) const;
  int value_of(const std::vector<int>& chosen) const;
};

KnapsackReduction kp_to_drop(const std::vector<KnapsackItem>& items, int capacity);

}  // namespace dualnav
