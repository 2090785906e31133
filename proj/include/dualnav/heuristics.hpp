#pragma once

#include <vector>

#include "dualnav/mil.hpp"
#include "dualnav/vgraph_search.hpp"

namespace dualnav {

// Per-node single-world bounds for one (source, target) pair.
struct Heuristics {
  NodeId source, target;
  std::vector<double> len_to_target;     // remaining shortest length (MRL)
  std::vector<double> alpha_to_target;   // remaining least alpha cost (MRC)
  std::vector<double> beta_to_target;    // remaining least beta cost
  std::vector<double> beta_on_shortest;  // beta cost along the remaining shortest path
  std::vector<double> len_from_source;
  std::vector<double> alpha_from_source;
  std::vector<std::optional<NodeId>> next_on_shortest;  // towards the target
  std::vector<double> naturalness;  // |x - source| + |x - target| in the virtual plane

  double mrl(const LocoState& st) const { return len_to_target[st.v.value]; }
  double mrc(const LocoState& st) const { return alpha_to_target[st.v.value]; }
  double estimate(const LocoState& st, double r) const { return mrl(st) + r * mrc(st); }
  std::vector<NodeId> shortest_to_target(NodeId from) const;
};

Heuristics build_heuristics(const VirtualGraph& graph, NodeId source, NodeId target, const MILRange& range);

}  // namespace dualnav
