#pragma once

#include <map>

#include "dualnav/basic_dp.hpp"
#include "dualnav/heuristics.hpp"

namespace dualnav {

struct PruningOptions {
  bool ilsp = true;  // drop locations whose least alpha cost through them exceeds the budget
  bool slsp = true;  // drop locations whose shortest length through them exceeds the best known length
  bool ulsl = true;  // shelve states whose current labels cannot yet lead to a better feasible path
};

struct NodePruneCounts {
  std::size_t popped = 0, ilsp = 0, slsp = 0;
};

struct PpnpResult {
  StateSet trimmed;          // the visited space handed to the rounded DP
  double upper_bound = 0.0;  // best certified feasible length at the end
  std::size_t ilsp_pruned = 0, slsp_pruned = 0, locks = 0, unlocks = 0, exact_rounds = 0, expanded = 0;
  std::map<NodeId, NodePruneCounts> per_node;
};

PpnpResult ppnp(const MILProvider& provider, const DROPQuery& query, double reference_length, const Heuristics& heuristics,
                const PruningOptions& options = {});

}  // namespace dualnav
