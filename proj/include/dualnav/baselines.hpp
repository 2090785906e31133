#pragma once

#include <vector>

#include "dualnav/basic_dp.hpp"
#include "dualnav/csms.hpp"

namespace dualnav {

// Least total MIL over loco-states, ignoring length.
SolveResult mcp(const MILProvider& provider, const DROPQuery& query);

// Up to k loopless v-paths by length (deviation enumeration). Ties: fewer hops, then node ids.
std::vector<VPath> yen_ksp(const VirtualGraph& graph, NodeId source, NodeId target, int k);

struct KspResetOptions {
  int k = 5;
  int max_resets_per_edge = 256;  // guards against oscillation in tight rooms
};

// Straight physical walking with identity gains along each candidate, turning by Reset whenever the next
// step would collide. Reports the cheapest candidate even when it exceeds the budget.
SolveResult ksp_reset(const DualWorld& world, const CostModel& model, const DROPQuery& query,
                      const KspResetOptions& options = {});

// Constrained shortest v-path under beta edge costs, then greedily realized; feasibility is judged on the
// realized cost.
SolveResult cola(const MILProvider& provider, const MILRange& range, const DROPQuery& query, const CsmsOptions& options = {});

}  // namespace dualnav
