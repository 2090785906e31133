#pragma once

#include <limits>
#include <unordered_set>

#include "dualnav/rw_path.hpp"

namespace dualnav {

using StateSet = std::unordered_set<LocoState>;

struct DPLabel {
  LocoState state;
  long long key = 0;  // accumulated length in quanta
  double length = 0.0;
  double cost = 0.0;
  std::int64_t pred = -1;
};

struct LabelDPConfig {
  double unit = 1e-9;
  bool round_up = false;  // per-edge ceil (rounded DP) instead of nearest
  const StateSet* allowed = nullptr;
  long long max_key = std::numeric_limits<long long>::max();
  bool keep_labels = false;
  // Drop a label when an earlier-settled label at the same state is no dearer. Answer-preserving.
  bool prune_dominated = true;
};

struct LabelDPResult {
  SolveResult result;
  std::vector<DPLabel> labels;  // settled labels, when requested
};

// Label-setting over (loco-state, quantised length); labels over budget are dropped. Returns the first
// destination label in (length, cost, state) order.
LabelDPResult label_dp(const MILProvider& provider, const DROPQuery& query, const LabelDPConfig& config);

// Exact dynamic program; answers Infeasible up front when even the cheapest path exceeds the budget.
SolveResult basic_dp(const MILProvider& provider, const DROPQuery& query);

// Dijkstra on MIL (ties: shorter, then lexicographic). Feasible iff the cheapest cost is within budget.
SolveResult min_cost_path(const MILProvider& provider, const DROPQuery& query, const StateSet* allowed = nullptr);

}  // namespace dualnav
