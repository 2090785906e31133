#pragma once

#include <optional>

#include "dualnav/vgraph_search.hpp"

namespace dualnav {

enum class MultiplierVerdict { Multipliers, ShortestFeasible, Infeasible };
const char* to_string(MultiplierVerdict v);

// One secant search on l + r * bound. `feasible` holds the best path found within budget side,
// `infeasible` the best path on the other side.
struct MultiplierSide {
  double r_star = 0.0;
  std::optional<VPath> feasible;
  std::optional<VPath> infeasible;
  int iterations = 0;
  bool valid = false;  // false when no path has a finite bound
};

struct MultiplierResult {
  MultiplierVerdict verdict = MultiplierVerdict::Infeasible;
  std::optional<VPath> shortest;
  MultiplierSide alpha;  // over the optimistic (alpha) weights
  MultiplierSide beta;   // over the pessimistic (beta) weights
};

struct CsmsOptions {
  std::optional<double> delta = 1e-3;  // relative step below which the search stops; nullopt disables
  int max_iterations = 200;
};

MultiplierResult csms(const VirtualGraph& graph, NodeId source, NodeId target, double budget, const MILRange& range,
                      const CsmsOptions& options = {});

// Secant search for a single bound function; exposed for the COLA baseline.
MultiplierSide secant_search(const VirtualGraph& graph, NodeId source, NodeId target, double budget,
                             const EdgeWeight& bound, const CsmsOptions& options);

}  // namespace dualnav
