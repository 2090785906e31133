#pragma once

#include <vector>

#include "dualnav/csms.hpp"
#include "dualnav/heuristics.hpp"
#include "dualnav/rw_path.hpp"

namespace dualnav {

struct OrderingOptions {
  bool teco = true;  // f = g + h; off means plain g
  bool pwso = true;  // ties favour more physical clearance
  bool vwno = true;  // ties favour virtually natural locations
};

// Tie key used when f values agree: smaller goes first.
double ordering_tie_key(double naturalness, double clearance, const OrderingOptions& options);

// Best-first search for the path minimising length + r * cost. Status reflects the budget.
SolveResult idws(const MILProvider& provider, const DROPQuery& query, double r, const Heuristics& heuristics,
                 const OrderingOptions& ordering = {});

struct ReferenceResult {
  Status status = Status::ReferenceNotFound;
  std::optional<RWPath> path;
  double multiplier = 0.0;  // r of the chosen run
  std::vector<std::pair<double, RWPath>> runs;
  std::size_t expanded = 0;
};

// Runs IDWS at both multipliers and keeps the shortest feasible path; doubles r up to 2^10 times the
// beta multiplier when neither is feasible.
ReferenceResult generate_reference(const MILProvider& provider, const DROPQuery& query, const MultiplierResult& multipliers,
                                   const Heuristics& heuristics, const OrderingOptions& ordering = {});

}  // namespace dualnav
