#pragma once

#include <optional>

#include "dualnav/idws.hpp"
#include "dualnav/ppnp.hpp"
#include "dualnav/rounded_dp.hpp"

namespace dualnav {

struct DewnOptions {
  double epsilon = 0.1;
  std::optional<double> delta = 1e-3;
  bool cos_simplify = false;
  bool reference_only = false;
  PruningOptions pruning;
  OrderingOptions ordering;
};

struct DewnReport {
  MultiplierResult multipliers;
  std::optional<ReferenceResult> reference;
  std::optional<PpnpResult> pruning;
  std::optional<SolveResult> dp;
  double lower = 0.0, upper = 0.0;
  bool shortest_shortcut = false;
  double collapsed_cost = 0.0;  // cost on the merged-heading space when COS is on
};

SolveResult dewn(const MILProvider& provider, const MILRange& range, const DROPQuery& query, const DewnOptions& options = {},
                 DewnReport* report = nullptr);

// Loco-states with equal locations merged: headings pinned to index 0 and MIL minimised over them.
class CollapsedProvider final : public MILProvider {
 public:
  explicit CollapsedProvider(const MILProvider& base);
  static LocoState collapse(const LocoState& st) { return {st.v, HeadingId(0), st.p, HeadingId(0)}; }
  std::vector<LocoState> all_states() const override;
  double clearance(const LocoState& st) const override { return base_.clearance(st); }

 protected:
  std::vector<Transition> compute_successors(const LocoState& st) const override;

 private:
  const MILProvider& base_;
};

// Re-expands a merged-heading path on the base space: each hop takes the cheapest base transition that
// lands on the same locations. nullopt when a hop cannot be matched.
std::optional<RWPath> expand_collapsed(const MILProvider& base, const RWPath& collapsed, const LocoState& start);

}  // namespace dualnav
