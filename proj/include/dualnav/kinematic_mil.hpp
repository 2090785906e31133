#pragma once

#include <mutex>
#include <unordered_map>

#include "dualnav/mil.hpp"

namespace dualnav {

struct CatalogConfig {
  int gain_samples = 21;     // per gain kind, spanning span_factor x the undetectable interval
  double span_factor = 2.0;
  bool allow_reset = true;
  bool allow_rotation = true;
  bool allow_curvature = true;
};

// MIL computed from the operation catalog: optional Reset, optional Rotation aligning the virtual heading
// with the edge, then one walk (Translation or Curvature) covering the edge.
class KinematicMILProvider final : public MILProvider {
 public:
  KinematicMILProvider(DualWorldPtr world, CostModel model, CatalogConfig catalog = {});

  const CostModel& cost_model() const { return model_; }
  const std::vector<double>& translation_gains() const { return t_gains_; }
  const std::vector<double>& rotation_gains() const { return r_gains_; }
  const std::vector<double>& curvature_gains() const { return c_gains_; }

  std::vector<LocoState> all_states() const override;
  std::optional<OperationSequence> realize(const LocoState& from, const LocoState& to) const override;
  void for_each_edge_minimum(const std::function<void(double, double)>& sink) const override;

 protected:
  std::vector<Transition> compute_successors(const LocoState& st) const override;

 private:
  struct TurnOption {
    int ph_offset = 0;  // lattice steps added to the physical heading
    double cost = 0.0;
    OperationSequence ops;
  };
  struct WalkOutcome {
    CellId cell;
    HeadingId heading;
    double cost = 0.0;
    RWOperation op;
  };
  using WalkKey = std::tuple<std::uint32_t, std::uint32_t, long long>;
  struct WalkKeyHash {
    std::size_t operator()(const WalkKey& k) const noexcept;
  };

  void build_turn_table();
  std::shared_ptr<const std::vector<WalkOutcome>> walks(CellId cell, HeadingId heading, double length) const;
  // Calls visit(target, cost, turn option, walk) for every catalog sequence leaving st towards `only` (or all).
  template <class Visit>
  void enumerate(const LocoState& st, std::optional<NodeId> only, Visit&& visit) const;

  CostModel model_;
  CatalogConfig catalog_;
  std::vector<double> t_gains_, r_gains_, c_gains_;
  std::vector<std::vector<TurnOption>> turn_table_;  // by relative virtual turn in lattice steps
  mutable std::mutex walk_mutex_;
  mutable std::unordered_map<WalkKey, std::shared_ptr<const std::vector<WalkOutcome>>, WalkKeyHash> walk_cache_;
};

}  // namespace dualnav
