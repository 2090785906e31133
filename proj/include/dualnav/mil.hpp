#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "dualnav/cost_model.hpp"
#include "dualnav/loco_state.hpp"

namespace dualnav {

struct Transition {
  LocoState to;
  double length = 0.0;  // virtual edge length, 0 for in-place transitions
  double cost = 0.0;    // MIL of this neighbouring pair
};

// Source of loco-state transitions with their minimum immersion loss.
// successors() is memoised and safe to call from several threads.
class MILProvider {
 public:
  explicit MILProvider(DualWorldPtr world);
  virtual ~MILProvider() = default;
  MILProvider(const MILProvider&) = delete;
  MILProvider& operator=(const MILProvider&) = delete;

  const DualWorld& world() const { return *world_; }
  DualWorldPtr world_ptr() const { return world_; }

  // Realizable neighbours with their MIL; the span stays valid for the provider's lifetime.
  std::span<const Transition> successors(const LocoState& st) const;
  // nullopt when the pair is neighbouring but unrealizable. Throws Error{NotNeighbors}.
  std::optional<double> mil(const LocoState& from, const LocoState& to) const;
  virtual std::optional<OperationSequence> realize(const LocoState& from, const LocoState& to) const;

  virtual std::vector<LocoState> all_states() const = 0;
  // Physical clearance of the state's cell, used for tie-breaking.
  virtual double clearance(const LocoState& st) const;
  // Calls sink(edge length, min cost over targets) once per (source state, v-edge) pair with a realizable target.
  virtual void for_each_edge_minimum(const std::function<void(double, double)>& sink) const;

  std::size_t memo_size() const;
  void clear_memo() const;

 protected:
  virtual std::vector<Transition> compute_successors(const LocoState& st) const = 0;

 private:
  DualWorldPtr world_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<LocoState, std::unique_ptr<const std::vector<Transition>>> memo_;
  mutable std::unordered_map<CellId, double> clearance_cache_;
  mutable std::shared_mutex clearance_mutex_;
};

struct MILRecord {
  LocoState from;
  LocoState to;
  double cost = 0.0;
};

// Explicit transition table. Both directions must be listed when wanted.
class TableMILProvider final : public MILProvider {
 public:
  TableMILProvider(DualWorldPtr world, std::vector<MILRecord> records, std::vector<LocoState> extra_states = {});
  std::vector<LocoState> all_states() const override { return states_; }
  std::optional<OperationSequence> realize(const LocoState&, const LocoState&) const override { return std::nullopt; }
  const std::vector<MILRecord>& records() const { return records_; }

 protected:
  std::vector<Transition> compute_successors(const LocoState& st) const override;

 private:
  std::vector<MILRecord> records_;
  std::vector<LocoState> states_;
  std::unordered_map<LocoState, std::vector<Transition>> table_;
};

}  // namespace dualnav
