#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dualnav/mil.hpp"

namespace dualnav {

struct RWPath {
  std::vector<LocoState> states;
  std::vector<double> hop_lengths;
  std::vector<double> hop_costs;
  std::vector<OperationSequence> hop_ops;  // empty entries when the provider has no realisation
  double length = 0.0;
  double cost = 0.0;

  static RWPath start_at(const LocoState& st) { return RWPath{{st}, {}, {}, {}, 0.0, 0.0}; }
  void append(const LocoState& to, double hop_length, double hop_cost, OperationSequence ops = {});
  const LocoState& back() const { return states.back(); }
  std::size_t hops() const { return hop_lengths.size(); }
  // Virtual node sequence with in-place hops collapsed.
  std::vector<NodeId> v_path() const;
};

struct DROPQuery {
  LocoState start;
  NodeId target;
  double budget = 0.0;
};

enum class Status { Feasible, Infeasible, Unrealizable, ReferenceNotFound };
const char* to_string(Status s);

struct SearchStats {
  std::size_t expanded = 0;
  std::size_t labels = 0;
  double seconds = 0.0;
};

struct SolveResult {
  Status status = Status::Infeasible;
  std::optional<RWPath> path;
  SearchStats stats;
  std::string note;
  bool feasible() const { return status == Status::Feasible; }
};

// Builds a path from consecutive loco-states using provider MILs. Throws Error{NotNeighbors} / Error{NotAPath}.
RWPath path_from_states(const MILProvider& provider, std::span<const LocoState> states);
// Fills hop_ops from the provider where it can realise the hop.
void attach_operations(const MILProvider& provider, RWPath& path);

// Walks the v-path choosing the cheapest realizable successor each hop (ties: more physical clearance,
// then lexicographic). nullopt when some hop has no realizable successor.
std::optional<RWPath> greedy_realize(const MILProvider& provider, std::span<const NodeId> v_path, const LocoState& start);

}  // namespace dualnav
