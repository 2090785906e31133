#include "dualnav/rw_path.hpp"

#include "dualnav/errors.hpp"

namespace dualnav {

const char* to_string(Status s) {
  switch (s) {
    case Status::Feasible: return "Feasible";
    case Status::Infeasible: return "Infeasible";
    case Status::Unrealizable: return "Unrealizable";
    case Status::ReferenceNotFound: return "ReferenceNotFound";
  }
  return "?";
}

void RWPath::append(const LocoState& to, double hop_length, double hop_cost, OperationSequence ops) {
  states.push_back(to);
  hop_lengths.push_back(hop_length);
  hop_costs.push_back(hop_cost);
  hop_ops.push_back(std::move(ops));
  length += hop_length;
  cost += hop_cost;
}

std::vector<NodeId> RWPath::v_path() const {
  std::vector<NodeId> out;
  for (const auto& s : states)
    if (out.empty() || out.back() != s.v) out.push_back(s.v);
  return out;
}

RWPath path_from_states(const MILProvider& provider, std::span<const LocoState> states) {
  if (states.empty()) throw Error(ErrorKind::NotAPath, "empty state sequence");
  RWPath path = RWPath::start_at(states.front());
  for (std::size_t i = 0; i + 1 < states.size(); ++i) {
    const Transition* hop = nullptr;
    for (const auto& t : provider.successors(states[i]))
      if (t.to == states[i + 1]) hop = &t;
    if (!hop) {
      (void)provider.mil(states[i], states[i + 1]);  // throws NotNeighbors for non-adjacent locations
      throw Error(ErrorKind::NotAPath, "unrealizable hop in state sequence");
    }
    path.append(hop->to, hop->length, hop->cost);
  }
  return path;
}

void attach_operations(const MILProvider& provider, RWPath& path) {
  for (std::size_t i = 0; i < path.hops(); ++i)
    if (path.hop_ops[i].empty())
      if (auto ops = provider.realize(path.states[i], path.states[i + 1])) path.hop_ops[i] = std::move(*ops);
}

std::optional<RWPath> greedy_realize(const MILProvider& provider, std::span<const NodeId> v_path, const LocoState& start) {
  if (v_path.empty() || v_path.front() != start.v) throw Error(ErrorKind::NotAPath, "v-path must begin at the start state");
  const auto& g = provider.world().vgraph;
  for (std::size_t i = 0; i + 1 < v_path.size(); ++i)
    if (!g.edge_length(v_path[i], v_path[i + 1])) throw Error(ErrorKind::NotAPath, "consecutive v-path nodes are not adjacent");
  RWPath path = RWPath::start_at(start);
  for (std::size_t i = 1; i < v_path.size(); ++i) {
    const Transition* best = nullptr;
    double best_clear = 0.0;
    for (const auto& t : provider.successors(path.back())) {
      if (t.to.v != v_path[i]) continue;
      double clear = provider.clearance(t.to);
      bool better = !best || t.cost < best->cost - 1e-12 ||
                    (t.cost <= best->cost + 1e-12 && (clear > best_clear + 1e-12 || (clear >= best_clear - 1e-12 && t.to < best->to)));
      if (better) best = &t, best_clear = clear;
    }
    if (!best) return std::nullopt;
    path.append(best->to, best->length, best->cost);
  }
  return path;
}

}  // namespace dualnav
