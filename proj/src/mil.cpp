#include "dualnav/mil.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>

#include "dualnav/errors.hpp"

namespace dualnav {

MILProvider::MILProvider(DualWorldPtr world) : world_(std::move(world)) {
  if (!world_) throw Error(ErrorKind::InvalidInput, "null world");
}

std::span<const Transition> MILProvider::successors(const LocoState& st) const {
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(st);
    if (it != memo_.end()) return *it->second;
  }
  auto computed = std::make_unique<const std::vector<Transition>>(compute_successors(st));
  std::unique_lock lock(mutex_);
  auto [it, inserted] = memo_.try_emplace(st, std::move(computed));
  return *it->second;
}

std::optional<double> MILProvider::mil(const LocoState& from, const LocoState& to) const {
  if (from.v != to.v && !world_->vgraph.edge_length(from.v, to.v))
    throw Error(ErrorKind::NotNeighbors, "virtual locations are not adjacent");
  for (const auto& t : successors(from))
    if (t.to == to) return t.cost;
  return std::nullopt;
}

std::optional<OperationSequence> MILProvider::realize(const LocoState&, const LocoState&) const { return std::nullopt; }

double MILProvider::clearance(const LocoState& st) const {
  {
    std::shared_lock lock(clearance_mutex_);
    auto it = clearance_cache_.find(st.p);
    if (it != clearance_cache_.end()) return it->second;
  }
  double c = world_->grid.cell_count() > st.p.value ? world_->grid.clearance(st.p) : 0.0;
  std::unique_lock lock(clearance_mutex_);
  clearance_cache_.emplace(st.p, c);
  return c;
}

void MILProvider::for_each_edge_minimum(const std::function<void(double, double)>& sink) const {
  for (const auto& st : all_states()) {
    std::map<NodeId, std::pair<double, double>> best;  // target node -> (length, min cost)
    for (const auto& t : compute_successors(st)) {
      if (t.to.v == st.v) continue;
      auto [it, fresh] = best.try_emplace(t.to.v, t.length, t.cost);
      if (!fresh) it->second.second = std::min(it->second.second, t.cost);
    }
    for (const auto& [node, lc] : best) sink(lc.first, lc.second);
  }
}

std::size_t MILProvider::memo_size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

void MILProvider::clear_memo() const {
  std::unique_lock lock(mutex_);
  memo_.clear();
}

TableMILProvider::TableMILProvider(DualWorldPtr world, std::vector<MILRecord> records, std::vector<LocoState> extra)
    : MILProvider(std::move(world)), records_(std::move(records)) {
  const auto& g = this->world().vgraph;
  std::vector<LocoState> states = std::move(extra);
  for (const auto& r : records_) {
    double len = 0.0;
    if (r.from.v != r.to.v) {
      auto l = g.edge_length(r.from.v, r.to.v);
      if (!l) throw Error(ErrorKind::NotNeighbors, "table record between non-adjacent virtual locations");
      len = *l;
    }
    if (r.cost < 0) throw Error(ErrorKind::InvalidInput, "negative MIL in table");
    auto& out = table_[r.from];
    auto it = std::find_if(out.begin(), out.end(), [&](const Transition& t) { return t.to == r.to; });
    if (it == out.end()) out.push_back({r.to, len, r.cost});
    else it->cost = std::min(it->cost, r.cost);
    states.push_back(r.from);
    states.push_back(r.to);
  }
  std::sort(states.begin(), states.end());
  states.erase(std::unique(states.begin(), states.end()), states.end());
  states_ = std::move(states);
}

std::vector<Transition> TableMILProvider::compute_successors(const LocoState& st) const {
  auto it = table_.find(st);
  if (it == table_.end()) return {};
  return it->second;
}

}  // namespace dualnav
