#include "dualnav/basic_dp.hpp"

#include <chrono>
#include <cmath>
#include <queue>
#include <tuple>
#include <unordered_map>

#include "dualnav/errors.hpp"

namespace dualnav {

namespace {
struct LabelKey {
  LocoState state;
  long long key;
  bool operator==(const LabelKey&) const = default;
};
struct LabelKeyHash {
  std::size_t operator()(const LabelKey& k) const noexcept {
    return LocoStateHash{}(k.state) ^ (std::hash<long long>{}(k.key) * 0x9e3779b97f4a7c15ULL);
  }
};

RWPath trace(const std::vector<DPLabel>& labels, std::int64_t idx) {
  std::vector<std::int64_t> chain;
  for (std::int64_t i = idx; i >= 0; i = labels[i].pred) chain.push_back(i);
  RWPath path = RWPath::start_at(labels[chain.back()].state);
  for (auto it = chain.rbegin() + 1; it != chain.rend(); ++it) {
    const auto& cur = labels[*it];
    const auto& prev = labels[cur.pred];
    path.append(cur.state, cur.length - prev.length, cur.cost - prev.cost);
  }
  return path;
}

double elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}
}  // namespace

LabelDPResult label_dp(const MILProvider& provider, const DROPQuery& query, const LabelDPConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  validate_state(provider.world(), query.start);
  (void)provider.world().vgraph.node(query.target);
  LabelDPResult out;
  std::vector<DPLabel> labels;
  std::unordered_map<LabelKey, std::int64_t, LabelKeyHash> index;
  std::vector<char> settled;
  using Entry = std::tuple<long long, double, LocoState, std::int64_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;

  labels.push_back({query.start, 0, 0.0, 0.0, -1});
  settled.push_back(0);
  index.emplace(LabelKey{query.start, 0}, 0);
  open.emplace(0, 0.0, query.start, 0);
  std::size_t expanded = 0;
  std::int64_t found = -1;
  // Cheapest settled cost per state; every settled label has a key no larger than anything still open.
  std::unordered_map<LocoState, double> settled_cost;
  auto dominated = [&](const LocoState& st, double c) {
    if (!cfg.prune_dominated) return false;
    auto it = settled_cost.find(st);
    return it != settled_cost.end() && it->second <= c + 1e-12;
  };

  while (!open.empty()) {
    auto [key, cost, st, idx] = open.top();
    open.pop();
    if (settled[idx] || labels[idx].cost < cost) continue;
    if (dominated(st, cost)) continue;
    settled[idx] = 1;
    if (cfg.prune_dominated) settled_cost[st] = cost;
    if (st.v == query.target) {
      found = idx;
      break;
    }
    ++expanded;
    for (const auto& t : provider.successors(st)) {
      if (cfg.allowed && !cfg.allowed->count(t.to)) continue;
      double nc = cost + t.cost;
      if (nc > query.budget + 1e-9) continue;
      double q = t.length / cfg.unit;
      long long step = cfg.round_up ? static_cast<long long>(std::ceil(q - 1e-9)) : std::llround(q);
      long long nk = key + step;
      if (nk > cfg.max_key || dominated(t.to, nc)) continue;
      LabelKey lk{t.to, nk};
      auto it = index.find(lk);
      if (it != index.end()) {
        auto& lab = labels[it->second];
        if (settled[it->second] || lab.cost <= nc + 1e-12) continue;
        lab.cost = nc;
        lab.length = labels[idx].length + t.length;
        lab.pred = idx;
        open.emplace(nk, nc, t.to, it->second);
      } else {
        std::int64_t ni = static_cast<std::int64_t>(labels.size());
        labels.push_back({t.to, nk, labels[idx].length + t.length, nc, idx});
        settled.push_back(0);
        index.emplace(lk, ni);
        open.emplace(nk, nc, t.to, ni);
      }
    }
  }

  out.result.stats.expanded = expanded;
  out.result.stats.labels = labels.size();
  if (found >= 0) {
    out.result.status = Status::Feasible;
    out.result.path = trace(labels, found);
  } else {
    out.result.status = Status::Infeasible;
  }
  if (cfg.keep_labels) {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (settled[i]) out.labels.push_back(labels[i]);
  }
  out.result.stats.seconds = elapsed(t0);
  return out;
}

SolveResult min_cost_path(const MILProvider& provider, const DROPQuery& query, const StateSet* allowed) {
  auto t0 = std::chrono::steady_clock::now();
  validate_state(provider.world(), query.start);
  (void)provider.world().vgraph.node(query.target);
  struct Info {
    double cost, length;
    LocoState pred;
    bool has_pred, done;
  };
  std::unordered_map<LocoState, Info> info;
  using Entry = std::tuple<double, double, LocoState>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  info[query.start] = {0.0, 0.0, query.start, false, false};
  open.emplace(0.0, 0.0, query.start);
  SolveResult res;
  std::optional<LocoState> goal;
  while (!open.empty()) {
    auto [c, l, st] = open.top();
    open.pop();
    auto& me = info[st];
    if (me.done || c > me.cost || (c == me.cost && l > me.length)) continue;
    me.done = true;
    if (st.v == query.target) {
      goal = st;
      break;
    }
    ++res.stats.expanded;
    for (const auto& t : provider.successors(st)) {
      if (allowed && !allowed->count(t.to)) continue;
      double nc = c + t.cost, nl = l + t.length;
      auto it = info.find(t.to);
      if (it != info.end() && (it->second.done || it->second.cost < nc - 1e-12 ||
                               (it->second.cost <= nc + 1e-12 && it->second.length <= nl + 1e-12)))
        continue;
      info[t.to] = {nc, nl, st, true, false};
      open.emplace(nc, nl, t.to);
    }
  }
  res.stats.labels = info.size();
  if (goal) {
    std::vector<LocoState> chain{*goal};
    while (info[chain.back()].has_pred) chain.push_back(info[chain.back()].pred);
    std::reverse(chain.begin(), chain.end());
    res.path = path_from_states(provider, chain);
    res.status = res.path->cost <= query.budget + 1e-9 ? Status::Feasible : Status::Infeasible;
  } else {
    res.status = Status::Infeasible;
  }
  res.stats.seconds = elapsed(t0);
  return res;
}

SolveResult basic_dp(const MILProvider& provider, const DROPQuery& query) {
  auto t0 = std::chrono::steady_clock::now();
  SolveResult cheapest = min_cost_path(provider, query);
  if (!cheapest.feasible()) {
    cheapest.path.reset();
    cheapest.stats.seconds = elapsed(t0);
    return cheapest;
  }
  LabelDPConfig cfg;
  SolveResult res = label_dp(provider, query, cfg).result;
  res.stats.seconds = elapsed(t0);
  return res;
}

}  // namespace dualnav
