#include "dualnav/idws.hpp"

#include <chrono>
#include <cmath>
#include <queue>
#include <tuple>
#include <unordered_map>

namespace dualnav {

double ordering_tie_key(double naturalness, double clearance, const OrderingOptions& o) {
  return (o.vwno ? naturalness : 0.0) - (o.pwso ? clearance : 0.0);
}

SolveResult idws(const MILProvider& provider, const DROPQuery& query, double r, const Heuristics& heur,
                 const OrderingOptions& ordering) {
  auto t0 = std::chrono::steady_clock::now();
  validate_state(provider.world(), query.start);
  struct Node {
    double g, length, cost;
    LocoState pred;
    bool has_pred, closed;
  };
  std::unordered_map<LocoState, Node> nodes;
  // f is compared on a 1e-9 grid so that values equal up to rounding fall through to the tie keys.
  using Entry = std::tuple<long long, double, LocoState, double>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  auto push = [&](const LocoState& st, double g) {
    double h = ordering.teco ? heur.estimate(st, r) : 0.0;
    if (!std::isfinite(h)) return;
    double tie = ordering_tie_key(heur.naturalness[st.v.value], provider.clearance(st), ordering);
    open.emplace(std::llround((g + h) * 1e9), tie, st, g);
  };
  nodes[query.start] = {0.0, 0.0, 0.0, query.start, false, false};
  push(query.start, 0.0);
  SolveResult res;
  std::optional<LocoState> goal;
  while (!open.empty()) {
    auto [fk, tie, st, g] = open.top();
    open.pop();
    auto& me = nodes[st];
    if (me.closed || g > me.g + 1e-12) continue;
    me.closed = true;
    if (st.v == query.target) {
      goal = st;
      break;
    }
    ++res.stats.expanded;
    const double base_g = me.g, base_len = me.length, base_cost = me.cost;
    for (const auto& t : provider.successors(st)) {
      double ng = base_g + t.length + r * t.cost;
      auto it = nodes.find(t.to);
      if (it != nodes.end() && ng >= it->second.g - 1e-12) continue;
      nodes[t.to] = {ng, base_len + t.length, base_cost + t.cost, st, true, false};
      push(t.to, ng);
    }
  }
  res.stats.labels = nodes.size();
  if (goal) {
    std::vector<LocoState> chain{*goal};
    while (nodes[chain.back()].has_pred) chain.push_back(nodes[chain.back()].pred);
    std::reverse(chain.begin(), chain.end());
    res.path = path_from_states(provider, chain);
    res.status = res.path->cost <= query.budget + 1e-9 ? Status::Feasible : Status::Infeasible;
  } else {
    res.status = Status::Unrealizable;
  }
  res.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

ReferenceResult generate_reference(const MILProvider& provider, const DROPQuery& query, const MultiplierResult& mult,
                                   const Heuristics& heur, const OrderingOptions& ordering) {
  ReferenceResult out;
  auto consider = [&](double r) {
    SolveResult run = idws(provider, query, r, heur, ordering);
    out.expanded += run.stats.expanded;
    if (!run.path) return;
    out.runs.emplace_back(r, *run.path);
    if (run.feasible() && (!out.path || run.path->length < out.path->length - 1e-12)) {
      out.path = run.path;
      out.multiplier = r;
      out.status = Status::Feasible;
    }
  };
  std::vector<double> rs;
  if (mult.alpha.valid) rs.push_back(mult.alpha.r_star);
  if (mult.beta.valid) rs.push_back(mult.beta.r_star);
  if (rs.empty()) rs.push_back(0.0);
  for (double r : rs) consider(r);
  if (out.path) return out;
  double base = mult.beta.valid && mult.beta.r_star > 0 ? mult.beta.r_star : std::max(1.0, rs.back());
  for (double r = 2.0 * base; r <= 1024.0 * base * (1.0 + 1e-12) && !out.path; r *= 2.0) consider(r);
  return out;
}

}  // namespace dualnav
