#include "dualnav/dewn.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <string>

namespace dualnav {

CollapsedProvider::CollapsedProvider(const MILProvider& base) : MILProvider(base.world_ptr()), base_(base) {}

std::vector<LocoState> CollapsedProvider::all_states() const {
  std::set<LocoState> out;
  for (const auto& st : base_.all_states()) out.insert(collapse(st));
  return {out.begin(), out.end()};
}

std::vector<Transition> CollapsedProvider::compute_successors(const LocoState& st) const {
  std::map<LocoState, Transition> best;
  auto k = static_cast<std::uint32_t>(world().orientations.count());
  for (std::uint32_t vh = 0; vh < k; ++vh) {
    for (std::uint32_t ph = 0; ph < k; ++ph) {
      for (const auto& t : base_.successors({st.v, HeadingId(vh), st.p, HeadingId(ph)})) {
        LocoState to = collapse(t.to);
        auto [it, fresh] = best.try_emplace(to, Transition{to, t.length, t.cost});
        if (!fresh) it->second.cost = std::min(it->second.cost, t.cost);
      }
    }
  }
  std::vector<Transition> out;
  for (auto& [s, t] : best) out.push_back(t);
  return out;
}

std::optional<RWPath> expand_collapsed(const MILProvider& base, const RWPath& collapsed, const LocoState& start) {
  RWPath path = RWPath::start_at(start);
  for (std::size_t i = 1; i < collapsed.states.size(); ++i) {
    const auto& want = collapsed.states[i];
    const Transition* best = nullptr;
    double best_clear = 0.0;
    for (const auto& t : base.successors(path.back())) {
      if (t.to.v != want.v || t.to.p != want.p) continue;
      double clear = base.clearance(t.to);
      if (!best || t.cost < best->cost - 1e-12 ||
          (t.cost <= best->cost + 1e-12 && (clear > best_clear + 1e-12 || (clear >= best_clear - 1e-12 && t.to < best->to))))
        best = &t, best_clear = clear;
    }
    if (!best) return std::nullopt;
    path.append(best->to, best->length, best->cost);
  }
  return path;
}

SolveResult dewn(const MILProvider& provider, const MILRange& range, const DROPQuery& query, const DewnOptions& opt,
                 DewnReport* report) {
  auto t0 = std::chrono::steady_clock::now();
  auto finish = [&](SolveResult r) {
    r.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  };
  DewnReport local;
  DewnReport& rep = report ? *report : local;
  validate_state(provider.world(), query.start);
  const auto& g = provider.world().vgraph;
  (void)g.node(query.target);

  if (query.start.v == query.target) {
    SolveResult r;
    r.status = Status::Feasible;
    r.path = RWPath::start_at(query.start);
    return finish(r);
  }

  if (opt.cos_simplify) {
    CollapsedProvider merged(provider);
    DewnOptions inner = opt;
    inner.cos_simplify = false;
    SolveResult r = dewn(merged, range, {CollapsedProvider::collapse(query.start), query.target, query.budget}, inner, &rep);
    if (r.path) {
      rep.collapsed_cost = r.path->cost;
      auto expanded = expand_collapsed(provider, *r.path, query.start);
      if (!expanded) {
        r.status = Status::Unrealizable;
        r.path.reset();
        r.note = "merged-heading path could not be re-expanded";
      } else {
        // Feasible refers to the merged space; the heading corrections may push the real cost past C.
        if (expanded->cost > query.budget + 1e-9)
          r.note = "re-expanded cost exceeds the budget by " + std::to_string(expanded->cost - query.budget);
        r.path = std::move(expanded);
      }
    }
    return finish(r);
  }

  SolveResult res;
  rep.multipliers = csms(g, query.start.v, query.target, query.budget, range, {opt.delta, 200});
  const auto& mult = rep.multipliers;
  if (mult.verdict == MultiplierVerdict::Infeasible) {
    res.status = Status::Infeasible;
    res.note = "least optimistic cost exceeds the budget";
    return finish(res);
  }
  if (mult.verdict == MultiplierVerdict::ShortestFeasible) {
    if (auto p = greedy_realize(provider, mult.shortest->nodes, query.start); p && p->cost <= query.budget + 1e-9) {
      rep.shortest_shortcut = true;
      res.status = Status::Feasible;
      res.path = std::move(p);
      return finish(res);
    }
  }

  Heuristics heur = build_heuristics(g, query.start.v, query.target, range);
  rep.reference = generate_reference(provider, query, mult, heur, opt.ordering);
  res.stats.expanded += rep.reference->expanded;
  if (rep.reference->status != Status::Feasible) {
    res.status = Status::ReferenceNotFound;
    res.note = "no feasible reference path up to the escalation cap";
    return finish(res);
  }
  const RWPath& ref = *rep.reference->path;
  if (opt.reference_only) {
    res.status = Status::Feasible;
    res.path = ref;
    return finish(res);
  }

  rep.pruning = ppnp(provider, query, ref.length, heur, opt.pruning);
  res.stats.expanded += rep.pruning->expanded;
  rep.lower = mult.shortest->length;
  rep.upper = ref.length;
  rep.dp = rounded_dp(provider, query, rep.pruning->trimmed, rep.lower, rep.upper, opt.epsilon);
  res.stats.labels = rep.dp->stats.labels;
  res.status = Status::Feasible;
  if (rep.dp->feasible() && rep.dp->path->length < ref.length - 1e-12) res.path = rep.dp->path;
  else res.path = ref;
  return finish(res);
}

}  // namespace dualnav
