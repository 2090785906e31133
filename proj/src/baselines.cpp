#include "dualnav/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <queue>
#include <set>
#include <tuple>

#include "dualnav/errors.hpp"

namespace dualnav {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct PathOrder {
  bool operator()(const VPath& a, const VPath& b) const {
    if (std::abs(a.length - b.length) > 1e-12) return a.length < b.length;
    if (a.nodes.size() != b.nodes.size()) return a.nodes.size() < b.nodes.size();
    return a.nodes < b.nodes;
  }
};

// Shortest path avoiding banned nodes and directed edges.
std::optional<VPath> restricted_shortest(const VirtualGraph& g, NodeId s, NodeId t, const std::vector<char>& banned_node,
                                         const std::set<std::pair<std::uint32_t, std::uint32_t>>& banned_edge) {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(g.node_count(), inf);
  std::vector<std::int64_t> pred(g.node_count(), -1);
  using Item = std::pair<double, std::uint32_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[s.value] = 0.0;
  pq.push({0.0, s.value});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d > dist[u]) continue;
    if (u == t.value) break;
    for (const auto& e : g.neighbors(NodeId(u))) {
      if (banned_node[e.to.value] || banned_edge.count({u, e.to.value})) continue;
      double nd = d + e.length;
      if (nd < dist[e.to.value] - 1e-12 || (nd <= dist[e.to.value] + 1e-12 && static_cast<std::int64_t>(u) < pred[e.to.value])) {
        dist[e.to.value] = std::min(nd, dist[e.to.value]);
        pred[e.to.value] = u;
        pq.push({dist[e.to.value], e.to.value});
      }
    }
  }
  if (!std::isfinite(dist[t.value])) return std::nullopt;
  VPath p;
  for (std::int64_t x = t.value; x != -1; x = x == static_cast<std::int64_t>(s.value) ? -1 : pred[x])
    p.nodes.push_back(NodeId(static_cast<std::uint32_t>(x)));
  std::reverse(p.nodes.begin(), p.nodes.end());
  for (std::size_t i = 1; i < p.nodes.size(); ++i) p.length += *g.edge_length(p.nodes[i - 1], p.nodes[i]);
  return p;
}

// Exact length-optimal v-path with summed bound <= budget. Pareto labels per node, pruned by
// reverse-tree lower bounds and by the best feasible length already known.
std::optional<VPath> constrained_shortest(const VirtualGraph& g, NodeId s, NodeId t, const EdgeWeight& bound,
                                          double budget, double upper) {
  auto to_len = dijkstra_tree(g, t, [](double l) { return l; }, bound);
  auto to_bound = dijkstra_tree(g, t, bound, bound);
  struct Label {
    double length, bound;
    std::uint32_t node;
    std::optional<std::size_t> parent;
  };
  std::vector<Label> labels;
  std::vector<std::vector<std::size_t>> at(g.node_count());
  using Entry = std::tuple<double, double, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  auto tol = [](double x) { return 1e-9 * (1.0 + std::abs(x)); };
  auto push = [&](double l, double b, std::uint32_t v, std::optional<std::size_t> parent) {
    if (l + to_len.dist[v] > upper + tol(upper) || b + to_bound.dist[v] > budget + tol(budget)) return;
    for (auto i : at[v])
      if (labels[i].length <= l + tol(l) && labels[i].bound <= b + tol(b)) return;
    labels.push_back({l, b, v, parent});
    at[v].push_back(labels.size() - 1);
    open.emplace(l, b, labels.size() - 1);
  };
  push(0.0, 0.0, s.value, std::nullopt);
  while (!open.empty()) {
    auto idx = std::get<2>(open.top());
    open.pop();
    Label lab = labels[idx];
    if (lab.node == t.value) {
      VPath p{{}, lab.length, lab.bound};
      for (std::optional<std::size_t> cur = idx; cur; cur = labels[*cur].parent) p.nodes.push_back(NodeId(labels[*cur].node));
      std::reverse(p.nodes.begin(), p.nodes.end());
      return p;
    }
    for (const auto& e : g.neighbors(NodeId(lab.node))) {
      double b = bound(e.length);
      if (!std::isfinite(b)) continue;
      push(lab.length + e.length, lab.bound + b, e.to.value, idx);
    }
  }
  return std::nullopt;
}

}  // namespace

SolveResult mcp(const MILProvider& provider, const DROPQuery& query) {
  auto t0 = Clock::now();
  SolveResult r = min_cost_path(provider, query);
  r.stats.seconds = since(t0);
  return r;
}

std::vector<VPath> yen_ksp(const VirtualGraph& g, NodeId s, NodeId t, int k) {
  std::vector<VPath> found;
  if (k <= 0) return found;
  std::vector<char> none(g.node_count(), 0);
  auto first = restricted_shortest(g, s, t, none, {});
  if (!first) return found;
  found.push_back(*first);
  std::set<VPath, PathOrder> candidates;
  auto seen = [&](const std::vector<NodeId>& nodes) {
    return std::any_of(found.begin(), found.end(), [&](const VPath& p) { return p.nodes == nodes; });
  };
  while (static_cast<int>(found.size()) < k) {
    const VPath last = found.back();
    for (std::size_t i = 0; i + 1 < last.nodes.size(); ++i) {
      std::vector<NodeId> root(last.nodes.begin(), last.nodes.begin() + static_cast<long>(i) + 1);
      std::set<std::pair<std::uint32_t, std::uint32_t>> banned_edge;
      for (const auto& p : found)
        if (p.nodes.size() > i + 1 && std::equal(root.begin(), root.end(), p.nodes.begin()))
          banned_edge.insert({p.nodes[i].value, p.nodes[i + 1].value});
      std::vector<char> banned_node(g.node_count(), 0);
      for (std::size_t j = 0; j < i; ++j) banned_node[root[j].value] = 1;
      auto spur = restricted_shortest(g, root.back(), t, banned_node, banned_edge);
      if (!spur) continue;
      VPath total;
      total.nodes = root;
      total.nodes.insert(total.nodes.end(), spur->nodes.begin() + 1, spur->nodes.end());
      for (std::size_t j = 1; j < total.nodes.size(); ++j) total.length += *g.edge_length(total.nodes[j - 1], total.nodes[j]);
      if (!seen(total.nodes)) candidates.insert(std::move(total));
    }
    if (candidates.empty()) break;
    found.push_back(*candidates.begin());
    candidates.erase(candidates.begin());
  }
  return found;
}

namespace {

struct Realized {
  RWPath path;
  bool ok = false;
};

Realized walk_with_resets(const DualWorld& world, const CostModel& model, const std::vector<NodeId>& nodes,
                          const LocoState& start, int max_resets) {
  const auto& g = world.vgraph;
  const auto& grid = world.grid;
  const auto& lattice = world.orientations;
  Realized out{RWPath::start_at(start), false};
  Point p = grid.center(start.p);
  double ph = lattice.degrees(start.ph);
  double vh = lattice.degrees(start.vh);
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    Point from = g.node(nodes[i - 1]).position, to = g.node(nodes[i]).position;
    double bearing = bearing_deg(from, to);
    double turn = wrap_signed_degrees(bearing - vh);
    OperationSequence ops;
    if (std::abs(turn) > 1e-12) ops.push_back(RWOperation::rotation(turn, 1.0));
    vh = bearing;
    ph = wrap_degrees(ph + turn);
    double remaining = *g.edge_length(nodes[i - 1], nodes[i]);
    double cost = 0.0;
    int resets = 0;
    while (remaining > 1e-9) {
      double clear = clear_distance(grid, p, ph, remaining);
      if (clear >= remaining - 1e-12) {
        p = p + unit_vector_deg(ph) * remaining;
        ops.push_back(RWOperation::translation(remaining, 1.0));
        remaining = 0.0;
        break;
      }
      double step = std::max(0.0, clear - 1e-6);
      if (step > 0.0) {
        p = p + unit_vector_deg(ph) * step;
        ops.push_back(RWOperation::translation(step, 1.0));
        remaining -= step;
      }
      if (++resets > max_resets) return out;
      double need = std::min(remaining, grid.cell_size());
      std::optional<double> angle;
      for (int m = 1; m <= lattice.count() / 2 && !angle; ++m) {
        for (int sign : {1, -1}) {
          double a = sign * m * lattice.step();
          if (clear_distance(grid, p, ph + a, need) >= need - 1e-12) {
            angle = a;
            break;
          }
        }
      }
      if (!angle) return out;
      RWOperation reset = RWOperation::reset(*angle);
      cost += operation_cost(reset, model);
      ops.push_back(reset);
      ph = wrap_degrees(ph + *angle);
    }
    auto cell = grid.cell_of(p);
    if (!cell || grid.blocked(*cell)) return out;
    LocoState next{nodes[i], lattice.snap(vh), *cell, lattice.snap(ph)};
    out.path.append(next, *g.edge_length(nodes[i - 1], nodes[i]), cost, std::move(ops));
  }
  out.ok = true;
  return out;
}

}  // namespace

SolveResult ksp_reset(const DualWorld& world, const CostModel& model, const DROPQuery& query, const KspResetOptions& opt) {
  auto t0 = Clock::now();
  validate_state(world, query.start);
  SolveResult res;
  res.status = Status::Unrealizable;
  auto paths = yen_ksp(world.vgraph, query.start.v, query.target, opt.k);
  if (paths.empty()) {
    res.status = Status::Infeasible;
    res.note = "target unreachable in the virtual graph";
  }
  for (const auto& vp : paths) {
    auto cand = walk_with_resets(world, model, vp.nodes, query.start, opt.max_resets_per_edge);
    if (!cand.ok) continue;
    ++res.stats.expanded;
    if (!res.path || cand.path.cost < res.path->cost - 1e-12) res.path = std::move(cand.path);
  }
  if (res.path) res.status = res.path->cost <= query.budget + 1e-9 ? Status::Feasible : Status::Infeasible;
  res.stats.seconds = since(t0);
  return res;
}

SolveResult cola(const MILProvider& provider, const MILRange& range, const DROPQuery& query, const CsmsOptions& opt) {
  auto t0 = Clock::now();
  const auto& g = provider.world().vgraph;
  SolveResult res;
  auto finish = [&] {
    res.stats.seconds = since(t0);
    return res;
  };
  if (query.start.v == query.target) {
    res.status = Status::Feasible;
    res.path = RWPath::start_at(query.start);
    return finish();
  }
  EdgeWeight beta = [&](double l) { return range.beta(l); };
  auto finite_len = [&](double l) { return std::isfinite(beta(l)) ? l : std::numeric_limits<double>::infinity(); };
  std::optional<VPath> chosen = dijkstra_path(g, query.start.v, query.target, finite_len, beta);
  if (!chosen) {
    res.status = Status::Infeasible;
    res.note = "no v-path with finite estimated cost";
    return finish();
  }
  if (chosen->bound > query.budget + 1e-9) {
    auto side = secant_search(g, query.start.v, query.target, query.budget, beta, opt);
    if (!side.feasible || side.feasible->bound > query.budget + 1e-9) {
      res.status = Status::Infeasible;
      res.note = "no v-path within budget under estimated costs";
      return finish();
    }
    // The multiplier bracket only bounds the optimum; close the duality gap exactly.
    chosen = constrained_shortest(g, query.start.v, query.target, beta, query.budget, side.feasible->length);
  }
  auto path = greedy_realize(provider, chosen->nodes, query.start);
  if (!path) {
    res.status = Status::Unrealizable;
    return finish();
  }
  res.status = path->cost <= query.budget + 1e-9 ? Status::Feasible : Status::Infeasible;
  res.path = std::move(path);
  return finish();
}

}  // namespace dualnav
