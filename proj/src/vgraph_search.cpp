#include "dualnav/vgraph_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <tuple>

namespace dualnav {

ShortestTree dijkstra_tree(const VirtualGraph& g, NodeId source, const EdgeWeight& weight, const EdgeWeight& bound) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::size_t n = g.node_count();
  (void)g.node(source);
  ShortestTree tree{std::vector<double>(n, inf), std::vector<double>(n, inf), std::vector<double>(n, inf),
                    std::vector<std::optional<NodeId>>(n)};
  std::vector<char> done(n, 0);
  using Entry = std::tuple<double, double, std::uint32_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  tree.dist[source.value] = 0.0;
  tree.length[source.value] = 0.0;
  tree.bound[source.value] = 0.0;
  open.emplace(0.0, 0.0, source.value);
  auto tol = [](double x) { return 1e-12 * (1.0 + std::abs(x)); };
  while (!open.empty()) {
    std::uint32_t u = std::get<2>(open.top());
    open.pop();
    if (done[u]) continue;
    done[u] = 1;
    // A tie within tolerance may have replaced the label after this entry was queued.
    double d = tree.dist[u], l = tree.length[u];
    for (const auto& e : g.neighbors(NodeId(u))) {
      double w = weight(e.length);
      if (!std::isfinite(w)) continue;
      std::uint32_t v = e.to.value;
      if (done[v]) continue;
      double nd = d + w, nl = l + e.length;
      bool better = nd < tree.dist[v] - tol(nd) ||
                    (nd <= tree.dist[v] + tol(nd) &&
                     (nl < tree.length[v] - tol(nl) || (nl <= tree.length[v] + tol(nl) && tree.pred[v] && u < tree.pred[v]->value)));
      if (!better) continue;
      tree.dist[v] = nd;
      tree.length[v] = nl;
      tree.bound[v] = tree.bound[u] + bound(e.length);
      tree.pred[v] = NodeId(u);
      open.emplace(nd, nl, v);
    }
  }
  return tree;
}

std::optional<VPath> ShortestTree::path_to(NodeId target) const {
  if (!std::isfinite(dist[target.value])) return std::nullopt;
  VPath p;
  for (std::optional<NodeId> cur = target; cur; cur = pred[cur->value]) p.nodes.push_back(*cur);
  std::reverse(p.nodes.begin(), p.nodes.end());
  p.length = length[target.value];
  p.bound = bound[target.value];
  return p;
}

std::optional<VPath> dijkstra_path(const VirtualGraph& g, NodeId s, NodeId t, const EdgeWeight& weight, const EdgeWeight& bound) {
  (void)g.node(t);
  return dijkstra_tree(g, s, weight, bound).path_to(t);
}

int hop_diameter(const VirtualGraph& g) {
  int best = 0;
  std::size_t n = g.node_count();
  for (std::uint32_t s = 0; s < n; ++s) {
    std::vector<int> d(n, -1);
    std::queue<std::uint32_t> q;
    d[s] = 0;
    q.push(s);
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      best = std::max(best, d[u]);
      for (const auto& e : g.neighbors(NodeId(u)))
        if (d[e.to.value] < 0) d[e.to.value] = d[u] + 1, q.push(e.to.value);
    }
  }
  return best;
}

}  // namespace dualnav
