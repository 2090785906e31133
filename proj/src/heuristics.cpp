#include "dualnav/heuristics.hpp"

namespace dualnav {

Heuristics build_heuristics(const VirtualGraph& g, NodeId s, NodeId t, const MILRange& range) {
  EdgeWeight len = [](double l) { return l; };
  EdgeWeight alpha = [&](double l) { return range.alpha(l); };
  EdgeWeight beta = [&](double l) { return range.beta(l); };
  Heuristics h;
  h.source = s;
  h.target = t;
  auto to_t = dijkstra_tree(g, t, len, beta);
  h.len_to_target = to_t.dist;
  h.beta_on_shortest = to_t.bound;
  h.next_on_shortest = to_t.pred;
  h.alpha_to_target = dijkstra_tree(g, t, alpha, alpha).dist;
  h.beta_to_target = dijkstra_tree(g, t, beta, beta).dist;
  h.len_from_source = dijkstra_tree(g, s, len, len).dist;
  h.alpha_from_source = dijkstra_tree(g, s, alpha, alpha).dist;
  Point ps = g.node(s).position, pt = g.node(t).position;
  for (std::uint32_t v = 0; v < g.node_count(); ++v) {
    Point p = g.node(NodeId(v)).position;
    h.naturalness.push_back(distance(p, ps) + distance(p, pt));
  }
  return h;
}

std::vector<NodeId> Heuristics::shortest_to_target(NodeId from) const {
  std::vector<NodeId> out{from};
  while (out.back() != target) {
    auto nx = next_on_shortest[out.back().value];
    if (!nx) return {};
    out.push_back(*nx);
  }
  return out;
}

}  // namespace dualnav
