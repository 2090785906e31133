#include "dualnav/spatial.hpp"

#include <algorithm>
#include <cmath>

namespace dualnav {

SolveResult SpatialEngine::solve(const LocoState& start, NodeId poi, double budget) const {
  Key key{start, poi.value, budget};
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  SolveResult r = dewn(provider_, range_, {start, poi, budget}, options_);
  std::lock_guard lock(mutex_);
  ++solves_;
  return cache_.try_emplace(key, std::move(r)).first->second;
}

namespace {

struct Candidate {
  NodeId poi;
  double euclid;
};

std::vector<Candidate> euclidean_order(const VirtualGraph& g, const LocoState& start, std::span<const NodeId> pois) {
  std::vector<Candidate> out;
  Point at = g.node(start.v).position;
  for (NodeId poi : pois) out.push_back({poi, distance(at, g.node(poi).position)});
  std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
    return a.euclid != b.euclid ? a.euclid < b.euclid : a.poi < b.poi;
  });
  out.erase(std::unique(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) { return a.poi == b.poi; }),
            out.end());
  return out;
}

void sort_hits(std::vector<PoiHit>& hits) {
  std::sort(hits.begin(), hits.end(), [](const PoiHit& a, const PoiHit& b) {
    return a.path.length != b.path.length ? a.path.length < b.path.length : a.poi < b.poi;
  });
}

}  // namespace

DknnResult dknn(const SpatialEngine& engine, const LocoState& start, int k, double budget, std::span<const NodeId> pois) {
  const auto& g = engine.provider().world().vgraph;
  auto unit = [](double l) { return l; };
  ShortestTree tree = dijkstra_tree(g, start.v, unit, unit);
  DknnResult res;
  auto kth = [&]() {
    return static_cast<int>(res.hits.size()) < k ? std::numeric_limits<double>::infinity()
                                                  : res.hits[static_cast<std::size_t>(k) - 1].path.length;
  };
  for (const auto& c : euclidean_order(g, start, pois)) {
    double bound = kth();
    if (c.euclid > bound + 1e-9) break;
    // The unconstrained shortest length also lower-bounds the answer; skipping saves a solve.
    if (!std::isfinite(tree.dist[c.poi.value]) || tree.dist[c.poi.value] > bound + 1e-9) continue;
    ++res.examined;
    SolveResult r = engine.solve(start, c.poi, budget);
    if (!r.feasible() || !r.path) continue;
    res.hits.push_back({c.poi, *r.path});
    sort_hits(res.hits);
    if (static_cast<int>(res.hits.size()) > k) res.hits.resize(static_cast<std::size_t>(k));
  }
  res.fewer_than_k = static_cast<int>(res.hits.size()) < k;
  return res;
}

std::vector<PoiHit> drange(const SpatialEngine& engine, const LocoState& start, double radius, double budget,
                           std::span<const NodeId> pois) {
  const auto& g = engine.provider().world().vgraph;
  auto unit = [](double l) { return l; };
  ShortestTree tree = dijkstra_tree(g, start.v, unit, unit);
  std::vector<PoiHit> hits;
  for (const auto& c : euclidean_order(g, start, pois)) {
    if (c.euclid > radius + 1e-9) break;
    if (!std::isfinite(tree.dist[c.poi.value]) || tree.dist[c.poi.value] > radius + 1e-9) continue;
    SolveResult r = engine.solve(start, c.poi, budget);
    if (r.feasible() && r.path && r.path->length <= radius + 1e-9) hits.push_back({c.poi, *r.path});
  }
  sort_hits(hits);
  return hits;
}

}  // namespace dualnav
