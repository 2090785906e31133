#pragma once

#include <map>
#include <mutex>
#include <span>
#include <tuple>
#include <vector>

#include "dualnav/dewn.hpp"

namespace dualnav {

struct PoiHit {
  NodeId poi;
  RWPath path;
};

// Shared DEWN engine for spatial queries. Answers are cached per (start, POI, budget).
class SpatialEngine {
 public:
  SpatialEngine(const MILProvider& provider, const MILRange& range, DewnOptions options = {})
      : provider_(provider), range_(range), options_(options) {}

  const MILProvider& provider() const { return provider_; }
  SolveResult solve(const LocoState& start, NodeId poi, double budget) const;
  std::size_t solves() const { return solves_; }

 private:
  using Key = std::tuple<LocoState, std::uint32_t, double>;
  const MILProvider& provider_;
  const MILRange& range_;
  DewnOptions options_;
  mutable std::mutex mutex_;
  mutable std::map<Key, SolveResult> cache_;
  mutable std::size_t solves_ = 0;
};

struct DknnResult {
  std::vector<PoiHit> hits;  // by (length, POI id)
  bool fewer_than_k = false;
  std::size_t examined = 0;
};

// k nearest POIs by feasible RW-path length, examined in Euclidean order with an admissible stop rule.
DknnResult dknn(const SpatialEngine& engine, const LocoState& start, int k, double budget, std::span<const NodeId> pois);

// Every POI reachable by a feasible RW path of v-length at most `radius`, by (length, POI id).
std::vector<PoiHit> drange(const SpatialEngine& engine, const LocoState& start, double radius, double budget,
                           std::span<const NodeId> pois);

}  // namespace dualnav
