#include "dualnav/kinematic_mil.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "dualnav/errors.hpp"

namespace dualnav {

namespace {
// Identity first, then by distance from identity, so equal-cost ties favour the gentlest operation.
std::vector<double> gain_grid(double identity, double lo, double hi, int samples, bool keep_identity) {
  std::vector<double> g;
  for (int i = 0; i < samples; ++i) g.push_back(samples == 1 ? lo : lo + (hi - lo) * i / (samples - 1));
  g.push_back(identity);
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end(), [](double a, double b) { return std::abs(a - b) < 1e-12; }), g.end());
  if (!keep_identity) std::erase_if(g, [&](double x) { return std::abs(x - identity) < 1e-12; });
  std::stable_sort(g.begin(), g.end(), [&](double a, double b) { return std::abs(a - identity) < std::abs(b - identity) - 1e-15; });
  return g;
}

// Lattice steps ordered 0, +1, -1, +2, -2, ... (counter-clockwise first on ties).
std::vector<int> steps_by_magnitude(int k) {
  std::vector<int> out{0};
  for (int s = 1; 2 * s <= k; ++s) {
    out.push_back(s);
    if (2 * s != k) out.push_back(-s);
  }
  return out;
}
}  // namespace

std::size_t KinematicMILProvider::WalkKeyHash::operator()(const WalkKey& k) const noexcept {
  auto [a, b, c] = k;
  std::uint64_t h = (std::uint64_t(a) << 32) ^ (std::uint64_t(b) << 20) ^ static_cast<std::uint64_t>(c);
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  return static_cast<std::size_t>(h);
}

KinematicMILProvider::KinematicMILProvider(DualWorldPtr world, CostModel model, CatalogConfig catalog)
    : MILProvider(std::move(world)), model_(std::move(model)), catalog_(catalog) {
  double f = catalog_.span_factor;
  int n = std::max(1, catalog_.gain_samples);
  const auto& t = model_.translation;
  t_gains_ = gain_grid(1.0, std::max(0.05, 1.0 - f * (1.0 - t.lo)), 1.0 + f * (t.hi - 1.0), n, true);
  const auto& r = model_.rotation;
  r_gains_ = gain_grid(1.0, std::max(0.05, 1.0 - f * (1.0 - r.lo)), 1.0 + f * (r.hi - 1.0), n, true);
  if (catalog_.allow_curvature) c_gains_ = gain_grid(0.0, f * model_.curvature.lo, f * model_.curvature.hi, n, false);
  build_turn_table();
}

void KinematicMILProvider::build_turn_table() {
  const auto& orient = world().orientations;
  int k = orient.count();
  double step = orient.step();
  auto order = steps_by_magnitude(k);
  turn_table_.assign(k, {});
  for (int delta = 0; delta < k; ++delta) {
    std::map<int, TurnOption> best;
    auto offer = [&](int offset, OperationSequence ops) {
      offset = ((offset % k) + k) % k;
      double cost = sequence_cost(ops, model_);
      auto it = best.find(offset);
      if (it == best.end() || cost < it->second.cost - 1e-12 ||
          (cost <= it->second.cost + 1e-12 && ops.size() < it->second.ops.size()))
        best[offset] = TurnOption{offset, cost, std::move(ops)};
    };
    for (int rs : order) {
      if (rs != 0 && !catalog_.allow_reset) continue;
      OperationSequence base;
      if (rs != 0) base.push_back(RWOperation::reset(wrap_signed_degrees(rs * step)));
      if (delta == 0) offer(rs, base);
      if (!catalog_.allow_rotation) continue;
      for (int s : order) {
        if (s == 0) continue;
        double turn = wrap_signed_degrees(s * step);
        for (double m : r_gains_) {
          if (static_cast<int>(orient.snap(m * turn).value) != delta) continue;
          OperationSequence ops = base;
          ops.push_back(RWOperation::rotation(turn, m));
          offer(rs + s, std::move(ops));
        }
      }
    }
    for (auto& [off, opt] : best) turn_table_[delta].push_back(std::move(opt));
    std::stable_sort(turn_table_[delta].begin(), turn_table_[delta].end(),
              [](const TurnOption& a, const TurnOption& b) { return a.cost < b.cost; });
  }
}

std::shared_ptr<const std::vector<KinematicMILProvider::WalkOutcome>> KinematicMILProvider::walks(
    CellId cell, HeadingId heading, double length) const {
  WalkKey key{cell.value, heading.value, std::llround(length * 1e9)};
  {
    std::lock_guard lock(walk_mutex_);
    auto it = walk_cache_.find(key);
    if (it != walk_cache_.end()) return it->second;
  }
  const auto& w = world();
  auto out = std::make_shared<std::vector<WalkOutcome>>();
  Point start = w.grid.center(cell);
  double deg = w.orientations.degrees(heading);
  auto consider = [&](const RWOperation& op) {
    Curve curve = op.kind == OpKind::Translation
                      ? Curve{Segment{start, start + unit_vector_deg(deg) * op.walk_length}}
                      : Curve{Arc{start, deg, op.magnitude, op.walk_length}};
    if (!path_clear_physical(w.grid, curve)) return;
    Point end = op.kind == OpKind::Translation ? std::get<Segment>(curve).b : std::get<Arc>(curve).point_at(op.walk_length);
    auto c = w.grid.cell_of(end);
    if (!c) return;
    HeadingId h = op.kind == OpKind::Translation ? heading
                                                 : w.orientations.snap(std::get<Arc>(curve).heading_at(op.walk_length));
    out->push_back({*c, h, operation_cost(op, model_), op});
  };
  for (double m : t_gains_) consider(RWOperation::translation(length / m, m));
  for (double m : c_gains_) consider(RWOperation::curvature(length, m));
  std::lock_guard lock(walk_mutex_);
  auto [it, inserted] = walk_cache_.try_emplace(key, std::move(out));
  return it->second;
}

template <class Visit>
void KinematicMILProvider::enumerate(const LocoState& st, std::optional<NodeId> only, Visit&& visit) const {
  const auto& w = world();
  const auto& orient = w.orientations;
  int k = orient.count();
  Point from = w.vgraph.node(st.v).position;
  auto nbrs = w.vgraph.neighbors(st.v);
  for (const auto& e : nbrs) {
    if (only && e.to != *only) continue;
    double bearing = bearing_deg(from, w.vgraph.node(e.to).position);
    HeadingId dir = orient.snap(bearing);
    double dev = std::abs(wrap_signed_degrees(bearing - orient.degrees(dir)));
    // apply_operation resolves a walk to the best-aligned neighbour at that distance; skip shadowed ones.
    bool shadowed = std::any_of(nbrs.begin(), nbrs.end(), [&](const VEdge& o) {
      if (o.to == e.to || std::abs(o.length - e.length) > 1e-6 * (1.0 + e.length)) return false;
      double b2 = bearing_deg(from, w.vgraph.node(o.to).position);
      if (orient.snap(b2) != dir) return false;
      double d2 = std::abs(wrap_signed_degrees(b2 - orient.degrees(dir)));
      return d2 < dev || (d2 == dev && o.to < e.to);
    });
    if (shadowed) continue;
    int delta = ((static_cast<int>(dir.value) - static_cast<int>(st.vh.value)) % k + k) % k;
    for (const auto& opt : turn_table_[delta]) {
      HeadingId ph = orient.rotate(st.ph, opt.ph_offset);
      auto outcomes = walks(st.p, ph, e.length);
      for (const auto& wo : *outcomes) visit(LocoState{e.to, dir, wo.cell, wo.heading}, e.length, opt.cost + wo.cost, opt, wo);
    }
  }
}

std::vector<Transition> KinematicMILProvider::compute_successors(const LocoState& st) const {
  std::vector<Transition> out;
  std::unordered_map<LocoState, std::size_t> index;
  enumerate(st, std::nullopt, [&](const LocoState& to, double len, double cost, const TurnOption&, const WalkOutcome&) {
    auto [it, fresh] = index.try_emplace(to, out.size());
    if (fresh) out.push_back({to, len, cost});
    else if (cost < out[it->second].cost - 1e-12) out[it->second].cost = cost;
  });
  std::sort(out.begin(), out.end(), [](const Transition& a, const Transition& b) { return a.to < b.to; });
  return out;
}

std::optional<OperationSequence> KinematicMILProvider::realize(const LocoState& from, const LocoState& to) const {
  if (from.v == to.v) return std::nullopt;
  if (!world().vgraph.edge_length(from.v, to.v)) throw Error(ErrorKind::NotNeighbors, "virtual locations are not adjacent");
  double best = std::numeric_limits<double>::infinity();
  std::optional<OperationSequence> ops;
  enumerate(from, to.v, [&](const LocoState& target, double, double cost, const TurnOption& opt, const WalkOutcome& wo) {
    if (target != to || cost >= best - 1e-12) return;
    best = cost;
    OperationSequence seq = opt.ops;
    seq.push_back(wo.op);
    ops = std::move(seq);
  });
  return ops;
}

std::vector<LocoState> KinematicMILProvider::all_states() const {
  const auto& w = world();
  std::vector<LocoState> out;
  auto cells = w.grid.free_cells();
  std::uint32_t k = static_cast<std::uint32_t>(w.orientations.count());
  for (std::uint32_t v = 0; v < w.vgraph.node_count(); ++v)
    for (std::uint32_t vh = 0; vh < k; ++vh)
      for (CellId c : cells)
        for (std::uint32_t ph = 0; ph < k; ++ph) out.push_back({NodeId(v), HeadingId(vh), c, HeadingId(ph)});
  return out;
}

void KinematicMILProvider::for_each_edge_minimum(const std::function<void(double, double)>& sink) const {
  // The cheapest way across an edge depends only on the relative virtual turn, the physical pose and the
  // edge length, so the (state, edge) sweep collapses onto those.
  const auto& w = world();
  std::set<long long> seen;
  std::vector<double> lengths;
  for (std::uint32_t v = 0; v < w.vgraph.node_count(); ++v)
    for (const auto& e : w.vgraph.neighbors(NodeId(v)))
      if (seen.insert(std::llround(e.length * 1e9)).second) lengths.push_back(e.length);
  int k = w.orientations.count();
  auto cells = w.grid.free_cells();
  for (double d : lengths) {
    for (int delta = 0; delta < k; ++delta) {
      for (CellId c : cells) {
        for (int ph = 0; ph < k; ++ph) {
          double best = std::numeric_limits<double>::infinity();
          for (const auto& opt : turn_table_[delta]) {
            if (opt.cost >= best) continue;
            auto outcomes = walks(c, w.orientations.rotate(HeadingId(static_cast<std::uint32_t>(ph)), opt.ph_offset), d);
            for (const auto& wo : *outcomes) best = std::min(best, opt.cost + wo.cost);
          }
          if (std::isfinite(best)) sink(d, best);
        }
      }
    }
  }
}

}  // namespace dualnav
