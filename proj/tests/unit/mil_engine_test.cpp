#include <doctest.h>

#include <cmath>
#include <limits>
#include <map>

#include "dualnav/errors.hpp"
#include "dualnav/kinematic_mil.hpp"
#include "dualnav/mil_range.hpp"
#include "dualnav/rw_path.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dualnav;

namespace {

DualWorldPtr small_world() {
  auto w = std::make_shared<DualWorld>();
  auto a = w->vgraph.add_node({0, 0}, "a");
  auto b = w->vgraph.add_node({1.5, 0}, "b");
  auto c = w->vgraph.add_node({0, 1.0}, "c");
  auto d = w->vgraph.add_node({1.5, 1.5}, "d");
  w->vgraph.add_edge(a, b);
  w->vgraph.add_edge(a, c);
  w->vgraph.add_edge(a, d);
  w->grid = PhysicalGrid::room(2.0, 1.5, 0.5);
  w->orientations = OrientationSet(8);
  return w;
}

// Independent sweep of the catalog: every Reset on the lattice, every sampled rotation, every sampled walk,
// applied through the loco-state transition and priced by the cost model.
std::map<LocoState, double> catalog_minimum(const KinematicMILProvider& prov, const LocoState& st) {
  const auto& w = prov.world();
  int k = w.orientations.count();
  std::map<LocoState, double> best;
  auto offer = [&](const OperationSequence& ops) {
    try {
      LocoState to = apply_sequence(w, st, ops);
      if (to.v == st.v) return;
      double c = sequence_cost(ops, prov.cost_model());
      auto [it, fresh] = best.try_emplace(to, c);
      if (!fresh) it->second = std::min(it->second, c);
    } catch (const Error&) {
    }
  };
  for (int r = 0; r < k; ++r) {
    std::vector<OperationSequence> turns;
    OperationSequence base;
    if (r) base.push_back(RWOperation::reset(wrap_signed_degrees(r * w.orientations.step())));
    turns.push_back(base);
    for (int s = 1; s < k; ++s)
      for (double m : prov.rotation_gains()) {
        auto t = base;
        t.push_back(RWOperation::rotation(wrap_signed_degrees(s * w.orientations.step()), m));
        turns.push_back(t);
      }
    for (const auto& e : w.vgraph.neighbors(st.v)) {
      for (const auto& t : turns) {
        for (double m : prov.translation_gains()) {
          auto ops = t;
          ops.push_back(RWOperation::translation(e.length / m, m));
          offer(ops);
        }
        for (double c : prov.curvature_gains()) {
          auto ops = t;
          ops.push_back(RWOperation::curvature(e.length, c));
          offer(ops);
        }
      }
    }
  }
  return best;
}

}  // namespace

TEST_SUITE("mil-engine") {
  TEST_CASE("kinematic MIL equals the cheapest catalog sequence found by exhaustive application") {
    auto w = small_world();
    KinematicMILProvider prov(w, CostModel{});
    const auto& grid = w->grid;
    int checked = 0;
    auto cells = grid.free_cells();
    for (CellId cell : {cells.front(), cells[cells.size() / 2], cells.back()}) {
      for (std::uint32_t vh : {0u, 3u}) {
        for (std::uint32_t ph : {0u, 5u}) {
          LocoState st{NodeId(0), HeadingId(vh), cell, HeadingId(ph)};
          auto oracle = catalog_minimum(prov, st);
          auto succ = prov.successors(st);
          REQUIRE(succ.size() == oracle.size());
          for (const auto& t : succ) {
            REQUIRE(oracle.count(t.to));
            CHECK(t.cost == doctest::Approx(oracle.at(t.to)).epsilon(1e-12));
            auto ops = prov.realize(st, t.to);
            REQUIRE(ops.has_value());
            CHECK(apply_sequence(*w, st, *ops) == t.to);
            CHECK(sequence_cost(*ops, prov.cost_model()) == doctest::Approx(t.cost));
            ++checked;
          }
        }
      }
    }
    CHECK(checked > 0);
  }

  TEST_CASE("MIL of non-adjacent locations raises NotNeighbors") {
    auto w = small_world();
    KinematicMILProvider prov(w, CostModel{});
    LocoState b{NodeId(1), HeadingId(0), w->grid.free_cells()[0], HeadingId(0)};
    LocoState c{NodeId(2), HeadingId(0), w->grid.free_cells()[0], HeadingId(0)};
    CHECK_THROWS_AS((void)prov.mil(b, c), Error);
  }

  TEST_CASE("aligned open worlds realise straight walks at zero cost") {
    auto w = std::make_shared<DualWorld>();
    auto a = w->vgraph.add_node({0, 0});
    auto b = w->vgraph.add_node({2, 0});
    w->vgraph.add_edge(a, b);
    w->grid = PhysicalGrid::room(4, 4, 0.5);
    KinematicMILProvider prov(w, CostModel{});
    LocoState st{a, HeadingId(0), w->grid.id({2, 4}), HeadingId(0)};
    LocoState to{b, HeadingId(0), w->grid.id({6, 4}), HeadingId(0)};
    auto m = prov.mil(st, to);
    REQUIRE(m.has_value());
    CHECK(*m == 0.0);
  }

  TEST_CASE("successor memo is filled lazily") {
    auto w = small_world();
    KinematicMILProvider prov(w, CostModel{});
    CHECK(prov.memo_size() == 0);
    LocoState st{NodeId(0), HeadingId(0), w->grid.free_cells()[3], HeadingId(0)};
    (void)prov.successors(st);
    (void)prov.successors(st);
    CHECK(prov.memo_size() == 1);
    prov.clear_memo();
    CHECK(prov.memo_size() == 0);
  }

  TEST_CASE("MIL range matches a direct sweep over every state and edge") {
    auto w = small_world();
    KinematicMILProvider prov(w, CostModel{});
    auto range = build_mil_range(prov);
    std::map<long, std::pair<double, double>> oracle;
    for (const auto& st : prov.all_states()) {
      std::map<NodeId, double> per_target_node;
      for (const auto& t : prov.successors(st)) {
        auto [it, fresh] = per_target_node.try_emplace(t.to.v, t.cost);
        if (!fresh) it->second = std::min(it->second, t.cost);
      }
      for (auto [node, c] : per_target_node) {
        long bin = range.bin(*w->vgraph.edge_length(st.v, node));
        auto [it, fresh] = oracle.try_emplace(bin, c, c);
        if (!fresh) it->second = {std::min(it->second.first, c), std::max(it->second.second, c)};
      }
    }
    REQUIRE(oracle.size() == range.bins().size());
    for (auto [bin, ab] : oracle) {
      CHECK(range.bins().at(bin).alpha == doctest::Approx(ab.first));
      CHECK(range.bins().at(bin).beta == doctest::Approx(ab.second));
    }
  }

  TEST_CASE("MIL range bins at 0.1 and round-trips through CSV") {
    auto r = fixtures::example_range();
    CHECK(r.alpha(2.2) == 1);
    CHECK(r.beta(2.24) == 3);
    CHECK(r.beta(8.1) == 7);
    CHECK(std::isinf(r.alpha(7.7)));
    auto back = MILRange::from_csv(r.to_csv());
    for (auto [bin, b] : r.bins()) {
      CHECK(back.bins().at(bin).alpha == b.alpha);
      CHECK(back.bins().at(bin).beta == b.beta);
    }
    CHECK_THROWS_AS(MILRange::from_csv("length,alpha,beta\nx,y\n"), Error);
  }

  TEST_CASE("path bounds aggregate per edge and reject non-paths") {
    auto inst = fixtures::pruning_example();
    const auto& g = inst.world->vgraph;
    std::vector<NodeId> red{inst.node("S"), inst.node("D"), inst.node("X"), inst.node("G"), inst.node("T")};
    auto b = aggregate_bounds(g, red, inst.range);
    CHECK(b.alpha == doctest::Approx(5));
    CHECK(b.beta == doctest::Approx(12));
    std::vector<NodeId> broken{inst.node("S"), inst.node("T")};
    CHECK_THROWS_AS(aggregate_bounds(g, broken, inst.range), Error);
  }

  TEST_CASE("greedy realisation takes the cheapest hop, then clearance, and sums the table costs") {
    auto inst = fixtures::pruning_example();
    std::vector<NodeId> red{inst.node("S"), inst.node("D"), inst.node("X"), inst.node("G"), inst.node("T")};
    auto p = greedy_realize(*inst.provider, red, inst.query.start);
    REQUIRE(p.has_value());
    CHECK(p->states[1] == inst.states.at("d1"));  // cost tie at D broken by clearance
    CHECK(p->cost == doctest::Approx(5.8));
    CHECK(p->length == doctest::Approx(10.7));
    CHECK(p->v_path() == red);
    std::vector<NodeId> bad{inst.node("D")};
    CHECK_THROWS_AS(greedy_realize(*inst.provider, bad, inst.query.start), Error);
  }

  TEST_CASE("path_from_states prices hops from the table and rejects gaps") {
    auto inst = fixtures::pruning_example();
    std::vector<LocoState> seq{inst.states.at("s0"), inst.states.at("d2"), inst.states.at("x2"), inst.states.at("g0"),
                               inst.states.at("t1")};
    auto p = path_from_states(*inst.provider, seq);
    CHECK(p.cost == doctest::Approx(5.2));
    CHECK(p.length == doctest::Approx(10.7));
    std::vector<LocoState> gap{inst.states.at("s0"), inst.states.at("x2")};
    CHECK_THROWS_AS(path_from_states(*inst.provider, gap), Error);
  }
}
