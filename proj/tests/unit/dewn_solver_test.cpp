#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "dualnav/basic_dp.hpp"
#include "dualnav/csms.hpp"
#include "dualnav/dewn.hpp"
#include "dualnav/heuristics.hpp"
#include "dualnav/idws.hpp"
#include "dualnav/ppnp.hpp"
#include "dualnav/rounded_dp.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dualnav;

TEST_SUITE("dewn-solver") {
  TEST_CASE("csms finds the tie multipliers of the pruning example") {
    auto inst = fixtures::pruning_example();
    const auto& g = inst.world->vgraph;
    auto m = csms(g, inst.query.start.v, inst.node("T"), 5.5, inst.range);
    REQUIRE(m.verdict == MultiplierVerdict::Multipliers);
    CHECK(m.shortest->length == doctest::Approx(10.7));
    CHECK(m.beta.r_star == doctest::Approx(4.2).epsilon(1e-12));
    CHECK(m.alpha.r_star == doctest::Approx(1.8).epsilon(1e-12));
    CHECK(m.alpha.feasible->bound == doctest::Approx(3));
  }

  TEST_CASE("csms short-circuits feasible shortest paths and hopeless budgets") {
    auto inst = fixtures::pruning_example();
    const auto& g = inst.world->vgraph;
    CHECK(csms(g, inst.query.start.v, inst.node("T"), 12.0, inst.range).verdict == MultiplierVerdict::ShortestFeasible);
    CHECK(csms(g, inst.query.start.v, inst.node("T"), 2.5, inst.range).verdict == MultiplierVerdict::Infeasible);
  }

  TEST_CASE("secant search matches a brute-force Lagrangian sweep on random graphs") {
    int bracketed = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      auto inst = fixtures::random_table_instance(seed);
      const auto& g = inst.world->vgraph;
      auto paths = oracles::all_simple_vpaths(g, inst.query.start.v, inst.query.target);
      auto beta = [&](double l) { return inst.range.beta(l); };
      CsmsOptions opt;
      opt.delta.reset();
      // Only the bracketing regime is meaningful: shortest path over budget, least-bound path within it.
      auto csm = csms(g, inst.query.start.v, inst.query.target, inst.query.budget, inst.range, opt);
      if (csm.verdict != MultiplierVerdict::Multipliers) continue;
      auto least = dijkstra_path(g, inst.query.start.v, inst.query.target, beta, beta);
      if (!least || least->bound > inst.query.budget) continue;
      auto side = secant_search(g, inst.query.start.v, inst.query.target, inst.query.budget, beta, opt);
      REQUIRE(side.valid);
      ++bracketed;
      // At r*, the returned feasible path minimises l + r* bound over all simple paths.
      double best = 1e18;
      for (const auto& p : paths) {
        double l = 0, b = 0;
        for (std::size_t i = 1; i < p.size(); ++i) {
          double e = *g.edge_length(p[i - 1], p[i]);
          l += e;
          b += beta(e);
        }
        if (std::isfinite(b)) best = std::min(best, l + side.r_star * b);
      }
      if (!std::isfinite(best)) continue;
      double got = side.feasible->length + side.r_star * side.feasible->bound;
      CHECK(got == doctest::Approx(best).epsilon(1e-9));
    }
    CHECK(bracketed >= 10);
  }

  TEST_CASE("heuristics give the remaining shortest length and least optimistic cost") {
    auto inst = fixtures::pruning_example();
    auto h = build_heuristics(inst.world->vgraph, inst.query.start.v, inst.node("T"), inst.range);
    const auto& d = inst.states.at("d1");
    CHECK(h.mrl(d) == doctest::Approx(8.5));
    CHECK(h.mrc(d) == doctest::Approx(4));
    CHECK(h.estimate(d, 4.2) == doctest::Approx(25.3));
    CHECK(h.alpha_from_source[inst.node("H").value] + h.alpha_to_target[inst.node("H").value] == doctest::Approx(6));
    CHECK(h.len_from_source[inst.node("B").value] + h.len_to_target[inst.node("B").value] == doctest::Approx(14.9));
    auto path = h.shortest_to_target(inst.node("D"));
    CHECK(path == std::vector<NodeId>{inst.node("D"), inst.node("X"), inst.node("G"), inst.node("T")});
  }

  TEST_CASE("idws ties prefer clearance: at r = 0 the roomy but expensive branch wins") {
    auto inst = fixtures::pruning_example();
    auto h = build_heuristics(inst.world->vgraph, inst.query.start.v, inst.node("T"), inst.range);
    auto r0 = idws(*inst.provider, inst.query, 0.0, h);
    REQUIRE(r0.path.has_value());
    CHECK(r0.status == Status::Infeasible);
    CHECK(r0.path->length == doctest::Approx(10.7));
    CHECK(r0.path->cost == doctest::Approx(5.8));
    CHECK(r0.path->states[1] == inst.states.at("d1"));
    OrderingOptions plain{true, false, false};
    auto lex = idws(*inst.provider, inst.query, 0.0, h, plain);
    CHECK(lex.path->states[1] == inst.states.at("d1"));  // lexicographic order agrees here
    auto r18 = idws(*inst.provider, inst.query, 1.8, h);
    REQUIRE(r18.feasible());
    CHECK(r18.path->length == doctest::Approx(14.3));
    CHECK(r18.path->cost == doctest::Approx(3));
  }

  TEST_CASE("reference generation keeps the shortest feasible run") {
    auto inst = fixtures::pruning_example();
    auto h = build_heuristics(inst.world->vgraph, inst.query.start.v, inst.node("T"), inst.range);
    auto m = csms(inst.world->vgraph, inst.query.start.v, inst.node("T"), 5.5, inst.range);
    auto ref = generate_reference(*inst.provider, inst.query, m, h);
    REQUIRE(ref.status == Status::Feasible);
    CHECK(ref.path->length == doctest::Approx(14.3));
    CHECK(ref.runs.size() == 2);
  }

  TEST_CASE("ppnp prunes H by cost, B by length and unlocks G on the way to 10.7") {
    auto inst = fixtures::pruning_example();
    auto h = build_heuristics(inst.world->vgraph, inst.query.start.v, inst.node("T"), inst.range);
    auto res = ppnp(*inst.provider, inst.query, 14.3, h);
    auto H = res.per_node.at(inst.node("H"));
    auto B = res.per_node.at(inst.node("B"));
    CHECK(H.popped > 0);
    CHECK(H.ilsp == H.popped);
    CHECK(B.popped > 0);
    CHECK(B.slsp == B.popped);
    CHECK(res.locks >= 1);
    CHECK(res.unlocks >= 1);
    CHECK(res.upper_bound == doctest::Approx(10.7));
    CHECK_FALSE(res.trimmed.count(inst.states.at("h0")));
    CHECK(res.trimmed.count(inst.states.at("x2")));
    CHECK(res.trimmed.count(inst.states.at("t1")));
  }

  TEST_CASE("dewn reproduces both worked examples") {
    auto fig3 = fixtures::pruning_example();
    DewnReport rep;
    auto r = dewn(*fig3.provider, fig3.range, fig3.query, {}, &rep);
    REQUIRE(r.feasible());
    CHECK(r.path->length == doctest::Approx(10.7).epsilon(1e-9));
    CHECK(r.path->cost == doctest::Approx(5.2));
    CHECK(rep.pruning->unlocks >= 1);
    CHECK(rep.reference->path->length == doctest::Approx(14.3));

    auto fig1 = fixtures::motivating_example();
    auto r1 = dewn(*fig1.provider, fig1.range, fig1.query);
    REQUIRE(r1.feasible());
    CHECK(r1.path->length == doctest::Approx(14.93).epsilon(1e-9));
    CHECK(r1.path->cost == doctest::Approx(3.35).epsilon(1e-9));
  }

  TEST_CASE("dewn reports hopeless budgets as infeasible") {
    auto fig3 = fixtures::pruning_example();
    auto q = fig3.query;
    q.budget = 2.0;
    CHECK(dewn(*fig3.provider, fig3.range, q).status == Status::Infeasible);
  }

  TEST_CASE("reference-only mode returns the reference path") {
    auto fig3 = fixtures::pruning_example();
    DewnOptions opt;
    opt.reference_only = true;
    auto r = dewn(*fig3.provider, fig3.range, fig3.query, opt);
    REQUIRE(r.feasible());
    CHECK(r.path->length == doctest::Approx(14.3));
  }

  TEST_CASE("dewn stays within 1 + epsilon of the optimum with every ablation") {
    std::vector<DewnOptions> variants(5);
    variants[1].pruning = {false, false, false};
    variants[2].ordering = {false, false, false};
    variants[3].epsilon = 0.5;
    variants[4].pruning.ulsl = false;
    for (std::uint64_t seed = 300; seed < 340; ++seed) {
      auto inst = fixtures::random_table_instance(seed);
      auto exact = basic_dp(*inst.provider, inst.query);
      for (const auto& opt : variants) {
        auto r = dewn(*inst.provider, inst.range, inst.query, opt);
        REQUIRE(r.feasible() == exact.feasible());
        if (!exact.feasible()) continue;
        CHECK(r.path->cost <= inst.query.budget + 1e-9);
        CHECK(r.path->length <= (1 + opt.epsilon) * exact.path->length + 1e-9);
      }
    }
  }

  TEST_CASE("rounded DP over the full space is within epsilon of the exact optimum") {
    for (std::uint64_t seed = 400; seed < 430; ++seed) {
      auto inst = fixtures::random_table_instance(seed);
      auto exact = basic_dp(*inst.provider, inst.query);
      if (!exact.feasible()) continue;
      auto all = inst.provider->all_states();
      StateSet space(all.begin(), all.end());
      double lower = exact.path->length * 0.5, upper = exact.path->length * 3;
      auto r = rounded_dp(*inst.provider, inst.query, space, std::max(lower, 1e-6), upper, 0.1);
      REQUIRE(r.feasible());
      CHECK(r.path->length <= 1.1 * exact.path->length + 1e-9);
    }
  }

  TEST_CASE("merged-heading space takes the cheapest transition over all headings") {
    auto inst = fixtures::random_kinematic_instance(5, 3.0);
    const auto& base = *inst.engine.provider;
    CollapsedProvider merged(base);
    LocoState st = CollapsedProvider::collapse(inst.query.start);
    auto succ = merged.successors(st);
    REQUIRE_FALSE(succ.empty());
    int k = inst.file.world->orientations.count();
    for (const auto& t : succ) {
      double best = 1e18;
      for (int vh = 0; vh < k; ++vh)
        for (int ph = 0; ph < k; ++ph)
          for (const auto& b : base.successors({st.v, HeadingId(static_cast<std::uint32_t>(vh)), st.p,
                                                HeadingId(static_cast<std::uint32_t>(ph))}))
            if (CollapsedProvider::collapse(b.to) == t.to) best = std::min(best, b.cost);
      CHECK(t.cost == doctest::Approx(best));
    }
  }
}
