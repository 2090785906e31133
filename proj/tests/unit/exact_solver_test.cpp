#include <doctest.h>

#include <chrono>
#include <random>

#include "dualnav/basic_dp.hpp"
#include "dualnav/errors.hpp"
#include "dualnav/knapsack.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dualnav;

namespace {
int knapsack_brute_force(const std::vector<KnapsackItem>& items, int cap) {
  int best = 0, n = static_cast<int>(items.size());
  for (int mask = 0; mask < (1 << n); ++mask) {
    int w = 0, v = 0;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) w += items[i].weight, v += items[i].value;
    if (w <= cap) best = std::max(best, v);
  }
  return best;
}
}  // namespace

TEST_SUITE("exact-solver") {
  TEST_CASE("motivating example: the only affordable route is the long one") {
    auto inst = fixtures::motivating_example();
    auto r = basic_dp(*inst.provider, inst.query);
    REQUIRE(r.feasible());
    CHECK(r.path->length == doctest::Approx(14.93).epsilon(1e-9));
    CHECK(r.path->cost == doctest::Approx(3.35).epsilon(1e-9));
    CHECK(r.path->states.back() == inst.states.at("st5"));
    // A looser budget admits the short route.
    auto loose = inst.query;
    loose.budget = 4.0;
    auto r2 = basic_dp(*inst.provider, loose);
    REQUIRE(r2.feasible());
    CHECK(r2.path->length == doctest::Approx(distance({2, 8}, {3, 6}) * 3 + distance({6, 3}, {10, 2})));
    auto tight = inst.query;
    tight.budget = 3.3;
    CHECK(basic_dp(*inst.provider, tight).status == Status::Infeasible);
  }

  TEST_CASE("basic_dp equals exhaustive enumeration on random tables") {
    int feasible = 0;
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
      auto inst = fixtures::random_table_instance(seed);
      auto oracle = oracles::shortest_within_budget(*inst.provider, inst.query);
      auto r = basic_dp(*inst.provider, inst.query);
      REQUIRE(r.feasible() == oracle.has_value());
      if (!oracle) continue;
      ++feasible;
      CHECK(r.path->length == doctest::Approx(oracle->length).epsilon(1e-12));
      CHECK(r.path->cost <= inst.query.budget + 1e-9);
      // The returned path is a real path in the table.
      auto again = path_from_states(*inst.provider, r.path->states);
      CHECK(again.cost == doctest::Approx(r.path->cost));
    }
    CHECK(feasible >= 50);
  }

  TEST_CASE("min_cost_path equals the exhaustive least cost") {
    for (std::uint64_t seed = 100; seed < 140; ++seed) {
      auto inst = fixtures::random_table_instance(seed);
      auto oracle = oracles::least_cost(*inst.provider, inst.query);
      auto r = min_cost_path(*inst.provider, inst.query);
      REQUIRE(r.path.has_value() == oracle.has_value());
      if (oracle) CHECK(r.path->cost == doctest::Approx(*oracle));
    }
  }

  TEST_CASE("start at the target is a zero-length answer") {
    auto inst = fixtures::motivating_example();
    auto q = inst.query;
    q.target = q.start.v;
    auto r = basic_dp(*inst.provider, q);
    REQUIRE(r.feasible());
    CHECK(r.path->length == 0.0);
    CHECK(r.path->hops() == 0);
  }

  TEST_CASE("knapsack reduction decodes to the brute-force optimum") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
      int n = std::uniform_int_distribution<int>(1, 8)(rng);
      std::vector<KnapsackItem> items;
      for (int i = 0; i < n; ++i)
        items.push_back({std::uniform_int_distribution<int>(1, 20)(rng), std::uniform_int_distribution<int>(1, 20)(rng)});
      int cap = std::uniform_int_distribution<int>(0, 40)(rng);
      auto red = kp_to_drop(items, cap);
      auto r = basic_dp(*red.provider, red.query);
      REQUIRE(r.feasible());
      auto chosen = red.decode(*r.path);
      int w = 0;
      for (int i : chosen) w += items[i].weight;
      CHECK(w <= cap);
      CHECK(red.value_of(chosen) == knapsack_brute_force(items, cap));
    }
    CHECK_THROWS_AS(kp_to_drop({{1, 1}}, -1), Error);
  }

  TEST_CASE("label DP with per-edge round-up never returns a longer-than-bound path") {
    for (std::uint64_t seed = 200; seed < 230; ++seed) {
      auto inst = fixtures::random_table_instance(seed);
      auto exact = basic_dp(*inst.provider, inst.query);
      if (!exact.feasible()) continue;
      LabelDPConfig cfg;
      cfg.unit = 0.5;
      cfg.round_up = true;
      auto rounded = label_dp(*inst.provider, inst.query, cfg).result;
      REQUIRE(rounded.feasible());
      // Rounding adds at most one unit per hop.
      CHECK(rounded.path->length <= exact.path->length + cfg.unit * static_cast<double>(exact.path->hops()) + 1e-9);
      CHECK(rounded.path->cost <= inst.query.budget + 1e-9);
    }
  }
}
