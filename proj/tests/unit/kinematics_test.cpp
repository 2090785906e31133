#include <doctest.h>

#include <cmath>

#include "dualnav/cost_model.hpp"
#include "dualnav/errors.hpp"
#include "dualnav/rw_ops.hpp"

using namespace dualnav;

TEST_SUITE("rw-kinematics") {
  TEST_CASE("translation scales the virtual advance by the gain") {
    auto room = PhysicalGrid::room(4.0, 4.0, 0.5);
    DualPose p{{0, 0}, 90, {1, 1}, 0};
    auto q = apply_operation(p, RWOperation::translation(1.0, 1.2), room);
    CHECK(q.v.x == doctest::Approx(0.0));
    CHECK(q.v.y == doctest::Approx(1.2));
    CHECK(q.p.x == doctest::Approx(2.0));
    CHECK(q.p.y == doctest::Approx(1.0));
    CHECK(q.ph == doctest::Approx(0.0));
  }

  TEST_CASE("rotation turns the virtual heading by gain times the physical turn") {
    PhysicalGrid room = PhysicalGrid::room(2, 2, 0.5);
    DualPose p{{0, 0}, 0, {1, 1}, 0};
    auto q = apply_operation(p, RWOperation::rotation(90.0, 0.8), room);
    CHECK(q.vh == doctest::Approx(72.0));
    CHECK(q.ph == doctest::Approx(90.0));
    auto r = apply_operation(p, RWOperation::reset(-90.0), room);
    CHECK(r.vh == doctest::Approx(0.0));
    CHECK(r.ph == doctest::Approx(270.0));
  }

  TEST_CASE("curvature walks a circular arc physically and a straight line virtually") {
    auto room = PhysicalGrid::room(10, 10, 0.5);
    double k = 0.25, s = 2.0;
    DualPose p{{0, 0}, 0, {2, 2}, 0};
    auto q = apply_operation(p, RWOperation::curvature(s, k), room);
    CHECK(q.v.x == doctest::Approx(2.0));
    CHECK(q.p.x == doctest::Approx(2 + std::sin(k * s) / k));
    CHECK(q.p.y == doctest::Approx(2 + (1 - std::cos(k * s)) / k));
    CHECK(q.ph == doctest::Approx(rad_to_deg(k * s)));
  }

  TEST_CASE("walking into a wall raises Collision") {
    auto room = PhysicalGrid::room(2, 2, 0.5);
    DualPose p{{0, 0}, 0, {1, 1}, 0};
    try {
      apply_operation(p, RWOperation::translation(5.0, 1.0), room);
      FAIL("expected a collision");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Collision);
    }
  }

  TEST_CASE("loco-state transitions snap headings and land on the aligned neighbour") {
    DualWorld w;
    auto a = w.vgraph.add_node({0, 0}, "a");
    auto b = w.vgraph.add_node({2, 0}, "b");
    auto c = w.vgraph.add_node({0, 2}, "c");
    w.vgraph.add_edge(a, b);
    w.vgraph.add_edge(a, c);
    w.grid = PhysicalGrid::room(4, 4, 0.5);
    LocoState st{a, HeadingId(0), w.grid.id({2, 2}), HeadingId(0)};
    auto next = apply_operation(w, st, RWOperation::translation(2.0 / 1.1, 1.1));
    CHECK(next.v == b);
    auto turned = apply_sequence(w, st, {RWOperation::rotation(90, 1.0), RWOperation::translation(2.0, 1.0)});
    CHECK(turned.v == c);
    CHECK(turned.vh.value == 2);
    CHECK(turned.ph.value == 2);
    CHECK(w.grid.coord(turned.p).row == 6);
    CHECK_THROWS_AS(apply_operation(w, st, RWOperation::translation(1.0, 1.0)), Error);
  }

  TEST_CASE("identity operations cost nothing under every model") {
    for (auto kind : {CostKind::UsageCount, CostKind::DetectionLikelihood, CostKind::DetectionThreshold}) {
      CostModel m;
      m.kind = kind;
      CHECK(operation_cost(RWOperation::translation(3, 1.0), m) == 0.0);
      CHECK(operation_cost(RWOperation::rotation(45, 1.0), m) == 0.0);
      CHECK(operation_cost(RWOperation::curvature(2, 0.0), m) == 0.0);
      CHECK(operation_cost(RWOperation::reset(0.0), m) == 0.0);
    }
  }

  TEST_CASE("threshold model charges walked metres only outside the interval") {
    CostModel m;
    CHECK(operation_cost(RWOperation::translation(2.0, 1.2), m) == 0.0);
    CHECK(operation_cost(RWOperation::translation(2.0, 1.3), m) == doctest::Approx(2.0));
    CHECK(operation_cost(RWOperation::rotation(90, 0.77), m) == 0.0);
    CHECK(operation_cost(RWOperation::rotation(90, 0.7), m) == doctest::Approx(1.0));
    CHECK(operation_cost(RWOperation::curvature(1.5, 0.2), m) == doctest::Approx(1.5));
    m.weight_walking_by_distance = false;
    CHECK(operation_cost(RWOperation::translation(2.0, 1.3), m) == doctest::Approx(1.0));
  }

  TEST_CASE("usage count charges one per non-identity operation and c_Reset per Reset") {
    CostModel m;
    m.kind = CostKind::UsageCount;
    m.reset_cost = 2.5;
    OperationSequence ops{RWOperation::reset(90), RWOperation::rotation(45, 0.9), RWOperation::translation(2, 1.1)};
    CHECK(sequence_cost(ops, m) == doctest::Approx(4.5));
    m.reset_angle_weighted = true;
    CHECK(operation_cost(RWOperation::reset(90), m) == doctest::Approx(1.25));
    CHECK(max_orientation_correction_cost(m) == doctest::Approx(2.5));
  }

  TEST_CASE("default likelihood curve ramps from the interval edge and passes the published sample") {
    auto curve = default_likelihood_curve(OpKind::Translation, {0.78, 1.22});
    CHECK(curve(0.78) == doctest::Approx(0.0));
    CHECK(curve(1.0) == doctest::Approx(0.0));
    CHECK(curve(1.22) == doctest::Approx(0.0));
    CHECK(curve(1.44) == doctest::Approx(1.0));
    CHECK(curve(0.6) == doctest::Approx(0.9));
    CHECK(curve(0.56) == doctest::Approx(1.0));
    CHECK(curve(1.33) == doctest::Approx(0.5));
    CostModel m;
    m.kind = CostKind::DetectionLikelihood;
    m.weight_walking_by_distance = false;
    CHECK(operation_cost(RWOperation::translation(1, 1.33), m) == doctest::Approx(0.5));
  }

  TEST_CASE("custom cost functions are used verbatim and negative costs are rejected") {
    CostModel m;
    m.kind = CostKind::Custom;
    m.custom = [](const RWOperation& op) { return op.kind == OpKind::Reset ? 7.0 : -1.0; };
    CHECK(operation_cost(RWOperation::reset(45), m) == 7.0);
    CHECK_THROWS_AS(operation_cost(RWOperation::translation(1, 1.1), m), Error);
  }
}
