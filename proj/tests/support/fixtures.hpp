#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "dualnav/dewn.hpp"
#include "dualnav/harness.hpp"
#include "dualnav/kinematic_mil.hpp"
#include "dualnav/mil_range.hpp"

namespace fixtures {

using namespace dualnav;

// A hand-built instance: explicit v-graph, table MILs, a range and one query.
struct TableInstance {
  DualWorldPtr world;
  std::unique_ptr<TableMILProvider> provider;
  MILRange range;
  DROPQuery query;
  std::map<std::string, LocoState> states;  // named loco-states of the worked example
  NodeId node(const std::string& name) const { return *world->vgraph.find_node(name); }
};

// Length-to-(alpha, beta) table of the worked example's MIL range.
MILRange example_range();

// Blue/red/brown routes from S(2,8) to T(10,2); the blue route is the only one within 3.35.
TableInstance motivating_example();

// Red, blue and green routes plus the pruning decoys H(6,6) and B(12,6); budget 5.5.
TableInstance pruning_example();

struct RandomTableOptions {
  int min_nodes = 5, max_nodes = 9;
  int max_states_per_node = 3;
  double edge_keep = 0.6;
  double transition_keep = 0.7;
  double max_cost = 2.0;
  double budget_slack = 2.0;  // budget = least cost + U(0, slack)
};

// Random connected geometric graph with a random sparse MIL table; the budget is always attainable.
TableInstance random_table_instance(std::uint64_t seed, const RandomTableOptions& options = {});

struct KinematicInstance {
  WorldFile file;
  Engine engine;
  DROPQuery query;
};

// Small city-like world with the kinematic catalog (few POIs, 4 m room, 8 headings).
KinematicInstance random_kinematic_instance(std::uint64_t seed, double budget);

}  // namespace fixtures
