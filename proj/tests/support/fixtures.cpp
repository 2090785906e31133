#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "dualnav/generators.hpp"

namespace fixtures {

namespace {

struct StateSpec {
  std::string node;
  double vh;
  CellCoord cell;
  double ph;
};

LocoState make_state(const DualWorld& w, const StateSpec& s) {
  return {*w.vgraph.find_node(s.node), w.orientations.snap(s.vh), w.grid.id(s.cell), w.orientations.snap(s.ph)};
}

// Cell (x, y) centred at (x, y).
PhysicalGrid unit_grid(int cols, int rows) { return PhysicalGrid(cols, rows, 1.0, {-0.5, -0.5}); }

}  // namespace

MILRange example_range() {
  MILRange r(0.1);
  const std::vector<std::tuple<double, double, double>> rows{
      {1, 0, 1},   {1.4, 0, 2}, {2, 0, 3},   {2.2, 1, 3}, {3, 2, 3},   {3.6, 2, 3}, {4, 2, 3},
      {4.1, 2, 3}, {5, 2, 4},   {5.1, 2, 4}, {6, 3, 4},   {6.3, 3, 4}, {8.1, 4, 7}};
  for (auto [l, a, b] : rows) r.set(l, {a, b});
  return r;
}

TableInstance motivating_example() {
  auto w = std::make_shared<DualWorld>();
  w->orientations = OrientationSet(360);
  w->grid = unit_grid(14, 10);
  auto& g = w->vgraph;
  for (auto [name, x, y] : std::vector<std::tuple<const char*, double, double>>{
           {"S", 2, 8}, {"A", 6, 8}, {"B", 12, 6}, {"Cn", 12, 5}, {"T", 10, 2},
           {"D", 3, 6}, {"X", 4, 4}, {"G", 6, 3}, {"E", 3, 1}, {"F", 5, 1}})
    g.add_node({x, y}, name);
  auto id = [&](const char* n) { return *g.find_node(std::string(n)); };
  g.add_edge(id("S"), id("A"), 4);
  g.add_edge(id("A"), id("B"), 6.32);
  g.add_edge(id("B"), id("Cn"), 1);
  g.add_edge(id("Cn"), id("T"), 3.61);
  for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{
           {"S", "D"}, {"D", "X"}, {"X", "G"}, {"G", "T"}, {"S", "E"}, {"E", "F"}, {"F", "T"}})
    g.add_edge(id(a), id(b));

  TableInstance inst;
  inst.world = w;
  const std::vector<std::pair<std::string, StateSpec>> specs{
      {"st1", {"S", 270, {2, 4}, 270}},   {"st2", {"A", 0, {6, 6}, 30}},    {"st3", {"B", 330, {10, 6}, 0}},
      {"st4", {"Cn", 270, {11, 5}, 315}}, {"st5", {"T", 225, {10, 2}, 240}}, {"red_d", {"D", 297, {3, 3}, 297}},
      {"red_x", {"X", 297, {4, 2}, 297}}, {"red_g", {"G", 333, {6, 2}, 333}}, {"red_t", {"T", 346, {9, 2}, 346}},
      {"brown_e", {"E", 278, {3, 6}, 0}}, {"brown_f", {"F", 0, {5, 6}, 0}},   {"brown_t", {"T", 11, {9, 7}, 0}}};
  for (const auto& [name, s] : specs) inst.states.emplace(name, make_state(*w, s));
  auto st = [&](const char* n) { return inst.states.at(n); };
  std::vector<MILRecord> recs{
      {st("st1"), st("st2"), 0.17},    {st("st2"), st("st3"), 1},        {st("st3"), st("st4"), 1.18},
      {st("st4"), st("st5"), 1},       {st("st1"), st("red_d"), 1},      {st("red_d"), st("red_x"), 1},
      {st("red_x"), st("red_g"), 1},   {st("red_g"), st("red_t"), 1},    {st("st1"), st("brown_e"), 1.2},
      {st("brown_e"), st("brown_f"), 1.2}, {st("brown_f"), st("brown_t"), 1.2}};
  inst.provider = std::make_unique<TableMILProvider>(w, recs);
  inst.range = build_mil_range(*inst.provider);
  inst.query = {st("st1"), id("T"), 3.35};
  return inst;
}

TableInstance pruning_example() {
  auto w = std::make_shared<DualWorld>();
  w->orientations = OrientationSet(8);
  w->grid = unit_grid(16, 12);
  auto& g = w->vgraph;
  for (auto [name, x, y] : std::vector<std::tuple<const char*, double, double>>{
           {"S", 2, 8},  {"D", 3, 6},  {"X", 4, 4},  {"G", 6, 3},  {"T", 10, 2}, {"A", 6, 8},  {"B", 12, 6},
           {"Cn", 12, 5}, {"H", 6, 6}, {"P1", 1, 6}, {"P2", 1, 4}, {"P3", 1, 2}, {"P4", 3, 1}, {"P5", 6, 1},
           {"Q", 13, 4}, {"R", 12, 2}})
    g.add_node({x, y}, name);
  auto id = [&](const std::string& n) { return *g.find_node(n); };
  const std::vector<std::tuple<const char*, const char*, double>> edges{
      {"S", "D", 2.2},  {"D", "X", 2.2}, {"X", "G", 2.2},  {"G", "T", 4.1},  {"S", "A", 4},    {"A", "B", 6.3},
      {"B", "Cn", 1},   {"Cn", "T", 3.6}, {"S", "P1", 2.2}, {"P1", "P2", 2},  {"P2", "P3", 2},  {"P3", "P4", 2},
      {"P4", "P5", 2},  {"P5", "T", 4.1}, {"D", "H", 2.2},  {"H", "G", 3},    {"D", "B", 8.1},  {"B", "Q", 2},
      {"Q", "R", 2},    {"R", "T", 1}};
  for (auto [a, b, l] : edges) g.add_edge(id(a), id(b), l);

  TableInstance inst;
  inst.world = w;
  inst.range = example_range();
  // One state per node on the default cell (node position), except D and X which carry a second state:
  // the *1 variants sit in open floor (more clearance) and are more expensive downstream.
  const std::vector<std::pair<std::string, StateSpec>> specs{
      {"s0", {"S", 270, {2, 8}, 270}},  {"d1", {"D", 0, {7, 6}, 0}},    {"d2", {"D", 45, {1, 10}, 0}},
      {"x1", {"X", 0, {8, 5}, 0}},      {"x2", {"X", 45, {1, 9}, 0}},   {"g0", {"G", 0, {6, 3}, 0}},
      {"t1", {"T", 0, {10, 2}, 0}},     {"a0", {"A", 0, {6, 8}, 0}},    {"b0", {"B", 0, {12, 6}, 0}},
      {"cn0", {"Cn", 0, {12, 5}, 0}},   {"h0", {"H", 0, {6, 6}, 0}},    {"p1", {"P1", 0, {1, 6}, 0}},
      {"p2", {"P2", 0, {1, 4}, 0}},     {"p3", {"P3", 0, {1, 2}, 0}},   {"p4", {"P4", 0, {3, 1}, 0}},
      {"p5", {"P5", 0, {6, 1}, 0}},     {"q0", {"Q", 0, {13, 4}, 0}},   {"r0", {"R", 0, {12, 2}, 0}}};
  for (const auto& [name, s] : specs) inst.states.emplace(name, make_state(*w, s));
  auto st = [&](const char* n) { return inst.states.at(n); };

  std::vector<MILRecord> recs{
      {st("s0"), st("d2"), 1},  {st("d2"), st("x2"), 1},   {st("x2"), st("g0"), 1},   {st("s0"), st("d1"), 1},
      {st("d1"), st("x1"), 1.6}, {st("x1"), st("g0"), 1},  {st("g0"), st("t1"), 2.2}, {st("s0"), st("p1"), 1},
      {st("p1"), st("p2"), 0},  {st("p2"), st("p3"), 0},   {st("p3"), st("p4"), 0},   {st("p4"), st("p5"), 0},
      {st("p5"), st("t1"), 2}};
  // Every other directed pair across a v-edge costs the pessimistic bound of its length.
  std::set<std::pair<LocoState, LocoState>> listed;
  for (const auto& r : recs) listed.insert({r.from, r.to});
  for (const auto& [na, a] : inst.states) {
    for (const auto& [nb, b] : inst.states) {
      auto len = g.edge_length(a.v, b.v);
      if (!len || a.v == b.v || listed.count({a, b})) continue;
      recs.push_back({a, b, inst.range.beta(*len)});
    }
  }
  inst.provider = std::make_unique<TableMILProvider>(w, recs);
  inst.query = {st("s0"), id("T"), 5.5};
  return inst;
}

TableInstance random_table_instance(std::uint64_t seed, const RandomTableOptions& opt) {
  std::mt19937_64 rng(seed);
  auto uni = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto w = std::make_shared<DualWorld>();
  w->orientations = OrientationSet(8);
  w->grid = PhysicalGrid::room(3.0, 3.0, 0.5);
  auto cells = w->grid.free_cells();
  auto& g = w->vgraph;
  int n = pick(opt.min_nodes, opt.max_nodes);
  for (int i = 0; i < n; ++i) g.add_node({std::round(uni(0, 10) * 10) / 10, std::round(uni(0, 10) * 10) / 10}, "n" + std::to_string(i));
  // Random spanning tree keeps the graph connected; extra edges by coin flip.
  for (int i = 1; i < n; ++i) g.add_edge(NodeId(static_cast<std::uint32_t>(i)), NodeId(static_cast<std::uint32_t>(pick(0, i - 1))));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (uni(0, 1) < opt.edge_keep * 0.5) g.add_edge(NodeId(static_cast<std::uint32_t>(i)), NodeId(static_cast<std::uint32_t>(j)));

  TableInstance inst;
  inst.world = w;
  std::vector<std::vector<LocoState>> per_node(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    int count = pick(1, opt.max_states_per_node);
    std::set<LocoState> made;
    while (static_cast<int>(made.size()) < count) {
      LocoState st{NodeId(static_cast<std::uint32_t>(i)), HeadingId(static_cast<std::uint32_t>(pick(0, 7))),
                   cells[static_cast<std::size_t>(pick(0, static_cast<int>(cells.size()) - 1))],
                   HeadingId(static_cast<std::uint32_t>(pick(0, 7)))};
      made.insert(st);
    }
    per_node[static_cast<std::size_t>(i)].assign(made.begin(), made.end());
  }
  std::vector<MILRecord> recs;
  for (int i = 0; i < n; ++i) {
    for (const auto& e : g.neighbors(NodeId(static_cast<std::uint32_t>(i)))) {
      for (const auto& a : per_node[static_cast<std::size_t>(i)]) {
        for (const auto& b : per_node[e.to.value]) {
          if (uni(0, 1) > opt.transition_keep) continue;
          recs.push_back({a, b, std::round(uni(0, opt.max_cost) * 100) / 100});
        }
      }
    }
  }
  std::vector<LocoState> all;
  for (const auto& v : per_node) all.insert(all.end(), v.begin(), v.end());
  inst.provider = std::make_unique<TableMILProvider>(w, recs, all);
  inst.range = build_mil_range(*inst.provider);
  for (std::size_t i = 0; i < all.size(); ++i) inst.states.emplace("s" + std::to_string(i), all[i]);

  // Pick a start/target pair that is connected in the loco-state space.
  for (int attempt = 0; attempt < 200; ++attempt) {
    LocoState start = all[static_cast<std::size_t>(pick(0, static_cast<int>(all.size()) - 1))];
    NodeId target(static_cast<std::uint32_t>(pick(0, n - 1)));
    if (target == start.v) continue;
    DROPQuery q{start, target, 1e18};
    SolveResult cheapest = min_cost_path(*inst.provider, q);
    if (!cheapest.path) continue;
    q.budget = cheapest.path->cost + uni(0, opt.budget_slack);
    inst.query = q;
    return inst;
  }
  inst.query = {all.front(), all.front().v, 0.0};
  return inst;
}

KinematicInstance random_kinematic_instance(std::uint64_t seed, double budget) {
  KinematicInstance ki;
  CityOptions opt;
  opt.block = 6.0;
  opt.cutoff = 7.0;
  opt.room = {4.0, 4.0, 0.5, 8};
  ki.file = generate_synthetic_city(6, 0.7, seed, opt);
  ki.engine = build_engine(ki.file.world, CostModel{});
  const auto& w = *ki.file.world;
  std::mt19937_64 rng(seed ^ 0x5bd1e995ULL);
  auto cells = w.grid.free_cells();
  const auto n = static_cast<int>(w.vgraph.node_count());
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  NodeId s(static_cast<std::uint32_t>(pick(0, 5))), t(static_cast<std::uint32_t>(pick(0, n - 1)));
  if (t == s) t = NodeId((s.value + 1) % static_cast<std::uint32_t>(n));
  ki.query = {{s, HeadingId(static_cast<std::uint32_t>(pick(0, 7))), cells[static_cast<std::size_t>(pick(0, static_cast<int>(cells.size()) - 1))],
               HeadingId(static_cast<std::uint32_t>(pick(0, 7)))},
              t, budget};
  return ki;
}

}  // namespace fixtures
