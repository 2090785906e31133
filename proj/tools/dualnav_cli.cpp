#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "dualnav/errors.hpp"
#include "dualnav/generators.hpp"
#include "dualnav/harness.hpp"
#include "dualnav/spatial.hpp"
#include "dualnav/svg.hpp"

using namespace dualnav;
namespace fs = std::filesystem;

namespace {

struct Common {
  std::string world, cost_model, mil_table, out;
  std::optional<double> reset_cost;
  double budget = 1.0, epsilon = 0.1;
  int k = 5;
  std::string algo = "dewn";
  bool no_ilsp = false, no_slsp = false, no_ulsl = false, no_teco = false, no_pwso = false, no_vwno = false, cos = false;
  // query
  std::string start, target, cell;
  double vh = 0.0, ph = 0.0;
};

void add_world(CLI::App* app, Common& c) {
  app->add_option("--world", c.world, "world JSON file")->required()->check(CLI::ExistingFile);
  app->add_option("--cost-model", c.cost_model, "usage_count | detection_likelihood | detection_threshold");
  app->add_option("--reset-cost", c.reset_cost, "cost of one Reset");
  app->add_option("--mil-table", c.mil_table, "explicit transition table instead of the kinematic catalog")
      ->check(CLI::ExistingFile);
}

void add_solver(CLI::App* app, Common& c) {
  app->add_option("--C", c.budget, "RW cost budget");
  app->add_option("--epsilon", c.epsilon, "approximation slack for dewn");
  app->add_option("--k", c.k, "candidate paths for ksp_reset, neighbours for knn");
  app->add_option("--algo", c.algo, "basic_dp | dewn | dewn_cos | mcp | ksp_reset | cola");
  app->add_flag("--no-ilsp", c.no_ilsp, "disable cost-infeasibility pruning");
  app->add_flag("--no-slsp", c.no_slsp, "disable length-suboptimality pruning");
  app->add_flag("--no-ulsl", c.no_ulsl, "disable lock-and-postpone");
  app->add_flag("--no-teco", c.no_teco, "order the reference search by g only");
  app->add_flag("--no-pwso", c.no_pwso, "ignore physical clearance in ties");
  app->add_flag("--no-vwno", c.no_vwno, "ignore virtual naturalness in ties");
  app->add_flag("--cos", c.cos, "merge headings before searching");
}

void add_start(CLI::App* app, Common& c) {
  app->add_option("--start", c.start, "start node name or index")->required();
  app->add_option("--cell", c.cell, "start physical cell as col,row")->required();
  app->add_option("--vh", c.vh, "start virtual heading in degrees");
  app->add_option("--ph", c.ph, "start physical heading in degrees");
}

SolveOptions solve_options(const Common& c) {
  SolveOptions o;
  o.dewn.epsilon = c.epsilon;
  o.dewn.cos_simplify = c.cos;
  o.dewn.pruning = {!c.no_ilsp, !c.no_slsp, !c.no_ulsl};
  o.dewn.ordering = {!c.no_teco, !c.no_pwso, !c.no_vwno};
  o.ksp.k = c.k;
  return o;
}

nlohmann::json node_ref(const std::string& s) {
  if (!s.empty() && std::all_of(s.begin(), s.end(), ::isdigit)) return std::stoll(s);
  return s;
}

struct Loaded {
  WorldFile file;
  Engine engine;
};

Loaded load(const Common& c) {
  Loaded l;
  l.file = load_world(c.world);
  CostModel model = l.file.cost_model.value_or(CostModel{});
  if (!c.cost_model.empty()) model = cost_model_by_name(c.cost_model);
  if (c.reset_cost) model.reset_cost = *c.reset_cost;
  if (c.mil_table.empty()) {
    l.engine = build_engine(l.file.world, model);
  } else {
    auto records = mil_table_from_json(*l.file.world, read_json(c.mil_table));
    l.engine.world = l.file.world;
    l.engine.model = model;
    l.engine.provider = std::make_unique<TableMILProvider>(l.file.world, std::move(records));
    l.engine.range = build_mil_range(*l.engine.provider);
  }
  return l;
}

LocoState start_state(const DualWorld& w, const Common& c) {
  auto comma = c.cell.find(',');
  if (comma == std::string::npos) throw Error(ErrorKind::InvalidInput, "--cell expects col,row");
  nlohmann::json j{{"node", node_ref(c.start)},
                   {"cell", {std::stoi(c.cell.substr(0, comma)), std::stoi(c.cell.substr(comma + 1))}},
                   {"vh", c.vh},
                   {"ph", c.ph}};
  return state_from_json(w, j);
}

void print_path(const DualWorld& w, const SolveResult& r) {
  fmt::print("status: {}\n", to_string(r.status));
  if (!r.note.empty()) fmt::print("note: {}\n", r.note);
  if (!r.path) return;
  fmt::print("length: {:.6f}\ncost: {:.6f}\nseconds: {:.6f}\n", r.path->length, r.path->cost, r.stats.seconds);
  for (std::size_t i = 0; i < r.path->states.size(); ++i) {
    fmt::print("  {}", describe(w, r.path->states[i]));
    if (i > 0) {
      fmt::print("  hop_cost={:.4f}", r.path->hop_costs[i - 1]);
      for (const auto& op : r.path->hop_ops[i - 1])
        fmt::print(" {}(walk={:.3f},turn={:.1f},m={:.3f})", to_string(op.kind), op.walk_length, op.turn_deg, op.magnitude);
    }
    fmt::print("\n");
  }
}

std::vector<NodeId> named_nodes(const VirtualGraph& g) {
  std::vector<NodeId> out;
  for (std::uint32_t i = 0; i < g.node_count(); ++i)
    if (!g.node(NodeId(i)).name.empty()) out.push_back(NodeId(i));
  return out;
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty()) std::cout << text;
  else write_text(out, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dual-world constrained shortest paths under redirected walking"};
  app.require_subcommand(1);
  Common c;
  std::uint64_t seed = 0;

  auto* solve = app.add_subcommand("solve", "answer one query and print the path with its operations");
  add_world(solve, c);
  add_solver(solve, c);
  add_start(solve, c);
  solve->add_option("--target", c.target, "target node")->required();

  auto* render = app.add_subcommand("render", "solve one query and write an SVG of both worlds");
  add_world(render, c);
  add_solver(render, c);
  add_start(render, c);
  render->add_option("--target", c.target, "target node")->required();
  render->add_option("--out", c.out, "SVG file")->required();

  std::string scenario;
  auto* bench = app.add_subcommand("bench", "run a scenario and write row and aggregate CSVs");
  bench->add_option("--scenario", scenario, "scenario JSON file")->required()->check(CLI::ExistingFile);
  bench->add_option("--out", c.out, "output prefix")->required();
  bench->add_option("--seed", seed, "overrides the scenario seed");
  bench->add_option("--cost-model", c.cost_model, "overrides the scenario cost model");
  bench->add_option("--reset-cost", c.reset_cost, "cost of one Reset");
  bench->add_option("--algo", c.algo, "comma separated algorithms (overrides the scenario)");
  bench->add_option("--epsilon", c.epsilon, "approximation slack for dewn");

  std::vector<std::string> poi_names;
  auto* knn = app.add_subcommand("knn", "k nearest POIs by feasible RW path");
  add_world(knn, c);
  add_solver(knn, c);
  add_start(knn, c);
  knn->add_option("--poi", poi_names, "candidate POIs (default: every named node)");

  double radius = 0.0;
  auto* range = app.add_subcommand("range", "POIs within a v-path length radius");
  add_world(range, c);
  add_solver(range, c);
  add_start(range, c);
  range->add_option("--radius", radius, "v-path length bound")->required();
  range->add_option("--poi", poi_names, "candidate POIs (default: every named node)");

  int width = 25, height = 25, nodes = 100;
  double open_ratio = 0.5;
  MazeOptions maze_opt;
  auto* gen_maze = app.add_subcommand("gen-maze", "write a perfect-maze world");
  gen_maze->add_option("--width", width);
  gen_maze->add_option("--height", height);
  gen_maze->add_option("--seed", seed);
  gen_maze->add_option("--room", maze_opt.room.width, "physical room side in metres");
  gen_maze->add_option("--out", c.out, "world JSON file")->required();

  auto* gen_city = app.add_subcommand("gen-city", "write a synthetic city world");
  gen_city->add_option("--nodes", nodes);
  gen_city->add_option("--open-ratio", open_ratio);
  gen_city->add_option("--seed", seed);
  gen_city->add_option("--out", c.out, "world JSON file")->required();

  auto* mil_table = app.add_subcommand("mil-table", "precompute the MIL range and export it as CSV");
  add_world(mil_table, c);
  mil_table->add_option("--out", c.out, "CSV file (stdout when absent)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve || *render) {
      Loaded l = load(c);
      const auto& w = *l.engine.world;
      DROPQuery q{start_state(w, c), node_from_json(w.vgraph, node_ref(c.target)), c.budget};
      SolveResult r = solve_with(l.engine, c.algo, q, solve_options(c));
      if (r.path) attach_operations(*l.engine.provider, *r.path);
      if (*solve) print_path(w, r);
      else {
        std::vector<RWPath> paths;
        if (r.path) paths.push_back(*r.path);
        write_text(c.out, export_paths_svg(l.file.polygons, w, paths));
        fmt::print("status: {}\nwrote {}\n", to_string(r.status), c.out);
      }
      return r.feasible() ? 0 : 2;
    }
    if (*knn || *range) {
      Loaded l = load(c);
      const auto& w = *l.engine.world;
      std::vector<NodeId> pois;
      for (const auto& n : poi_names) pois.push_back(node_from_json(w.vgraph, node_ref(n)));
      if (pois.empty()) pois = named_nodes(w.vgraph);
      SpatialEngine engine(*l.engine.provider, l.engine.range, solve_options(c).dewn);
      LocoState st = start_state(w, c);
      std::vector<PoiHit> hits;
      if (*knn) {
        auto res = dknn(engine, st, c.k, c.budget, pois);
        hits = res.hits;
        if (res.fewer_than_k) fmt::print("fewer than {} feasible POIs\n", c.k);
      } else {
        hits = drange(engine, st, radius, c.budget, pois);
      }
      for (const auto& h : hits) {
        const auto& n = w.vgraph.node(h.poi);
        fmt::print("{}\tlength={:.6f}\tcost={:.6f}\n", n.name.empty() ? std::to_string(h.poi.value) : n.name, h.path.length,
                   h.path.cost);
      }
      return 0;
    }
    if (*bench) {
      fs::path spath(scenario);
      auto sj = read_json(spath);
      fs::path wpath = spath.parent_path() / sj.at("world").get<std::string>();
      WorldFile wf = load_world(wpath);
      Scenario sc = scenario_from_json(sj, wf.world.get());
      if (bench->count("--seed")) sc.seed = seed;
      CostModel model = sc.cost_model.value_or(wf.cost_model.value_or(CostModel{}));
      if (!c.cost_model.empty()) model = cost_model_by_name(c.cost_model);
      if (c.reset_cost) model.reset_cost = *c.reset_cost;
      if (bench->count("--algo")) {
        sc.algorithms.clear();
        std::stringstream ss(c.algo);
        for (std::string a; std::getline(ss, a, ',');) sc.algorithms.push_back(a);
      }
      if (bench->count("--epsilon")) sc.options.dewn.epsilon = c.epsilon;
      auto queries = sc.queries;
      if (sc.sample) {
        auto more = sample_queries(*wf.world, *sc.sample, sc.seed);
        queries.insert(queries.end(), more.begin(), more.end());
      }
      Engine engine = build_engine(wf.world, model);
      RunReport rep = run_matrix(engine, queries, sc.algorithms, sc.options);
      write_text(c.out + "_rows.csv", rep.rows_csv());
      write_text(c.out + "_aggregates.csv", rep.aggregates_csv());
      std::cout << rep.aggregates_csv();
      fmt::print("precompute_seconds: {:.3f}\n", rep.precompute_seconds);
      return 0;
    }
    if (*gen_maze) {
      maze_opt.room.height = maze_opt.room.width;
      save_world(generate_maze(width, height, seed, maze_opt), c.out);
      return 0;
    }
    if (*gen_city) {
      save_world(generate_synthetic_city(nodes, open_ratio, seed), c.out);
      return 0;
    }
    if (*mil_table) {
      Loaded l = load(c);
      emit(c.out, l.engine.range.to_csv());
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
