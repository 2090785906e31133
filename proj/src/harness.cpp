#include "dualnav/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include <fmt/format.h>

#include "dualnav/errors.hpp"

namespace dualnav {

Engine build_engine(DualWorldPtr world, const CostModel& model, const CatalogConfig& catalog) {
  auto t0 = std::chrono::steady_clock::now();
  Engine e;
  e.world = world;
  e.model = model;
  e.provider = std::make_unique<KinematicMILProvider>(world, model, catalog);
  e.range = build_mil_range(*e.provider);
  e.precompute_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return e;
}

const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names{"basic_dp", "dewn", "dewn_cos", "mcp", "ksp_reset", "cola"};
  return names;
}

SolveResult solve_with(const Engine& e, const std::string& algo, const DROPQuery& q, const SolveOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  SolveResult r;
  if (algo == "basic_dp") r = basic_dp(*e.provider, q);
  else if (algo == "dewn") r = dewn(*e.provider, e.range, q, opt.dewn);
  else if (algo == "dewn_cos") {
    DewnOptions d = opt.dewn;
    d.cos_simplify = true;
    r = dewn(*e.provider, e.range, q, d);
  } else if (algo == "mcp") r = mcp(*e.provider, q);
  else if (algo == "ksp_reset") r = ksp_reset(*e.world, e.model, q, opt.ksp);
  else if (algo == "cola") r = cola(*e.provider, e.range, q);
  else throw Error(ErrorKind::InvalidInput, "unknown algorithm '" + algo + "'");
  r.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<QuerySpec> sample_queries(const DualWorld& w, const SampleSpec& spec, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<QuerySpec> out;
  const auto n = w.vgraph.node_count();
  auto cells = w.grid.free_cells();
  if (n < 2 || cells.empty() || spec.count <= 0) return out;
  std::uniform_int_distribution<std::size_t> pick_node(0, n - 1), pick_cell(0, cells.size() - 1);
  std::uniform_int_distribution<int> pick_heading(0, w.orientations.count() - 1);
  std::uniform_real_distribution<double> pick_budget(spec.budget_lo, spec.budget_hi);
  for (int attempt = 0; static_cast<int>(out.size()) < spec.count && attempt < spec.count * 1000; ++attempt) {
    NodeId s(static_cast<std::uint32_t>(pick_node(rng))), t(static_cast<std::uint32_t>(pick_node(rng)));
    if (s == t) continue;
    double d = distance(w.vgraph.node(s).position, w.vgraph.node(t).position);
    if (d < spec.min_distance || d > spec.max_distance) continue;
    LocoState st{s, HeadingId(static_cast<std::uint32_t>(pick_heading(rng))), cells[pick_cell(rng)],
                 HeadingId(static_cast<std::uint32_t>(pick_heading(rng)))};
    out.push_back({"q" + std::to_string(out.size()), {st, t, pick_budget(rng)}});
  }
  return out;
}

Scenario scenario_from_json(const nlohmann::json& j, const DualWorld* world) {
  Scenario sc;
  sc.world = j.value("world", std::string());
  sc.seed = j.value("seed", std::uint64_t{0});
  sc.algorithms = j.value("algorithms", std::vector<std::string>{"dewn"});
  if (j.contains("cost_model")) sc.cost_model = cost_model_from_json(j.at("cost_model"));
  sc.options.dewn.epsilon = j.value("epsilon", sc.options.dewn.epsilon);
  sc.options.ksp.k = j.value("k", sc.options.ksp.k);
  if (j.contains("queries")) {
    if (!world) throw Error(ErrorKind::InvalidInput, "explicit queries need a loaded world");
    int i = 0;
    for (const auto& q : j.at("queries")) {
      std::string id = q.value("id", "q" + std::to_string(i++));
      sc.queries.push_back(
          {id, {state_from_json(*world, q.at("start")), node_from_json(world->vgraph, q.at("target")), q.at("budget").get<double>()}});
    }
  }
  if (j.contains("sample")) {
    const auto& s = j.at("sample");
    SampleSpec spec;
    spec.count = s.value("count", 0);
    spec.min_distance = s.value("min_distance", spec.min_distance);
    spec.max_distance = s.value("max_distance", spec.max_distance);
    if (s.contains("budget")) {
      spec.budget_lo = s.at("budget").at(0).get<double>();
      spec.budget_hi = s.at("budget").at(1).get<double>();
    }
    sc.sample = spec;
  }
  return sc;
}

RunReport run_matrix(const Engine& e, const std::vector<QuerySpec>& queries, const std::vector<std::string>& algorithms,
                     const SolveOptions& opt) {
  RunReport rep;
  rep.precompute_seconds = e.precompute_seconds;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (const auto& algo : algorithms) {
    for (const auto& q : queries) {
      RunRow row{algo, q.id, "", false, nan, nan, 0.0};
      try {
        SolveResult r = solve_with(e, algo, q.query, opt);
        row.status = to_string(r.status);
        row.feasible = r.feasible();
        if (r.path) row.length = r.path->length, row.cost = r.path->cost;
        row.seconds = r.stats.seconds;
      } catch (const std::exception& ex) {
        row.status = std::string("error: ") + ex.what();
      }
      rep.rows.push_back(std::move(row));
    }
  }
  return rep;
}

std::vector<Aggregate> RunReport::aggregates() const {
  std::vector<Aggregate> out;
  for (const auto& row : rows) {
    auto it = std::find_if(out.begin(), out.end(), [&](const Aggregate& a) { return a.algorithm == row.algorithm; });
    if (it == out.end()) it = out.insert(out.end(), Aggregate{row.algorithm});
    ++it->runs;
    it->mean_seconds += row.seconds;
    if (row.feasible) {
      ++it->feasible;
      it->mean_length += row.length;
      it->mean_cost += row.cost;
    }
  }
  for (auto& a : out) {
    a.feasibility = a.runs ? static_cast<double>(a.feasible) / a.runs : 0.0;
    a.mean_seconds = a.runs ? a.mean_seconds / a.runs : 0.0;
    double nan = std::numeric_limits<double>::quiet_NaN();
    a.mean_length = a.feasible ? a.mean_length / a.feasible : nan;
    a.mean_cost = a.feasible ? a.mean_cost / a.feasible : nan;
  }
  return out;
}

std::string RunReport::rows_csv() const {
  std::string s = "algorithm,query_id,feasible,length,cost,seconds\n";
  for (const auto& r : rows)
    s += fmt::format("{},{},{},{:.9g},{:.9g},{:.6f}\n", r.algorithm, r.query_id, r.feasible ? 1 : 0, r.length, r.cost, r.seconds);
  return s;
}

std::string RunReport::aggregates_csv() const {
  std::string s = "algorithm,runs,feasibility,mean_length,mean_cost,mean_seconds\n";
  for (const auto& a : aggregates())
    s += fmt::format("{},{},{:.6f},{:.9g},{:.9g},{:.6f}\n", a.algorithm, a.runs, a.feasibility, a.mean_length, a.mean_cost,
                     a.mean_seconds);
  return s;
}

}  // namespace dualnav
