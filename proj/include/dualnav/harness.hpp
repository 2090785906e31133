#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dualnav/baselines.hpp"
#include "dualnav/dewn.hpp"
#include "dualnav/kinematic_mil.hpp"
#include "dualnav/world_io.hpp"

namespace dualnav {

// Shared per-world precomputation: the MIL provider and its range.
struct Engine {
  DualWorldPtr world;
  CostModel model;
  std::unique_ptr<MILProvider> provider;
  MILRange range;
  double precompute_seconds = 0.0;
};

Engine build_engine(DualWorldPtr world, const CostModel& model, const CatalogConfig& catalog = {});

struct SolveOptions {
  DewnOptions dewn;
  KspResetOptions ksp;
};

// Algorithms: basic_dp, dewn, dewn_cos, mcp, ksp_reset, cola.
const std::vector<std::string>& algorithm_names();
SolveResult solve_with(const Engine& engine, const std::string& algorithm, const DROPQuery& query,
                       const SolveOptions& options = {});

struct QuerySpec {
  std::string id;
  DROPQuery query;
};

struct SampleSpec {
  int count = 0;
  double min_distance = 0.0, max_distance = 1e18;  // Euclidean start-target band
  double budget_lo = 1.0, budget_hi = 1.0;
};

// Seeded random queries: distinct start and target nodes inside the band, random free start cell and headings.
std::vector<QuerySpec> sample_queries(const DualWorld& world, const SampleSpec& spec, std::uint64_t seed);

struct Scenario {
  std::string world;  // path, resolved relative to the scenario file
  std::uint64_t seed = 0;
  std::vector<QuerySpec> queries;
  std::optional<SampleSpec> sample;
  std::vector<std::string> algorithms;
  std::optional<CostModel> cost_model;
  SolveOptions options;
};

Scenario scenario_from_json(const nlohmann::json& j, const DualWorld* world);

struct RunRow {
  std::string algorithm, query_id, status;
  bool feasible = false;
  double length = 0.0, cost = 0.0, seconds = 0.0;  // NaN length/cost when no path was produced
};

struct Aggregate {
  std::string algorithm;
  std::size_t runs = 0, feasible = 0;
  double feasibility = 0.0, mean_length = 0.0, mean_cost = 0.0, mean_seconds = 0.0;  // means over feasible runs
};

struct RunReport {
  std::vector<RunRow> rows;
  double precompute_seconds = 0.0;
  std::vector<Aggregate> aggregates() const;
  std::string rows_csv() const;
  std::string aggregates_csv() const;
};

RunReport run_matrix(const Engine& engine, const std::vector<QuerySpec>& queries, const std::vector<std::string>& algorithms,
                     const SolveOptions& options = {});

}  // namespace dualnav
