#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dualnav/cost_model.hpp"
#include "dualnav/mil.hpp"
#include "dualnav/virtual_world.hpp"

namespace dualnav {

enum class GraphSource { Visibility, Explicit };

// Everything a world file describes. `polygons` is kept so the world can be rendered and re-saved.
struct WorldFile {
  VirtualWorld polygons;
  GraphSource graph_source = GraphSource::Visibility;
  NodeSet node_set = NodeSet::PoisAndCorners;
  double cutoff = 0.0;  // 0 means unbounded
  DualWorldPtr world;
  std::optional<CostModel> cost_model;
};

CostModel cost_model_from_json(const nlohmann::json& j);
nlohmann::json cost_model_to_json(const CostModel& model);
CostModel cost_model_by_name(const std::string& kind);

WorldFile world_from_json(const nlohmann::json& j);
nlohmann::json world_to_json(const WorldFile& world);
WorldFile load_world(const std::filesystem::path& path);
void save_world(const WorldFile& world, const std::filesystem::path& path);

// States are {"node": name-or-index, "vh": degrees, "cell": [col, row], "ph": degrees}.
LocoState state_from_json(const DualWorld& world, const nlohmann::json& j);
nlohmann::json state_to_json(const DualWorld& world, const LocoState& st);
NodeId node_from_json(const VirtualGraph& graph, const nlohmann::json& j);

// Transition table fixture; see README for the grammar.
std::vector<MILRecord> mil_table_from_json(const DualWorld& world, const nlohmann::json& j);
nlohmann::json mil_table_to_json(const DualWorld& world, const std::vector<MILRecord>& records);

nlohmann::json read_json(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace dualnav
