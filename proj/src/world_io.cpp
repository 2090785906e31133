#include "dualnav/world_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "dualnav/errors.hpp"

namespace dualnav {

using nlohmann::json;

namespace {

Point point_from(const json& j) {
  if (j.is_array() && j.size() == 2) return {j[0].get<double>(), j[1].get<double>()};
  if (j.is_object()) return {j.at("x").get<double>(), j.at("y").get<double>()};
  throw Error(ErrorKind::InvalidInput, "point must be [x, y] or {\"x\", \"y\"}");
}

GainInterval interval_from(const json& j) {
  if (!j.is_array() || j.size() != 2) throw Error(ErrorKind::InvalidInput, "gain interval must be [lo, hi]");
  return {j[0].get<double>(), j[1].get<double>()};
}

PiecewiseLinear curve_from(const json& j) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& p : j) pts.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
  return PiecewiseLinear(std::move(pts));
}

const char* kind_name(CostKind k) {
  switch (k) {
    case CostKind::UsageCount: return "usage_count";
    case CostKind::DetectionLikelihood: return "detection_likelihood";
    case CostKind::DetectionThreshold: return "detection_threshold";
    case CostKind::Custom: return "custom";
  }
  return "?";
}

}  // namespace

CostModel cost_model_by_name(const std::string& kind) {
  CostModel m;
  if (kind == "usage_count" || kind == "usage") m.kind = CostKind::UsageCount;
  else if (kind == "detection_likelihood" || kind == "likelihood") m.kind = CostKind::DetectionLikelihood;
  else if (kind == "detection_threshold" || kind == "threshold") m.kind = CostKind::DetectionThreshold;
  else throw Error(ErrorKind::InvalidInput, "unknown cost model '" + kind + "'");
  return m;
}

CostModel cost_model_from_json(const json& j) {
  CostModel m = cost_model_by_name(j.value("kind", std::string("detection_threshold")));
  m.reset_cost = j.value("reset_cost", m.reset_cost);
  m.reset_angle_weighted = j.value("reset_angle_weighted", m.reset_angle_weighted);
  m.weight_walking_by_distance = j.value("weight_walking_by_distance", m.weight_walking_by_distance);
  if (auto t = j.find("thresholds"); t != j.end()) {
    if (t->contains("translation")) m.translation = interval_from(t->at("translation"));
    if (t->contains("rotation")) m.rotation = interval_from(t->at("rotation"));
    if (t->contains("curvature")) m.curvature = interval_from(t->at("curvature"));
  }
  if (auto c = j.find("curves"); c != j.end()) {
    if (c->contains("translation")) m.translation_curve = curve_from(c->at("translation"));
    if (c->contains("rotation")) m.rotation_curve = curve_from(c->at("rotation"));
    if (c->contains("curvature")) m.curvature_curve = curve_from(c->at("curvature"));
  }
  return m;
}

json cost_model_to_json(const CostModel& m) {
  return {{"kind", kind_name(m.kind)},
          {"reset_cost", m.reset_cost},
          {"reset_angle_weighted", m.reset_angle_weighted},
          {"weight_walking_by_distance", m.weight_walking_by_distance},
          {"thresholds",
           {{"translation", {m.translation.lo, m.translation.hi}},
            {"rotation", {m.rotation.lo, m.rotation.hi}},
            {"curvature", {m.curvature.lo, m.curvature.hi}}}}};
}

NodeId node_from_json(const VirtualGraph& g, const json& j) {
  if (j.is_number_unsigned() || j.is_number_integer()) {
    auto id = j.get<long long>();
    if (id < 0 || static_cast<std::size_t>(id) >= g.node_count())
      throw Error(ErrorKind::UnknownNode, "node index " + std::to_string(id));
    return NodeId(static_cast<std::uint32_t>(id));
  }
  if (j.is_string()) {
    if (auto n = g.find_node(j.get<std::string>())) return *n;
    throw Error(ErrorKind::UnknownNode, "node '" + j.get<std::string>() + "'");
  }
  if (auto n = g.find_node(point_from(j))) return *n;
  throw Error(ErrorKind::UnknownNode, "no node at " + j.dump());
}

WorldFile world_from_json(const json& j) {
  WorldFile wf;
  auto world = std::make_shared<DualWorld>();
  const json& v = j.at("virtual");
  const json& b = v.at("bounds");
  wf.polygons.bounds = {b.at(0).get<double>(), b.at(1).get<double>(), b.at(2).get<double>(), b.at(3).get<double>()};
  for (const auto& poly : v.value("obstacles", json::array())) {
    Polygon p;
    for (const auto& pt : poly) p.vertices.push_back(point_from(pt));
    wf.polygons.obstacles.push_back(std::move(p));
  }
  for (const auto& poi : v.value("pois", json::array()))
    wf.polygons.pois.push_back({poi.value("name", std::string()), point_from(poi.contains("at") ? poi.at("at") : poi)});
  wf.polygons = normalized(std::move(wf.polygons));

  const json graph = v.value("graph", json::object());
  if (graph.contains("nodes")) {
    wf.graph_source = GraphSource::Explicit;
    wf.cutoff = graph.value("cutoff", 0.0);
    VirtualGraph g(wf.cutoff);
    for (const auto& n : graph.at("nodes"))
      g.add_node(point_from(n.contains("at") ? n.at("at") : n), n.value("name", std::string()));
    for (const auto& e : graph.value("edges", json::array())) {
      NodeId a = node_from_json(g, e.at("from")), c = node_from_json(g, e.at("to"));
      if (e.contains("length")) g.add_edge(a, c, e.at("length").get<double>());
      else g.add_edge(a, c);
    }
    world->vgraph = std::move(g);
  } else {
    std::string set = graph.value("node_set", std::string("pois_and_corners"));
    if (set == "pois_only") wf.node_set = NodeSet::PoisOnly;
    else if (set != "pois_and_corners") throw Error(ErrorKind::InvalidInput, "unknown node_set '" + set + "'");
    wf.cutoff = graph.value("cutoff", 0.0);
    world->vgraph = build_visibility_graph(wf.polygons, wf.cutoff > 0 ? wf.cutoff : std::numeric_limits<double>::infinity(),
                                           wf.node_set);
  }

  const json& p = j.at("physical");
  double cell = p.value("cell_size", 0.3);
  if (p.contains("rows")) {
    Point origin = p.contains("origin") ? point_from(p.at("origin")) : Point{};
    world->grid = PhysicalGrid::from_rows(p.at("rows").get<std::vector<std::string>>(), cell, origin);
  } else if (p.contains("room")) {
    world->grid = PhysicalGrid::room(p.at("room").at(0).get<double>(), p.at("room").at(1).get<double>(), cell);
  } else {
    throw Error(ErrorKind::InvalidInput, "physical needs \"rows\" or \"room\"");
  }
  world->orientations = OrientationSet(j.value("orientations", 8));
  if (j.contains("cost_model")) wf.cost_model = cost_model_from_json(j.at("cost_model"));
  wf.world = std::move(world);
  return wf;
}

json world_to_json(const WorldFile& wf) {
  const auto& w = *wf.world;
  json v;
  const auto& b = wf.polygons.bounds;
  v["bounds"] = {b.min_x, b.min_y, b.max_x, b.max_y};
  v["obstacles"] = json::array();
  for (const auto& poly : wf.polygons.obstacles) {
    json pts = json::array();
    for (auto pt : poly.vertices) pts.push_back({pt.x, pt.y});
    v["obstacles"].push_back(pts);
  }
  v["pois"] = json::array();
  for (const auto& poi : wf.polygons.pois) v["pois"].push_back({{"name", poi.name}, {"x", poi.position.x}, {"y", poi.position.y}});
  if (wf.graph_source == GraphSource::Explicit) {
    json nodes = json::array(), edges = json::array();
    for (std::uint32_t i = 0; i < w.vgraph.node_count(); ++i) {
      const auto& n = w.vgraph.node(NodeId(i));
      nodes.push_back({{"name", n.name}, {"x", n.position.x}, {"y", n.position.y}});
      for (const auto& e : w.vgraph.neighbors(NodeId(i)))
        if (e.to.value > i) edges.push_back({{"from", i}, {"to", e.to.value}, {"length", e.length}});
    }
    v["graph"] = {{"nodes", nodes}, {"edges", edges}, {"cutoff", wf.cutoff}};
  } else {
    v["graph"] = {{"node_set", wf.node_set == NodeSet::PoisOnly ? "pois_only" : "pois_and_corners"}, {"cutoff", wf.cutoff}};
  }
  json out{{"virtual", v},
           {"physical",
            {{"cell_size", w.grid.cell_size()}, {"origin", {w.grid.origin().x, w.grid.origin().y}}, {"rows", w.grid.to_rows()}}},
           {"orientations", w.orientations.count()}};
  if (wf.cost_model) out["cost_model"] = cost_model_to_json(*wf.cost_model);
  return out;
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidInput, path.string() + ": " + e.what());
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + path.string());
  out << text;
}

WorldFile load_world(const std::filesystem::path& path) {
  try {
    return world_from_json(read_json(path));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidInput, path.string() + ": " + e.what());
  }
}

void save_world(const WorldFile& world, const std::filesystem::path& path) { write_text(path, world_to_json(world).dump(1) + "\n"); }

LocoState state_from_json(const DualWorld& w, const json& j) {
  NodeId v = node_from_json(w.vgraph, j.at("node"));
  const json& c = j.at("cell");
  CellCoord cc{c.at(0).get<int>(), c.at(1).get<int>()};
  if (!w.grid.in_grid(cc)) throw Error(ErrorKind::OutOfWorld, "cell " + c.dump());
  LocoState st{v, w.orientations.snap(j.value("vh", 0.0)), w.grid.id(cc), w.orientations.snap(j.value("ph", 0.0))};
  validate_state(w, st);
  return st;
}

json state_to_json(const DualWorld& w, const LocoState& st) {
  auto cc = w.grid.coord(st.p);
  const auto& n = w.vgraph.node(st.v);
  json node = n.name.empty() ? json(st.v.value) : json(n.name);
  return {{"node", node}, {"vh", w.orientations.degrees(st.vh)}, {"cell", {cc.col, cc.row}}, {"ph", w.orientations.degrees(st.ph)}};
}

std::vector<MILRecord> mil_table_from_json(const DualWorld& w, const json& j) {
  std::map<std::string, LocoState> named;
  const json states = j.value("states", json::object());
  for (const auto& [name, st] : states.items()) named.emplace(name, state_from_json(w, st));
  auto resolve = [&](const json& s) {
    if (s.is_string()) {
      auto it = named.find(s.get<std::string>());
      if (it == named.end()) throw Error(ErrorKind::InvalidInput, "unknown state '" + s.get<std::string>() + "'");
      return it->second;
    }
    return state_from_json(w, s);
  };
  std::vector<MILRecord> out;
  for (const auto& r : j.at("records")) {
    if (r.is_array()) out.push_back({resolve(r.at(0)), resolve(r.at(1)), r.at(2).get<double>()});
    else out.push_back({resolve(r.at("from")), resolve(r.at("to")), r.at("cost").get<double>()});
  }
  return out;
}

json mil_table_to_json(const DualWorld& w, const std::vector<MILRecord>& records) {
  json recs = json::array();
  for (const auto& r : records) recs.push_back({state_to_json(w, r.from), state_to_json(w, r.to), r.cost});
  return {{"records", recs}};
}

}  // namespace dualnav
