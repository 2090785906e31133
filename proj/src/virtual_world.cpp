#include "dualnav/virtual_world.hpp"

#include <algorithm>

#include "dualnav/errors.hpp"

namespace dualnav {

VirtualWorld normalized(VirtualWorld world) {
  for (auto& poly : world.obstacles) {
    if (poly.vertices.size() < 3) throw Error(ErrorKind::DegenerateGeometry, "polygon with fewer than 3 vertices");
    double area = signed_area(poly);
    if (std::abs(area) <= kEps) throw Error(ErrorKind::DegenerateGeometry, "polygon with zero area");
    if (area < 0) std::reverse(poly.vertices.begin(), poly.vertices.end());
  }
  return world;
}

bool segment_clear_virtual(const VirtualWorld& world, Point a, Point b) {
  return std::none_of(world.obstacles.begin(), world.obstacles.end(),
                      [&](const Polygon& poly) { return segment_crosses_interior(a, b, poly); });
}

NodeId VirtualGraph::add_node(Point position, std::string name) {
  nodes_.push_back({position, std::move(name)});
  adjacency_.emplace_back();
  return NodeId(static_cast<std::uint32_t>(nodes_.size() - 1));
}

void VirtualGraph::check(NodeId id) const {
  if (id.value >= nodes_.size()) throw Error(ErrorKind::UnknownNode, "node " + std::to_string(id.value));
}

void VirtualGraph::add_edge(NodeId a, NodeId b, double length) {
  check(a);
  check(b);
  if (a == b || edge_length(a, b)) return;
  adjacency_[a.value].push_back({b, length});
  adjacency_[b.value].push_back({a, length});
}

std::size_t VirtualGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& adj : adjacency_) n += adj.size();
  return n / 2;
}

const VNode& VirtualGraph::node(NodeId id) const {
  check(id);
  return nodes_[id.value];
}

std::span<const VEdge> VirtualGraph::neighbors(NodeId id) const {
  check(id);
  return adjacency_[id.value];
}

std::optional<double> VirtualGraph::edge_length(NodeId a, NodeId b) const {
  for (const auto& e : neighbors(a))
    if (e.to == b) return e.length;
  return std::nullopt;
}

std::optional<NodeId> VirtualGraph::find_node(Point p, double tol) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (distance(nodes_[i].position, p) <= tol) return NodeId(static_cast<std::uint32_t>(i));
  return std::nullopt;
}

std::optional<NodeId> VirtualGraph::find_node(const std::string& name) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (!name.empty() && nodes_[i].name == name) return NodeId(static_cast<std::uint32_t>(i));
  return std::nullopt;
}

double VirtualGraph::max_edge_length() const {
  double m = 0.0;
  for (const auto& adj : adjacency_)
    for (const auto& e : adj) m = std::max(m, e.length);
  return m;
}

VirtualGraph build_visibility_graph(const VirtualWorld& input, double cutoff, NodeSet node_set) {
  if (!(cutoff > 0)) throw Error(ErrorKind::InvalidInput, "cutoff must be positive");
  const VirtualWorld world = normalized(input);
  VirtualGraph graph(cutoff);
  std::vector<Point> points;
  auto add_point = [&](Point p, const std::string& name) {
    for (const auto& q : points)
      if (distance(p, q) <= kEps) return;
    points.push_back(p);
    graph.add_node(p, name);
  };
  for (const auto& poi : world.pois) add_point(poi.position, poi.name);
  if (node_set == NodeSet::PoisAndCorners)
    for (const auto& poly : world.obstacles)
      for (const auto& v : poly.vertices) add_point(v, {});
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      double len = distance(points[i], points[j]);
      if (len > cutoff + kEps) continue;
      if (!segment_clear_virtual(world, points[i], points[j])) continue;
      graph.add_edge(NodeId(static_cast<std::uint32_t>(i)), NodeId(static_cast<std::uint32_t>(j)), len);
    }
  }
  return graph;
}

std::vector<VEdge> virtual_neighbors(const VirtualGraph& graph, NodeId node) {
  auto n = graph.neighbors(node);
  return {n.begin(), n.end()};
}

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateGeometry: return "DegenerateGeometry";
    case ErrorKind::UnknownNode: return "UnknownNode";
    case ErrorKind::OutOfWorld: return "OutOfWorld";
    case ErrorKind::Collision: return "Collision";
    case ErrorKind::NotNeighbors: return "NotNeighbors";
    case ErrorKind::NotAPath: return "NotAPath";
    case ErrorKind::InvalidRatio: return "InvalidRatio";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Error";
}

}  // namespace dualnav
