#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dualnav/geometry.hpp"
#include "dualnav/ids.hpp"

namespace dualnav {

struct Poi {
  std::string name;
  Point position;
};

struct VirtualWorld {
  Rect bounds;
  std::vector<Polygon> obstacles;
  std::vector<Poi> pois;
};

// Validates polygons (>= 3 vertices, non-zero area) and reorients them counter-clockwise.
// Throws Error{DegenerateGeometry}.
VirtualWorld normalized(VirtualWorld world);

bool segment_clear_virtual(const VirtualWorld& world, Point a, Point b);

struct VEdge {
  NodeId to;
  double length = 0.0;
};

struct VNode {
  Point position;
  std::string name;  // POI name, empty for obstacle corners
};

class VirtualGraph {
 public:
  VirtualGraph() = default;
  explicit VirtualGraph(double cutoff) : cutoff_(cutoff) {}

  NodeId add_node(Point position, std::string name = {});
  // Undirected; a repeated pair keeps the first length.
  void add_edge(NodeId a, NodeId b, double length);
  void add_edge(NodeId a, NodeId b) { add_edge(a, b, distance(node(a).position, node(b).position)); }

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const;
  const VNode& node(NodeId id) const;
  std::span<const VEdge> neighbors(NodeId id) const;
  std::optional<double> edge_length(NodeId a, NodeId b) const;
  std::optional<NodeId> find_node(Point p, double tol = 1e-6) const;
  std::optional<NodeId> find_node(const std::string& name) const;
  double cutoff() const { return cutoff_; }
  double max_edge_length() const;

 private:
  void check(NodeId id) const;
  double cutoff_ = 0.0;
  std::vector<VNode> nodes_;
  std::vector<std::vector<VEdge>> adjacency_;
};

enum class NodeSet { PoisAndCorners, PoisOnly };

// Nodes are POIs first (in input order) then distinct obstacle corners.
VirtualGraph build_visibility_graph(const VirtualWorld& world, double cutoff,
                                    NodeSet node_set = NodeSet::PoisAndCorners);

std::vector<VEdge> virtual_neighbors(const VirtualGraph& graph, NodeId node);

}  // namespace dualnav
