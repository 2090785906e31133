#include "dualnav/svg.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace dualnav {

namespace {

constexpr double kPanel = 400.0, kGap = 30.0;
constexpr const char* kColors[] = {"#1f5fbf", "#c0392b", "#2e8b57", "#8e44ad", "#d35400"};

struct Frame {
  double min_x, min_y, scale, offset_x;
  Point map(Point p, double panel_h) const {
    return {offset_x + (p.x - min_x) * scale, panel_h - (p.y - min_y) * scale};
  }
};

Frame frame_for(Rect r, double offset_x) {
  double w = std::max(r.max_x - r.min_x, 1e-9), h = std::max(r.max_y - r.min_y, 1e-9);
  return {r.min_x, r.min_y, kPanel / std::max(w, h), offset_x};
}

std::string polyline(const std::vector<Point>& pts, const char* color) {
  std::string s = "<polyline fill=\"none\" stroke-width=\"2\" stroke=\"";
  s += color;
  s += "\" points=\"";
  for (auto p : pts) s += fmt::format("{:.2f},{:.2f} ", p.x, p.y);
  s += "\"/>\n";
  return s;
}

char glyph(OpKind k) {
  switch (k) {
    case OpKind::Reset: return 'R';
    case OpKind::Translation: return 'T';
    case OpKind::Rotation: return 'O';
    case OpKind::Curvature: return 'C';
  }
  return '?';
}

}  // namespace

std::string export_paths_svg(const VirtualWorld& polygons, const DualWorld& world, std::span<const RWPath> paths) {
  const auto& grid = world.grid;
  Rect vr = polygons.bounds;
  if (vr.area() <= 0.0 && world.vgraph.node_count() > 0) {
    vr = {1e300, 1e300, -1e300, -1e300};
    for (std::uint32_t i = 0; i < world.vgraph.node_count(); ++i) {
      Point p = world.vgraph.node(NodeId(i)).position;
      vr = {std::min(vr.min_x, p.x), std::min(vr.min_y, p.y), std::max(vr.max_x, p.x), std::max(vr.max_y, p.y)};
    }
  }
  Rect pr{grid.origin().x, grid.origin().y, grid.origin().x + grid.cols() * grid.cell_size(),
          grid.origin().y + grid.rows() * grid.cell_size()};
  Frame vf = frame_for(vr, 0.0), pf = frame_for(pr, kPanel + kGap);
  double height = kPanel;

  std::string out = fmt::format(
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" "
      "height=\"{:.0f}\" viewBox=\"0 0 {:.0f} {:.0f}\">\n",
      2 * kPanel + kGap, height, 2 * kPanel + kGap, height);
  out += "<g id=\"virtual\">\n";
  for (const auto& poly : polygons.obstacles) {
    out += "<polygon fill=\"#888\" points=\"";
    for (auto v : poly.vertices) {
      Point q = vf.map(v, height);
      out += fmt::format("{:.2f},{:.2f} ", q.x, q.y);
    }
    out += "\"/>\n";
  }
  for (std::uint32_t i = 0; i < world.vgraph.node_count(); ++i) {
    Point q = vf.map(world.vgraph.node(NodeId(i)).position, height);
    out += fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"1.5\" fill=\"#333\"/>\n", q.x, q.y);
  }
  out += "</g>\n<g id=\"physical\">\n";
  for (int r = 0; r < grid.rows(); ++r) {
    for (int c = 0; c < grid.cols(); ++c) {
      if (!grid.blocked(CellCoord{c, r})) continue;
      Point lo = pf.map({grid.origin().x + c * grid.cell_size(), grid.origin().y + (r + 1) * grid.cell_size()}, height);
      out += fmt::format("<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" fill=\"#888\"/>\n", lo.x, lo.y,
                         grid.cell_size() * pf.scale, grid.cell_size() * pf.scale);
    }
  }
  out += "</g>\n";
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const auto& path = paths[i];
    const char* color = kColors[i % std::size(kColors)];
    std::vector<Point> vpts, ppts;
    for (const auto& st : path.states) {
      vpts.push_back(vf.map(world.vgraph.node(st.v).position, height));
      ppts.push_back(pf.map(grid.center(st.p), height));
    }
    out += fmt::format("<g id=\"path{}\">\n", i);
    out += polyline(vpts, color) + polyline(ppts, color);
    for (std::size_t h = 0; h < path.hop_ops.size() && h + 1 < ppts.size(); ++h) {
      std::string label;
      for (const auto& op : path.hop_ops[h])
        if (!op.is_identity()) label += glyph(op.kind);
      if (label.empty()) continue;
      out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" font-size=\"10\" fill=\"{}\">{}</text>\n", ppts[h + 1].x + 3,
                         ppts[h + 1].y - 3, color, label);
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace dualnav
