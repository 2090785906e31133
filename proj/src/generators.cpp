#include "dualnav/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "dualnav/errors.hpp"

namespace dualnav {

namespace {

Polygon box(double x0, double y0, double x1, double y1) { return Polygon{{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}}; }

DualWorldPtr assemble(VirtualGraph graph, const PhysicalRoom& room) {
  auto w = std::make_shared<DualWorld>();
  w->vgraph = std::move(graph);
  w->grid = PhysicalGrid::room(room.width, room.height, room.cell_size);
  w->orientations = OrientationSet(room.orientations);
  return w;
}

}  // namespace

WorldFile generate_maze(int width, int height, std::uint64_t seed, const MazeOptions& opt) {
  if (width < 1 || height < 1) throw Error(ErrorKind::InvalidInput, "maze needs positive dimensions");
  std::mt19937_64 rng(seed);
  const int n = width * height;
  // open_east[c] / open_north[c]: passage from cell c to its right / upper neighbour.
  std::vector<char> open_east(n, 0), open_north(n, 0), seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int c = stack.back(), x = c % width, y = c / width;
    std::vector<int> options;
    if (x + 1 < width && !seen[c + 1]) options.push_back(0);
    if (y + 1 < height && !seen[c + width]) options.push_back(1);
    if (x > 0 && !seen[c - 1]) options.push_back(2);
    if (y > 0 && !seen[c - width]) options.push_back(3);
    if (options.empty()) {
      stack.pop_back();
      continue;
    }
    int dir = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    int next = dir == 0 ? c + 1 : dir == 1 ? c + width : dir == 2 ? c - 1 : c - width;
    if (dir == 0) open_east[c] = 1;
    else if (dir == 1) open_north[c] = 1;
    else if (dir == 2) open_east[next] = 1;
    else open_north[next] = 1;
    seen[next] = 1;
    stack.push_back(next);
  }

  const double s = opt.cell, h = opt.wall / 2.0;
  WorldFile wf;
  VirtualWorld& vw = wf.polygons;
  vw.bounds = {-opt.wall, -opt.wall, width * s + opt.wall, height * s + opt.wall};
  // Outer frame as four long walls, inner walls one per closed side.
  vw.obstacles.push_back(box(-h, -h, width * s + h, h));
  vw.obstacles.push_back(box(-h, height * s - h, width * s + h, height * s + h));
  vw.obstacles.push_back(box(-h, h, h, height * s - h));
  vw.obstacles.push_back(box(width * s - h, h, width * s + h, height * s - h));
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      int c = y * width + x;
      if (x + 1 < width && !open_east[c]) vw.obstacles.push_back(box((x + 1) * s - h, y * s + h, (x + 1) * s + h, (y + 1) * s - h));
      if (y + 1 < height && !open_north[c]) vw.obstacles.push_back(box(x * s + h, (y + 1) * s - h, (x + 1) * s - h, (y + 1) * s + h));
    }
  }
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x)
      vw.pois.push_back({"c" + std::to_string(x) + "_" + std::to_string(y), {(x + 0.5) * s, (y + 0.5) * s}});
  vw = normalized(std::move(vw));
  wf.node_set = NodeSet::PoisOnly;
  wf.cutoff = s * 1.01;
  wf.world = assemble(build_visibility_graph(vw, wf.cutoff, wf.node_set), opt.room);
  return wf;
}

double open_area_ratio(const VirtualWorld& world) {
  double covered = 0.0;
  for (const auto& p : world.obstacles) covered += std::abs(signed_area(p));
  return 1.0 - covered / world.bounds.area();
}

WorldFile generate_synthetic_city(int nodes, double open_ratio, std::uint64_t seed, const CityOptions& opt) {
  if (!(open_ratio > 0.0 && open_ratio < 1.0)) throw Error(ErrorKind::InvalidRatio, "open ratio must lie in (0, 1)");
  if (nodes < 1) throw Error(ErrorKind::InvalidInput, "city needs at least one node");
  std::mt19937_64 rng(seed);
  const int lots_per_side = std::max(2, static_cast<int>(std::ceil(std::sqrt(nodes / 2.0))));
  const double side = lots_per_side * opt.block;
  const double lot = opt.lot_fraction * opt.block, margin = (opt.block - lot) / 2.0;
  const double want = (1.0 - open_ratio) * side * side;
  if (want > lots_per_side * lots_per_side * lot * lot + 1e-9)
    throw Error(ErrorKind::InvalidRatio, "requested obstacle area exceeds the lot capacity");

  std::vector<int> order(static_cast<std::size_t>(lots_per_side * lots_per_side));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  WorldFile wf;
  VirtualWorld& vw = wf.polygons;
  vw.bounds = {0.0, 0.0, side, side};
  double left = want;
  for (int lot_id : order) {
    if (left <= 1e-9) break;
    double x0 = (lot_id % lots_per_side) * opt.block + margin, y0 = (lot_id / lots_per_side) * opt.block + margin;
    double width = std::min(lot, left / lot);  // the last building is cut to make the area exact
    vw.obstacles.push_back(box(x0, y0, x0 + width, y0 + lot));
    left -= width * lot;
  }
  std::uniform_real_distribution<double> coord(0.0, side);
  int guard = 0;
  while (static_cast<int>(vw.pois.size()) < nodes && guard++ < nodes * 1000) {
    Point p{coord(rng), coord(rng)};
    bool blocked = std::any_of(vw.obstacles.begin(), vw.obstacles.end(), [&](const Polygon& poly) {
      return strictly_inside(p, poly) || on_boundary(p, poly, 1e-6);
    });
    if (!blocked) vw.pois.push_back({"p" + std::to_string(vw.pois.size()), p});
  }
  vw = normalized(std::move(vw));
  wf.node_set = NodeSet::PoisAndCorners;
  wf.cutoff = opt.cutoff;
  wf.world = assemble(build_visibility_graph(vw, wf.cutoff > 0 ? wf.cutoff : std::numeric_limits<double>::infinity(), wf.node_set),
                      opt.room);
  return wf;
}

}  // namespace dualnav
