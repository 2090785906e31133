#include "dualnav/physical_grid.hpp"

#include <algorithm>
#include <limits>

#include "dualnav/errors.hpp"

namespace dualnav {

namespace {
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kStraight = 1e-12;

Point arc_center(const Arc& arc) {
  double t = deg_to_rad(arc.heading_deg);
  return arc.start + Point{-std::sin(t), std::cos(t)} * (1.0 / arc.curvature);
}

double curve_length(const Curve& c) {
  if (auto* s = std::get_if<Segment>(&c)) return distance(s->a, s->b);
  return std::get<Arc>(c).length;
}

Point curve_point(const Curve& c, double s) {
  if (auto* seg = std::get_if<Segment>(&c)) {
    double len = distance(seg->a, seg->b);
    return len <= 0 ? seg->a : seg->a + (seg->b - seg->a) * (s / len);
  }
  return std::get<Arc>(c).point_at(s);
}

// Arc-length parameters where the curve meets the line {axis coordinate == value}.
void line_crossings(const Curve& c, bool vertical, double value, double length, std::vector<double>& out) {
  if (auto* seg = std::get_if<Segment>(&c)) {
    double a = vertical ? seg->a.x : seg->a.y;
    double b = vertical ? seg->b.x : seg->b.y;
    if (std::abs(b - a) <= 1e-15) return;
    double t = (value - a) / (b - a);
    if (t > -kEps && t < 1.0 + kEps) out.push_back(std::clamp(t, 0.0, 1.0) * length);
    return;
  }
  const Arc& arc = std::get<Arc>(c);
  if (std::abs(arc.curvature) <= kStraight) {
    Segment s{arc.start, arc.point_at(arc.length)};
    line_crossings(Curve{s}, vertical, value, length, out);
    return;
  }
  double k = arc.curvature;
  Point ctr = arc_center(arc);
  double t0 = deg_to_rad(arc.heading_deg);
  std::vector<double> psis;
  if (vertical) {
    double v = k * (value - ctr.x);  // sin(psi)
    if (std::abs(v) > 1.0 + 1e-12) return;
    v = std::clamp(v, -1.0, 1.0);
    psis = {std::asin(v), kPi - std::asin(v)};
  } else {
    double w = k * (ctr.y - value);  // cos(psi)
    if (std::abs(w) > 1.0 + 1e-12) return;
    w = std::clamp(w, -1.0, 1.0);
    psis = {std::acos(w), -std::acos(w)};
  }
  double lo = std::min(t0, t0 + k * length), hi = std::max(t0, t0 + k * length);
  for (double psi : psis) {
    for (double n = std::ceil((lo - psi) / kTwoPi - 1e-12); psi + n * kTwoPi <= hi + 1e-12; n += 1.0) {
      double s = (psi + n * kTwoPi - t0) / k;
      if (s > -kEps && s < length + kEps) out.push_back(std::clamp(s, 0.0, length));
    }
  }
}
}  // namespace

Point Arc::point_at(double s) const {
  if (std::abs(curvature) <= kStraight) return start + unit_vector_deg(heading_deg) * s;
  double t0 = deg_to_rad(heading_deg);
  double t1 = t0 + curvature * s;
  return start + Point{std::sin(t1) - std::sin(t0), std::cos(t0) - std::cos(t1)} * (1.0 / curvature);
}

double Arc::heading_at(double s) const { return heading_deg + rad_to_deg(curvature * s); }

PhysicalGrid::PhysicalGrid(int cols, int rows, double cell_size, Point origin)
    : cols_(cols), rows_(rows), cell_size_(cell_size), origin_(origin) {
  if (cols < 1 || rows < 1 || !(cell_size > 0)) throw Error(ErrorKind::InvalidInput, "bad grid dimensions");
  blocked_.assign(static_cast<std::size_t>(cols) * rows, 0);
  for (int c = 0; c < cols; ++c) {
    blocked_[index({c, 0})] = 1;
    blocked_[index({c, rows - 1})] = 1;
  }
  for (int r = 0; r < rows; ++r) {
    blocked_[index({0, r})] = 1;
    blocked_[index({cols - 1, r})] = 1;
  }
}

PhysicalGrid PhysicalGrid::from_rows(const std::vector<std::string>& rows, double cell_size, Point origin) {
  if (rows.empty()) throw Error(ErrorKind::InvalidInput, "empty grid");
  int h = static_cast<int>(rows.size());
  int w = static_cast<int>(rows.front().size());
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != w) throw Error(ErrorKind::InvalidInput, "ragged grid rows");
  PhysicalGrid g(w, h, cell_size, origin);
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < w; ++c)
      if (rows[h - 1 - r][c] == '#') g.set_blocked({c, r}, true);
  return g;
}

PhysicalGrid PhysicalGrid::room(double width, double height, double cell_size) {
  int cols = static_cast<int>(std::llround(width / cell_size)) + 2;
  int rows = static_cast<int>(std::llround(height / cell_size)) + 2;
  return PhysicalGrid(cols, rows, cell_size, {-cell_size, -cell_size});
}

void PhysicalGrid::set_blocked(CellCoord c, bool b) {
  if (!in_grid(c)) throw Error(ErrorKind::OutOfWorld, "cell outside grid");
  bool ring = c.col == 0 || c.row == 0 || c.col == cols_ - 1 || c.row == rows_ - 1;
  blocked_[index(c)] = (b || ring) ? 1 : 0;
}

Point PhysicalGrid::center(CellId id) const {
  CellCoord c = coord(id);
  return {origin_.x + (c.col + 0.5) * cell_size_, origin_.y + (c.row + 0.5) * cell_size_};
}

std::optional<CellId> PhysicalGrid::cell_of(Point p) const {
  CellCoord c{static_cast<int>(std::floor((p.x - origin_.x) / cell_size_)),
              static_cast<int>(std::floor((p.y - origin_.y) / cell_size_))};
  if (!in_grid(c)) return std::nullopt;
  return id(c);
}

std::vector<CellId> PhysicalGrid::free_cells() const {
  std::vector<CellId> out;
  for (std::size_t i = 0; i < blocked_.size(); ++i)
    if (!blocked_[i]) out.push_back(CellId(static_cast<std::uint32_t>(i)));
  return out;
}

std::vector<std::string> PhysicalGrid::to_rows() const {
  std::vector<std::string> out;
  for (int r = rows_ - 1; r >= 0; --r) {
    std::string line;
    for (int c = 0; c < cols_; ++c) line += blocked_[index({c, r})] ? '#' : '.';
    out.push_back(line);
  }
  return out;
}

std::vector<CellCoord> PhysicalGrid::cells_touched(const Curve& curve) const {
  double len = curve_length(curve);
  std::vector<double> ss{0.0, len};
  if (len > 0) {
    Point a = curve_point(curve, 0.0);
    double xlo = (a.x - len - origin_.x) / cell_size_, xhi = (a.x + len - origin_.x) / cell_size_;
    double ylo = (a.y - len - origin_.y) / cell_size_, yhi = (a.y + len - origin_.y) / cell_size_;
    for (double i = std::floor(xlo); i <= std::ceil(xhi); i += 1.0)
      line_crossings(curve, true, origin_.x + i * cell_size_, len, ss);
    for (double j = std::floor(ylo); j <= std::ceil(yhi); j += 1.0)
      line_crossings(curve, false, origin_.y + j * cell_size_, len, ss);
  }
  std::sort(ss.begin(), ss.end());
  ss.erase(std::unique(ss.begin(), ss.end(), [](double x, double y) { return y - x <= 1e-12; }), ss.end());
  std::vector<double> samples;
  for (std::size_t i = 0; i < ss.size(); ++i) {
    samples.push_back(ss[i]);
    if (i + 1 < ss.size()) samples.push_back(0.5 * (ss[i] + ss[i + 1]));
  }
  std::vector<CellCoord> out;
  double e = kEps / cell_size_;
  for (double s : samples) {
    Point p = curve_point(curve, s);
    double fx = (p.x - origin_.x) / cell_size_, fy = (p.y - origin_.y) / cell_size_;
    for (int c = static_cast<int>(std::floor(fx - e)); c <= static_cast<int>(std::floor(fx + e)); ++c)
      for (int r = static_cast<int>(std::floor(fy - e)); r <= static_cast<int>(std::floor(fy + e)); ++r)
        if (std::find(out.begin(), out.end(), CellCoord{c, r}) == out.end()) out.push_back({c, r});
  }
  return out;
}

double PhysicalGrid::clearance(CellId id) const {
  Point p = center(id);
  double best = std::numeric_limits<double>::infinity();
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (!blocked_[index({c, r})]) continue;
      double x0 = origin_.x + c * cell_size_, y0 = origin_.y + r * cell_size_;
      double dx = std::max({x0 - p.x, 0.0, p.x - (x0 + cell_size_)});
      double dy = std::max({y0 - p.y, 0.0, p.y - (y0 + cell_size_)});
      best = std::min(best, std::hypot(dx, dy));
    }
  }
  return best;
}

bool path_clear_physical(const PhysicalGrid& grid, const Curve& curve) {
  for (const auto& c : grid.cells_touched(curve))
    if (grid.blocked(c)) return false;
  return true;
}

double clear_distance(const PhysicalGrid& grid, Point start, double heading_deg, double max_length) {
  Segment seg{start, start + unit_vector_deg(heading_deg) * max_length};
  Curve curve{seg};
  double len = max_length;
  std::vector<double> ss{0.0, len};
  double cs = grid.cell_size();
  Point o = grid.origin();
  for (double i = std::floor((std::min(seg.a.x, seg.b.x) - o.x) / cs); i <= std::ceil((std::max(seg.a.x, seg.b.x) - o.x) / cs); i += 1.0)
    line_crossings(curve, true, o.x + i * cs, len, ss);
  for (double j = std::floor((std::min(seg.a.y, seg.b.y) - o.y) / cs); j <= std::ceil((std::max(seg.a.y, seg.b.y) - o.y) / cs); j += 1.0)
    line_crossings(curve, false, o.y + j * cs, len, ss);
  std::sort(ss.begin(), ss.end());
  double e = kEps / cs;
  auto touches_blocked = [&](double s) {
    Point p = curve_point(curve, s);
    double fx = (p.x - o.x) / cs, fy = (p.y - o.y) / cs;
    for (int c = static_cast<int>(std::floor(fx - e)); c <= static_cast<int>(std::floor(fx + e)); ++c)
      for (int r = static_cast<int>(std::floor(fy - e)); r <= static_cast<int>(std::floor(fy + e)); ++r)
        if (grid.blocked(CellCoord{c, r})) return true;
    return false;
  };
  for (std::size_t i = 0; i < ss.size(); ++i) {
    if (touches_blocked(ss[i])) return ss[i];
    if (i + 1 < ss.size() && ss[i + 1] - ss[i] > 1e-12 && touches_blocked(0.5 * (ss[i] + ss[i + 1]))) return ss[i];
  }
  return max_length;
}

}  // namespace dualnav
