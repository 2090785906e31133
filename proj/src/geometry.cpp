#include "dualnav/geometry.hpp"

#include <algorithm>

namespace dualnav {

double wrap_degrees(double deg) {
  double r = std::fmod(deg, 360.0);
  if (r < 0) r += 360.0;
  if (r >= 360.0) r -= 360.0;
  return r;
}

double wrap_signed_degrees(double deg) {
  double r = wrap_degrees(deg);
  return r > 180.0 ? r - 360.0 : r;
}

double bearing_deg(Point a, Point b) { return wrap_degrees(rad_to_deg(std::atan2(b.y - a.y, b.x - a.x))); }

double signed_area(const Polygon& poly) {
  double s = 0.0;
  const auto& v = poly.vertices;
  for (std::size_t i = 0; i < v.size(); ++i) s += cross(v[i], v[(i + 1) % v.size()]);
  return 0.5 * s;
}

double point_segment_distance(Point p, Point a, Point b) {
  Point d = b - a;
  double len2 = dot(d, d);
  if (len2 == 0.0) return distance(p, a);
  double t = std::clamp(dot(p - a, d) / len2, 0.0, 1.0);
  return distance(p, a + d * t);
}

bool on_boundary(Point p, const Polygon& poly, double tol) {
  const auto& v = poly.vertices;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (point_segment_distance(p, v[i], v[(i + 1) % v.size()]) <= tol) return true;
  return false;
}

bool strictly_inside(Point p, const Polygon& poly, double tol) {
  if (on_boundary(p, poly, tol)) return false;
  const auto& v = poly.vertices;
  bool inside = false;
  for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
    if ((v[i].y > p.y) != (v[j].y > p.y)) {
      double x = v[j].x + (p.y - v[j].y) * (v[i].x - v[j].x) / (v[i].y - v[j].y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

bool segment_crosses_interior(Point a, Point b, const Polygon& poly) {
  Point d = b - a;
  double len = norm(d);
  if (len <= kEps) return false;
  // Split the segment at every boundary contact; each open piece is then wholly inside or outside.
  std::vector<double> ts{0.0, 1.0};
  const auto& v = poly.vertices;
  auto add = [&](double t) {
    if (t > -kEps && t < 1.0 + kEps) ts.push_back(std::clamp(t, 0.0, 1.0));
  };
  for (std::size_t i = 0; i < v.size(); ++i) {
    Point p = v[i], q = v[(i + 1) % v.size()];
    Point e = q - p;
    double denom = cross(d, e);
    if (std::abs(denom) > 1e-15 * len * norm(e)) {
      double t = cross(p - a, e) / denom;
      double u = cross(p - a, d) / denom;
      if (u > -kEps && u < 1.0 + kEps) add(t);
    } else if (std::abs(cross(p - a, d)) / len <= kEps) {
      add(dot(p - a, d) / (len * len));
      add(dot(q - a, d) / (len * len));
    }
    if (point_segment_distance(p, a, b) <= kEps) add(dot(p - a, d) / (len * len));
  }
  std::sort(ts.begin(), ts.end());
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    if (ts[i + 1] - ts[i] <= 1e-12) continue;
    Point mid = a + d * (0.5 * (ts[i] + ts[i + 1]));
    if (strictly_inside(mid, poly)) return true;
  }
  return false;
}

}  // namespace dualnav
