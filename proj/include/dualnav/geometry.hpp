#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace dualnav {

inline constexpr double kEps = 1e-9;
inline constexpr double kPi = 3.14159265358979323846;

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(Point a, double s) { return {a.x * s, a.y * s}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(b - a); }

inline double deg_to_rad(double d) { return d * kPi / 180.0; }
inline double rad_to_deg(double r) { return r * 180.0 / kPi; }
// Maps any angle to [0, 360).
double wrap_degrees(double deg);
// Maps any angle to (-180, 180].
double wrap_signed_degrees(double deg);
inline Point unit_vector_deg(double deg) { return {std::cos(deg_to_rad(deg)), std::sin(deg_to_rad(deg))}; }
// Bearing of b seen from a, degrees in [0, 360).
double bearing_deg(Point a, Point b);

struct Rect {
  double min_x = 0.0, min_y = 0.0, max_x = 0.0, max_y = 0.0;
  bool contains(Point p, double tol = kEps) const {
    return p.x >= min_x - tol && p.x <= max_x + tol && p.y >= min_y - tol && p.y <= max_y + tol;
  }
  double area() const { return (max_x - min_x) * (max_y - min_y); }
};

struct Polygon {
  std::vector<Point> vertices;
};

double signed_area(const Polygon& poly);
// Distance from p to the closed segment [a, b].
double point_segment_distance(Point p, Point a, Point b);
bool on_boundary(Point p, const Polygon& poly, double tol = kEps);
// True when p lies in the open interior (boundary excluded).
bool strictly_inside(Point p, const Polygon& poly, double tol = kEps);
// True when the open segment (a, b) enters the interior of poly; grazing contact is not a crossing.
bool segment_crosses_interior(Point a, Point b, const Polygon& poly);

}  // namespace dualnav
