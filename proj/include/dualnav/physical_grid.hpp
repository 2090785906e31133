#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dualnav/geometry.hpp"
#include "dualnav/ids.hpp"

namespace dualnav {

struct Segment {
  Point a, b;
};

// Circular arc starting at `start` with initial heading (degrees) and signed curvature (rad/m, CCW positive).
struct Arc {
  Point start;
  double heading_deg = 0.0;
  double curvature = 0.0;
  double length = 0.0;
  Point point_at(double s) const;
  double heading_at(double s) const;  // degrees, unwrapped
};

using Curve = std::variant<Segment, Arc>;

struct CellCoord {
  int col = 0, row = 0;
  friend bool operator==(const CellCoord&, const CellCoord&) = default;
};

// Occupancy grid. Row 0 is the bottom row (smallest y); the outer ring is always obstacle.
class PhysicalGrid {
 public:
  PhysicalGrid() = default;
  PhysicalGrid(int cols, int rows, double cell_size, Point origin = {});
  // Text rows as drawn: first string is the top row. '#' obstacle, anything else free.
  static PhysicalGrid from_rows(const std::vector<std::string>& rows, double cell_size, Point origin = {});
  // Free rectangle of the given interior size surrounded by a one-cell wall ring.
  static PhysicalGrid room(double width, double height, double cell_size);

  int cols() const { return cols_; }
  int rows() const { return rows_; }
  double cell_size() const { return cell_size_; }
  Point origin() const { return origin_; }
  std::size_t cell_count() const { return blocked_.size(); }

  void set_blocked(CellCoord c, bool blocked);
  bool in_grid(CellCoord c) const { return c.col >= 0 && c.row >= 0 && c.col < cols_ && c.row < rows_; }
  bool blocked(CellCoord c) const { return !in_grid(c) || blocked_[index(c)]; }
  bool blocked(CellId id) const { return blocked(coord(id)); }
  bool free(CellId id) const { return !blocked(id); }

  CellId id(CellCoord c) const { return CellId(static_cast<std::uint32_t>(index(c))); }
  CellCoord coord(CellId id) const {
    return {static_cast<int>(id.value % static_cast<std::uint32_t>(cols_)),
            static_cast<int>(id.value / static_cast<std::uint32_t>(cols_))};
  }
  Point center(CellId id) const;
  std::optional<CellId> cell_of(Point p) const;
  std::vector<CellId> free_cells() const;
  std::vector<std::string> to_rows() const;

  // Cells whose closed square meets the curve. Cells outside the grid are reported with in_grid == false.
  std::vector<CellCoord> cells_touched(const Curve& curve) const;
  // Distance from the cell centre to the nearest obstacle cell square.
  double clearance(CellId id) const;

 private:
  std::size_t index(CellCoord c) const { return static_cast<std::size_t>(c.row) * cols_ + c.col; }
  int cols_ = 0, rows_ = 0;
  double cell_size_ = 0.3;
  Point origin_;
  std::vector<unsigned char> blocked_;
};

bool path_clear_physical(const PhysicalGrid& grid, const Curve& curve);

// Longest prefix (<= max_length) of the straight ray that stays clear.
double clear_distance(const PhysicalGrid& grid, Point start, double heading_deg, double max_length);

}  // namespace dualnav
