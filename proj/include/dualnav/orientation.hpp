#pragma once

#include "dualnav/ids.hpp"

namespace dualnav {

class OrientationSet {
 public:
  explicit OrientationSet(int count = 8);
  int count() const { return count_; }
  double step() const { return 360.0 / count_; }
  double degrees(HeadingId h) const { return h.value * step(); }
  // Nearest lattice heading; exact ties go to the counter-clockwise neighbour.
  HeadingId snap(double degrees) const;
  HeadingId rotate(HeadingId h, int steps) const;
  // Signed lattice steps from a to b in (-k/2, k/2].
  int steps_between(HeadingId a, HeadingId b) const;

 private:
  int count_;
};

}  // namespace dualnav
