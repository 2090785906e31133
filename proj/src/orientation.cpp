#include "dualnav/orientation.hpp"

#include <cmath>

#include "dualnav/errors.hpp"
#include "dualnav/geometry.hpp"

namespace dualnav {

OrientationSet::OrientationSet(int count) : count_(count) {
  if (count < 1) throw Error(ErrorKind::InvalidInput, "orientation count must be positive");
}

HeadingId OrientationSet::snap(double deg) const {
  double x = wrap_degrees(deg) / step();
  double lo = std::floor(x);
  double frac = x - lo;
  long idx = static_cast<long>(lo);
  if (frac > 0.5 + 1e-9) ++idx;
  else if (frac >= 0.5 - 1e-9) ++idx;  // tie: counter-clockwise
  idx %= count_;
  return HeadingId(static_cast<std::uint32_t>(idx));
}

HeadingId OrientationSet::rotate(HeadingId h, int steps) const {
  long v = (static_cast<long>(h.value) + steps) % count_;
  if (v < 0) v += count_;
  return HeadingId(static_cast<std::uint32_t>(v));
}

int OrientationSet::steps_between(HeadingId a, HeadingId b) const {
  int d = (static_cast<int>(b.value) - static_cast<int>(a.value)) % count_;
  if (d < 0) d += count_;
  if (2 * d > count_) d -= count_;
  return d;
}

}  // namespace dualnav
