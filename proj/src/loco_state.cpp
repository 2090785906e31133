#include "dualnav/loco_state.hpp"

#include <sstream>

#include "dualnav/errors.hpp"

namespace dualnav {

void validate_state(const DualWorld& world, const LocoState& st) {
  (void)world.vgraph.node(st.v);
  int k = world.orientations.count();
  if (st.vh.value >= static_cast<std::uint32_t>(k) || st.ph.value >= static_cast<std::uint32_t>(k))
    throw Error(ErrorKind::InvalidInput, "heading index outside orientation set");
  if (st.p.value >= world.grid.cell_count()) throw Error(ErrorKind::OutOfWorld, "cell outside grid");
  if (world.grid.blocked(st.p)) throw Error(ErrorKind::Collision, "physical location on obstacle cell");
}

std::string describe(const DualWorld& world, const LocoState& st) {
  std::ostringstream os;
  Point v = world.vgraph.node(st.v).position;
  Point p = world.grid.center(st.p);
  os << "((" << v.x << "," << v.y << ")," << world.orientations.degrees(st.vh) << ",(" << p.x << "," << p.y << "),"
     << world.orientations.degrees(st.ph) << ")";
  return os.str();
}

}  // namespace dualnav
