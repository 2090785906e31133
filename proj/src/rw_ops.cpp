#include "dualnav/rw_ops.hpp"

#include <cmath>
#include <limits>

#include "dualnav/errors.hpp"

namespace dualnav {

const char* to_string(OpKind kind) {
  switch (kind) {
    case OpKind::Translation: return "Translation";
    case OpKind::Rotation: return "Rotation";
    case OpKind::Curvature: return "Curvature";
    case OpKind::Reset: return "Reset";
  }
  return "?";
}

bool RWOperation::is_identity() const {
  constexpr double tol = 1e-12;
  switch (kind) {
    case OpKind::Translation: return std::abs(magnitude - 1.0) <= tol;
    case OpKind::Rotation: return std::abs(magnitude - 1.0) <= tol || std::abs(turn_deg) <= tol;
    case OpKind::Curvature: return std::abs(magnitude) <= tol;
    case OpKind::Reset: return std::abs(wrap_signed_degrees(magnitude)) <= tol;
  }
  return false;
}

double RWOperation::virtual_advance() const {
  if (kind == OpKind::Translation) return walk_length * magnitude;
  if (kind == OpKind::Curvature) return walk_length;
  return 0.0;
}

namespace {
void check_curve(const PhysicalGrid& grid, const Curve& curve) {
  for (const auto& c : grid.cells_touched(curve)) {
    if (!grid.in_grid(c)) throw Error(ErrorKind::OutOfWorld, "physical walk leaves the grid");
    if (grid.blocked(c)) throw Error(ErrorKind::Collision, "physical walk crosses an obstacle cell");
  }
}
}  // namespace

DualPose apply_operation(const DualPose& pose, const RWOperation& op, const PhysicalGrid& grid) {
  DualPose out = pose;
  switch (op.kind) {
    case OpKind::Translation: {
      if (!(op.magnitude > 0) || op.walk_length < 0) throw Error(ErrorKind::InvalidInput, "bad translation");
      out.v = pose.v + unit_vector_deg(pose.vh) * (op.walk_length * op.magnitude);
      out.p = pose.p + unit_vector_deg(pose.ph) * op.walk_length;
      check_curve(grid, Segment{pose.p, out.p});
      break;
    }
    case OpKind::Rotation:
      out.vh = wrap_degrees(pose.vh + op.magnitude * op.turn_deg);
      out.ph = wrap_degrees(pose.ph + op.turn_deg);
      break;
    case OpKind::Curvature: {
      if (op.walk_length < 0 || !std::isfinite(op.magnitude)) throw Error(ErrorKind::InvalidInput, "bad curvature");
      Arc arc{pose.p, pose.ph, op.magnitude, op.walk_length};
      check_curve(grid, arc);
      out.v = pose.v + unit_vector_deg(pose.vh) * op.walk_length;
      out.p = arc.point_at(op.walk_length);
      out.ph = wrap_degrees(arc.heading_at(op.walk_length));
      break;
    }
    case OpKind::Reset:
      out.ph = wrap_degrees(pose.ph + op.magnitude);
      break;
  }
  return out;
}

LocoState apply_operation(const DualWorld& world, const LocoState& st, const RWOperation& op) {
  const auto& orient = world.orientations;
  DualPose pose{world.vgraph.node(st.v).position, orient.degrees(st.vh), world.grid.center(st.p), orient.degrees(st.ph)};
  DualPose next = apply_operation(pose, op, world.grid);
  LocoState out = st;
  out.vh = orient.snap(next.vh);
  out.ph = orient.snap(next.ph);
  if (op.is_walk()) {
    auto cell = world.grid.cell_of(next.p);
    if (!cell) throw Error(ErrorKind::OutOfWorld, "physical walk leaves the grid");
    out.p = *cell;
    double advance = op.virtual_advance();
    if (advance > 1e-12) {
      Point from = world.vgraph.node(st.v).position;
      std::optional<NodeId> best;
      double best_dev = std::numeric_limits<double>::infinity();
      for (const auto& e : world.vgraph.neighbors(st.v)) {
        if (std::abs(e.length - advance) > 1e-6 * (1.0 + advance)) continue;
        double bearing = bearing_deg(from, world.vgraph.node(e.to).position);
        if (orient.snap(bearing) != st.vh) continue;
        double dev = std::abs(wrap_signed_degrees(bearing - orient.degrees(st.vh)));
        if (dev < best_dev) best_dev = dev, best = e.to;
      }
      if (!best) throw Error(ErrorKind::OutOfWorld, "virtual walk does not end on a neighbouring node");
      out.v = *best;
    }
  }
  return out;
}

LocoState apply_sequence(const DualWorld& world, LocoState st, const OperationSequence& ops) {
  for (const auto& op : ops) st = apply_operation(world, st, op);
  return st;
}

}  // namespace dualnav
