#pragma once

#include <vector>

#include "dualnav/loco_state.hpp"

namespace dualnav {

enum class OpKind { Translation, Rotation, Curvature, Reset };
const char* to_string(OpKind kind);

// Translation: user walks `walk_length` physically, virtual advance is walk_length * gain.
// Curvature: user walks an arc of `walk_length` with curvature `magnitude` (rad/m); virtual advance is walk_length.
// Rotation: user turns `turn_deg` physically, virtual turn is turn_deg * gain.
// Reset: physical-only turn of `magnitude` degrees.
struct RWOperation {
  OpKind kind = OpKind::Translation;
  double magnitude = 1.0;
  double walk_length = 0.0;
  double turn_deg = 0.0;

  static RWOperation translation(double walk, double gain) { return {OpKind::Translation, gain, walk, 0.0}; }
  static RWOperation curvature(double walk, double curvature) { return {OpKind::Curvature, curvature, walk, 0.0}; }
  static RWOperation rotation(double turn_deg, double gain) { return {OpKind::Rotation, gain, 0.0, turn_deg}; }
  static RWOperation reset(double angle_deg) { return {OpKind::Reset, angle_deg, 0.0, 0.0}; }

  bool is_identity() const;
  bool is_walk() const { return kind == OpKind::Translation || kind == OpKind::Curvature; }
  double virtual_advance() const;
};

using OperationSequence = std::vector<RWOperation>;

// Continuous pose in both worlds; headings in degrees.
struct DualPose {
  Point v;
  double vh = 0.0;
  Point p;
  double ph = 0.0;
};

// Pure transition on continuous poses. Walking ops are collision-checked against the grid.
// Throws Error{Collision} or Error{OutOfWorld}.
DualPose apply_operation(const DualPose& pose, const RWOperation& op, const PhysicalGrid& grid);

// Loco-state transition: continuous step from the cell centre, then snap headings to the lattice and the
// physical location to its cell. A walk must end on the v-neighbour whose snapped bearing equals the heading.
LocoState apply_operation(const DualWorld& world, const LocoState& st, const RWOperation& op);
LocoState apply_sequence(const DualWorld& world, LocoState st, const OperationSequence& ops);

}  // namespace dualnav
