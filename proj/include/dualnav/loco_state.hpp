#pragma once

#include <compare>
#include <functional>
#include <memory>
#include <string>

#include "dualnav/ids.hpp"
#include "dualnav/orientation.hpp"
#include "dualnav/physical_grid.hpp"
#include "dualnav/virtual_world.hpp"

namespace dualnav {

struct LocoState {
  NodeId v;
  HeadingId vh;
  CellId p;
  HeadingId ph;
  auto operator<=>(const LocoState&) const = default;
};

struct LocoStateHash {
  std::size_t operator()(const LocoState& s) const noexcept {
    std::uint64_t a = (std::uint64_t(s.v.value) << 32) ^ s.p.value;
    std::uint64_t b = (std::uint64_t(s.vh.value) << 16) ^ s.ph.value;
    a ^= b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2);
    return std::hash<std::uint64_t>{}(a);
  }
};

// Both worlds plus the shared heading lattice. Immutable once built.
struct DualWorld {
  VirtualGraph vgraph;
  PhysicalGrid grid;
  OrientationSet orientations{8};
};

using DualWorldPtr = std::shared_ptr<const DualWorld>;

// Throws Error{UnknownNode} / Error{OutOfWorld} / Error{Collision} on invalid components.
void validate_state(const DualWorld& world, const LocoState& st);
std::string describe(const DualWorld& world, const LocoState& st);

}  // namespace dualnav

template <>
struct std::hash<dualnav::LocoState> : dualnav::LocoStateHash {};
