#pragma once

#include <span>
#include <string>

#include "dualnav/rw_path.hpp"
#include "dualnav/virtual_world.hpp"

namespace dualnav {

// Virtual world on the left, physical grid on the right, each path drawn in both with one glyph per
// non-identity operation at the hop's end (R reset, T translation gain, O rotation gain, C curvature).
std::string export_paths_svg(const VirtualWorld& polygons, const DualWorld& world, std::span<const RWPath> paths);

}  // namespace dualnav
