#pragma once

#include <cstdint>

#include "dualnav/world_io.hpp"

namespace dualnav {

struct PhysicalRoom {
  double width = 3.0, height = 3.0;  // interior size in metres
  double cell_size = 0.5;
  int orientations = 8;
};

struct MazeOptions {
  double cell = 2.0;    // corridor width in metres
  double wall = 0.1;    // wall thickness
  PhysicalRoom room;
};

// Perfect maze (random spanning tree over the cells) with one node per cell centre. Corridor edges join
// centres of cells with an open side between them.
WorldFile generate_maze(int width, int height, std::uint64_t seed, const MazeOptions& options = {});

struct CityOptions {
  double block = 10.0;       // street grid pitch
  double lot_fraction = 0.85;  // building footprint side as a fraction of the pitch
  double cutoff = 0.0;       // visibility cutoff, 0 = unbounded
  PhysicalRoom room{4.0, 4.0, 0.5, 8};
};

// Rectangular buildings on a street grid, with exactly (1 - open_ratio) of the bounds covered.
// `nodes` POIs are placed at random free points. Throws Error{InvalidRatio} outside (0, 1) or when the
// lots cannot hold the requested area.
WorldFile generate_synthetic_city(int nodes, double open_ratio, std::uint64_t seed, const CityOptions& options = {});

// Fraction of the bounds not covered by obstacles (obstacles assumed disjoint).
double open_area_ratio(const VirtualWorld& world);

}  // namespace dualnav
