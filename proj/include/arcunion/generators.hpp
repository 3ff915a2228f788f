#pragma once

#include <cstdint>
#include <vector>

#include "arcunion/disc_union.hpp"
#include "arcunion/geom.hpp"

// Insertion-stream generators shared by the CLI, tests and benchmarks.

namespace arcunion::gen {

// n centers uniform in [0, box]^2.
std::vector<Point> uniform_stream(int n, double box, std::uint64_t seed);

// Quadratic worst case: n/2 discs on a circle of radius slightly above 2
// around the origin, one disc at the origin, then the remaining discs
// climbing in small vertical steps so each insertion restructures the
// boundary of every upper ring disc.
std::vector<Point> figure_one_stream(int n);

// Canonical-frame arc sets of every populated quadrant of every active
// cell (snapshot copies; at least min_arcs arcs per returned set).
std::vector<std::vector<UnitArc>> quadrant_configs(const DiscUnion& u,
                                                   int min_arcs);

}  // namespace arcunion::gen
