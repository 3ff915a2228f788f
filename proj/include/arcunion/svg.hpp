#pragma once

#include <string>

#include "arcunion/disc_union.hpp"

namespace arcunion::svg {

struct RenderOptions {
  bool cells = true;    // translucent squares for active cells
  bool curves = false;  // per-cell Minkowski curve overlay
  double scale = 60.0;  // pixels per unit
  double margin = 1.5;  // world-space margin around the boundary
};

// Boundary arcs as paths, active cells as rectangles, optional offset-curve
// overlay. An empty union renders an empty canvas.
std::string render_union(const DiscUnion& u, const RenderOptions& opt = {});

}  // namespace arcunion::svg
