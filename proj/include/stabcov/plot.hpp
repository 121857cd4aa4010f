#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stabcov/covering.hpp"
#include "stabcov/lattice.hpp"

namespace stabcov {

struct PlotOptions {
  // Curve i whose (beta_i, omega_i) plane is drawn; 0 means "the only curve".
  int slice_curve = 0;
  // Fixes the remaining coordinates; the default basepoint when empty.
  std::optional<ComplexDivisor> base;
  std::optional<PLPath> path;
  std::vector<CrossingEvent> crossings;
};

// Static SVG of a 2-plane slice. Walls are drawn as labelled lines between
// chamber bands, with the forbidden points marked; a path is optional.
// UnsupportedSlice when no plane is named for N >= 2 or the plane lies
// inside a wall.
std::string render_svg(const RootLattice& l, const PlotOptions& opts);

}  // namespace stabcov
