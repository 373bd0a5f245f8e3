#pragma once

// Static SVG rendering: tilings (one polygon per lozenge, three fill classes)
// and the frozen boundary curve over the limit polygon outline.

#include <string>

#include "lozenge/oracle.hpp"
#include "lozenge/polygon.hpp"

namespace lozenge {

std::string render_tiling(const PolygonSpec& spec, const ParticleArray& arr);

// Polyline through M frozen-boundary samples ordered by the real parameter
// (closed through w = +-infinity); M = 0 draws the outline only.
std::string render_frozen_boundary(const LimitPolygon& lp, int samples);

}  // namespace lozenge
