#pragma once

#include <string>
#include <vector>

#include "eigprog/vqc.hpp"

namespace eigprog {

// Minimal static SVG: ellipse outlines (sampled polygons), one polyline per
// trajectory, a circle at each start and a cross at each end. Only defined
// for two-dimensional instances.
std::string render_ellipsoid_svg(
    const EllipsoidInstance& inst,
    const std::vector<std::vector<std::vector<double>>>& trajectories);

}  // namespace eigprog
