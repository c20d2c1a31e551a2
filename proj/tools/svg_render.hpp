#pragma once

#include <string>

namespace flopkit::tools {

// Renders a wall-arrangement JSON document (as produced by
// flopkit_arrangement_json) to a standalone SVG.  One-parameter arrangements
// become an axis with one tick polyline per wall, stroke width classed by the
// wall label; two-parameter arrangements become one polyline per wall line
// clipped to the window.  `scale` is in pixels per unit.  Throws
// std::runtime_error when the document does not look like an arrangement.
std::string render_arrangement_svg(const std::string& arrangement_json, double scale);

}  // namespace flopkit::tools
