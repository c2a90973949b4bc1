#pragma once

#include <optional>
#include <string>

#include "symclass/path.hpp"

namespace symclass {

/// Rendering options for the stability diagram of the base plane.
struct DiagramOptions {
    double x_min = -4.0, x_max = 4.0;  // tau range
    double y_min = -4.0, y_max = 4.0;  // delta range
    int k_max = 0;                     // resonance pencil, 0 = off
    int width = 760, height = 640;
};

/// Deterministic SVG of the stratified base plane: the parabola and the two
/// walls, region labels with their sheet counts a/b, optionally the
/// resonance pencil and an overlaid family polyline with event markers.
std::string render_diagram(const DiagramOptions& opts,
                           const PathReport* overlay = nullptr);

}  // namespace symclass
