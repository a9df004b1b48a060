#pragma once

#include "trigrid/placement.hpp"

#include <optional>
#include <string>

namespace trigrid {

// Deterministic SVG: edges, then pieces as thick coloured edges, then
// vertices with the exposed one highlighted, then vertex ids. Lattice
// vertices sit at (x + y/2, y*sqrt(3)/2); abstract graphs on a circle.
std::string render_svg(const Graph& g, const std::optional<Placement>& p = {}, const std::string& caption = {});

} // namespace trigrid
