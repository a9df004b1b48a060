#pragma once

#include "trigrid/grid.hpp"

#include <vector>

namespace trigrid {

// Induced 9-cycle around the removed triangle {(0,0), (1,0), (0,1)}:
// factor-critical, yet the cyclic order of the pieces can never change.
inline std::vector<LatticePoint> ring9_points() {
    return {{-1, 0}, {-1, 1}, {-1, 2}, {0, -1}, {0, 2}, {1, -1}, {1, 1}, {2, -1}, {2, 0}};
}

inline Graph ring9_graph() { return Graph::from_points(ring9_points()); }

// The 9-cycle with a diamond glued onto the edge (-1,0)-(-1,1): a lattice
// realization of the odd-cycle-plus-diamond family with 11 vertices and no
// vertex of degree 6, which is reconfigurable.
inline std::vector<LatticePoint> lattice_diamond_cycle_points() {
    auto pts = ring9_points();
    pts.push_back({-2, 0});
    pts.push_back({-2, 1});
    return pts;
}

inline Graph lattice_diamond_cycle_graph() { return Graph::from_points(lattice_diamond_cycle_points()); }

} // namespace trigrid
