#pragma once

#include "trigrid/grid.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace trigrid {

// Cyclic vertex order covering every vertex once. Canonical form starts at
// the smallest id and runs anti-clockwise (lattice graphs) or towards the
// smaller neighbour (abstract graphs).
struct HamiltonCycle {
    std::vector<VertexId> order;

    bool contains(VertexId a, VertexId b) const;
    // Vertices strictly after `from` up to and including `to`, walking in the
    // direction that does not pass through `avoid`, prefixed with `from`.
    std::vector<VertexId> path(VertexId from, VertexId to, VertexId avoid) const;
};

constexpr std::size_t kDefaultHamiltonBudget = 50'000'000;

// Throws InvariantError unless h is a Hamilton cycle of g.
void validate_hamilton(const Graph& g, const HamiltonCycle& h);
HamiltonCycle canonical_cycle(const Graph& g, std::vector<VertexId> order);

// Depth-first search. Rejects the Star of David up front; throws
// PreconditionError when no cycle exists and BudgetExceeded past `budget`
// search nodes.
HamiltonCycle find_hamilton(const Graph& g, std::size_t budget = kDefaultHamiltonBudget);

// Triangle faces split by the cycle. Side 1 holds the triangles on the outer
// face's side, side 2 those enclosed by the cycle. Dual edges join triangles
// sharing an inner edge that is not on the cycle.
struct DualForests {
    std::vector<Triangle> triangles;
    std::vector<int> side;
    std::vector<std::pair<int, int>> side1;
    std::vector<std::pair<int, int>> side2;
    std::vector<Edge> cut_edges;

    // Triangle index sets of the connected components on one side.
    std::vector<std::vector<int>> components(int which) const;
};

DualForests dual_forests(const Graph& g, const HamiltonCycle& h);

enum class DiamondCase { i, ii };

// Triangles (a, b, c) and (a, c, d) sharing the edge (a, c). After
// select_parity, p1 runs along the cycle from d to a avoiding b (even
// length) and p2 from b to c avoiding a (odd length).
struct ParityDiamond {
    VertexId a = -1, b = -1, c = -1, d = -1;
    DiamondCase which = DiamondCase::i;
    HamiltonCycle cycle;
    bool modified = false;      // cycle differs from the input
    bool anticlockwise = true;  // labels a, b, c, d run anti-clockwise
    std::string source;         // component, global or exchange
    std::vector<VertexId> p1;
    std::vector<VertexId> p2;
};

// Condition (i) or (ii) for the labeled diamond, if either holds.
std::optional<DiamondCase> diamond_condition(const Graph& g, const HamiltonCycle& h, VertexId a, VertexId b,
                                             VertexId c, VertexId d);

// Cycles obtained by exchanging (a,f), (a,g), (b,c) for (a,b), (a,c), (f,g),
// where f, g are the cycle neighbours of a and (b, c) is a cycle edge between
// two other neighbours of a. Each result is canonical and validated.
std::vector<HamiltonCycle> exchange_cycles(const Graph& g, const HamiltonCycle& h, VertexId a);

ParityDiamond find_local_structure(const Graph& g, const HamiltonCycle& h);

// Relabels so that p1 is even and p2 is odd; asserts that one labeling works.
ParityDiamond select_parity(const Graph& g, ParityDiamond pd);

} // namespace trigrid
