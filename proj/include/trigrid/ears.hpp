#pragma once

#include "trigrid/grid.hpp"
#include "trigrid/matching.hpp"
#include "trigrid/placement.hpp"

#include <optional>
#include <string>
#include <vector>

namespace trigrid {

enum class CoreKind { none, pentagon, diamond_cycle };

std::string core_kind_name(CoreKind k);
std::optional<CoreKind> core_kind_from_name(const std::string& s);

// Odd proper ear decomposition. G_1 is the base cycle and
// G_{i+1} = G_i + ears[i-1]. Each ear is a vertex path whose two (distinct)
// end vertices lie in the earlier subgraph and whose interior is new.
//
// With kind == pentagon, the base is a 5-cycle and ears[0], ears[1] are its
// two inner edges. With kind == diamond_cycle, ears[0] has length 3 with end
// vertices adjacent on the base and ears[1] is the diagonal of the diamond
// formed by ears[0] and that base edge.
struct EarDecomposition {
    std::vector<VertexId> base;
    std::vector<std::vector<VertexId>> ears;
    CoreKind kind = CoreKind::none;

    // Number of subgraphs k (the base plus one per ear).
    int levels() const { return static_cast<int>(ears.size()) + 1; }
    // Edge list of G_level, 1 <= level <= levels().
    std::vector<Edge> level_edges(int level) const;
};

// Throws InvariantError describing the first violated condition.
void validate_decomposition(const Graph& g, const EarDecomposition& d);

// Conditions (a) and (b): the base is alternating for the placement with the
// exposed vertex on it, and every ear is alternating with its end vertices
// not covered by its own pieces.
bool is_aligned_with(const Placement& p, const EarDecomposition& d);

// Grows `partial` (a decomposition of a central subgraph H) to the whole
// graph. `m` must be a nearly perfect matching whose restriction to G - V(H)
// is perfect. Every intermediate subgraph stays central.
EarDecomposition extend_from_central(const Graph& g, const Matching& m, const EarDecomposition& partial);

// Decomposition starting from an odd m-alternating cycle through the exposed
// vertex. Requires g 2-connected and factor-critical.
EarDecomposition ear_decomposition(const Graph& g, const Matching& m);

struct AdmissibleResult {
    EarDecomposition decomposition;
    Matching witness;
    std::string how;  // which search produced the core
};

// Direct search for a central pentagon, then for a central odd cycle with an
// attached diamond; the core is then extended to the whole graph.
std::optional<AdmissibleResult> find_admissible(const Graph& g);

// For i = k-1 down to 1, expose an end vertex of ear P_i inside G_{i+1}.
void align_with_ears(Walker& w, const EarDecomposition& d);

} // namespace trigrid
