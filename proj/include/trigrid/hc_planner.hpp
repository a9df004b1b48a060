#pragma once

#include "trigrid/ear_planner.hpp"
#include "trigrid/hamilton.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace trigrid {

struct HamiltonPlanOptions {
    std::size_t search_budget = kDefaultHamiltonBudget;
    // Abort with BudgetExceeded past this many slides (0 disables).
    std::int64_t max_slides = 50'000'000;
};

// Decomposition with h as base and every other edge as a one-edge ear.
EarDecomposition hamilton_decomposition(const Graph& g, const HamiltonCycle& h);

// Moves every piece onto h, alternating along it, with the exposed vertex on h.
void align_with_hamilton(Walker& w, const HamiltonCycle& h);
SlideSequence align_with_hamilton(const Graph& g, const Placement& p, const HamiltonCycle& h);

// Cycle of pd.cycle starting at c and running c, R, d, P1, a, b, P2. Slot s
// is the edge at positions 2s + 1, 2s + 2; with c exposed the pieces sit on
// the slots.
std::vector<VertexId> slot_cycle(const ParityDiamond& pd);
// Slot index of the last piece on P1; the next slot is (a, b).
int swap_window(const ParityDiamond& pd);

// p aligned with pd.cycle and c exposed. Exchanges the pieces on slots j and
// j + 1 (mod n) and restores every other piece and the exposed vertex.
SlideSequence swap_adjacent(const Graph& g, const Placement& p, int j, const ParityDiamond& pd);

// Locally connected graph other than the Star of David. Aligns both ends with
// a Hamilton cycle, bubble-sorts the cyclic label order with adjacent swaps at
// the diamond and undoes the target's alignment.
PlanReport plan_hamilton(const Graph& g, const Placement& p, const Placement& q,
                         const HamiltonPlanOptions& opt = {});

} // namespace trigrid
