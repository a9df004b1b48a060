#pragma once

#include "trigrid/ears.hpp"
#include "trigrid/placement.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace trigrid {

struct PlanReport {
    std::string strategy;
    SlideSequence sequence;
    int slides() const { return static_cast<int>(sequence.moves.size()); }
    // n^(2n) saturated at INT64_MAX for the ear strategy, n^3 + n^2 for a
    // bare diamond cycle, 8 for the pentagon.
    // 0 when the strategy has no closed-form bound.
    std::int64_t bound = 0;
    bool budget_n2n_ok = true;  // slides <= n^(2n)
    std::vector<std::string> trace;  // one line per level visit summary
};

struct EarPlanOptions {
    // Abort with BudgetExceeded past this many slides (0 disables).
    std::int64_t max_slides = 50'000'000;
};

// Saturating n^(2n).
std::int64_t ear_bound(int n);

// Reconfigure p into q on a 2-connected factor-critical graph with an
// admissible core. Throws PreconditionError when no core exists.
PlanReport plan_ear(const Graph& g, const Placement& p, const Placement& q, const EarPlanOptions& opt = {});
// Same with a fixed decomposition whose kind is pentagon or diamond_cycle.
PlanReport plan_ear(const Graph& g, const EarDecomposition& d, const Placement& p, const Placement& q,
                    const EarPlanOptions& opt = {});

// Both placements aligned with d; same recursion as plan_ear without the
// outer alignment.
SlideSequence reconfigure_aligned(const Graph& g, const EarDecomposition& d, const Placement& p, const Placement& q,
                                  const EarPlanOptions& opt = {});

// One visit of ear level `level` (4 or more): feed the ear's target labels,
// then recurse into the smaller levels. p and q are aligned with d and agree
// on every piece outside G_level. `trace` receives the visit counts.
SlideSequence phase2_step(const Graph& g, const EarDecomposition& d, int level, const Placement& p, const Placement& q,
                          std::vector<std::string>* trace = nullptr, const EarPlanOptions& opt = {});

// Pentagon fan: exact shortest sequence (at most 8 slides).
PlanReport plan_pentagon(const Graph& g, const Placement& p, const Placement& q);

// Graph equal to the three-level diamond core `d` (base cycle with 2n - 1
// vertices, a length-3 ear and a diagonal). Builds the target cyclic order
// one label at a time by alternating rotations of the base cycle and of the
// Hamilton cycle through the ear.
PlanReport plan_diamond_cycle(const Graph& g, const EarDecomposition& d, const Placement& p, const Placement& q);

} // namespace trigrid
