#include "trigrid/hc_planner.hpp"

#include "trigrid/error.hpp"
#include "trigrid/log.hpp"
#include "trigrid/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

namespace trigrid {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

// Representative of t modulo m with the smallest absolute value.
int signed_mod(int t, int m) {
    int r = mod(t, m);
    return r > m / 2 ? r - m : r;
}

int position(const std::vector<VertexId>& cycle, VertexId v) {
    auto it = std::find(cycle.begin(), cycle.end(), v);
    if (it == cycle.end()) throw InvariantError("vertex is not on the cycle");
    return static_cast<int>(it - cycle.begin());
}

Placement transposed(const Graph& g, const Placement& p, int x, int y) {
    auto pieces = p.pieces();
    std::swap(pieces[x], pieces[y]);
    return Placement::from_pieces(g, pieces);
}

void check_pair(const Graph& g, const Placement& p, const Placement& q) {
    Placement::from_pieces(g, p.pieces());
    Placement::from_pieces(g, q.pieces());
    if (p.n() != q.n()) throw PreconditionError("placements have different piece counts");
}

// Rotation cycles and window of the swap gadget.
struct SwapFrame {
    const ParityDiamond* pd;
    std::vector<VertexId> hc;
    int pieces;
    int window;
    std::vector<VertexId> c1;  // a, P1 backwards to d
    std::vector<VertexId> c2;  // a, b, c, d, P1 forwards to the vertex before a
    std::optional<SubGraph> pentagon;

    SwapFrame(const Graph& g, const ParityDiamond& d) : pd(&d), hc(slot_cycle(d)), window(swap_window(d)) {
        pieces = static_cast<int>(hc.size()) / 2;
        const auto& p1 = d.p1;
        c1.assign(p1.rbegin(), p1.rend());
        c2 = {d.a, d.b, d.c};
        c2.insert(c2.end(), p1.begin(), p1.end() - 1);
        if (p1.size() == 3) {
            const VertexId v = p1[1];
            pentagon = SubGraph::make(g, {Edge::make(d.a, d.b), Edge::make(d.b, d.c), Edge::make(d.c, d.d),
                                          Edge::make(d.d, v), Edge::make(v, d.a), Edge::make(d.a, d.c),
                                          Edge::make(d.a, d.d)});
        }
    }
};

// Exchange the pieces on the window slot and on (a, b); c exposed before
// and after.
void swap_core(Walker& w, const SwapFrame& f) {
    const Graph& g = w.graph();
    const ParityDiamond& d = *f.pd;
    const auto& p1 = d.p1;
    const Placement before = w.state();
    if (before.exposed() != d.c) throw InvariantError("swap needs c exposed");
    const int x = before.owner(d.a);
    const int l = before.owner(p1[p1.size() - 2]);
    if (x < 0 || before.piece(x) != Edge::make(d.a, d.b)) throw InvariantError("swap needs a piece on (a, b)");
    const Placement want = transposed(g, before, x, l);

    if (f.pentagon) {
        const SubGraph& sub = *f.pentagon;
        auto local = [&](const Placement& p) {
            return Placement::from_pieces(sub.graph, {Edge::make(sub.local[p.piece(x).u], sub.local[p.piece(x).v]),
                                                      Edge::make(sub.local[p.piece(l).u], sub.local[p.piece(l).v])});
        };
        auto path = shortest_path(sub.graph, local(before), local(want));
        if (!path) throw InvariantError("pentagon exchange is unreachable");
        const int labels[2] = {x, l};
        for (const auto& m : *path) w.slide({labels[m.label], sub.global[m.kept], sub.global[m.dest]});
    } else {
        w.slide_keeping(d.b);
        rotate_to_cover(w, f.c1, l, Edge::make(d.d, p1[1]), d.a);
        rotate_to_cover(w, f.c2, x, Edge::make(p1[p1.size() - 3], p1[p1.size() - 2]), d.c);
    }
    if (!(w.state() == want)) throw InvariantError("swap is not a transposition");
}

// Whole-cycle shift by `slots` with c kept exposed: slot s then holds the
// label previously on slot s + slots.
void shift(Walker& w, const SwapFrame& f, int slots) {
    rotate_steps(w, f.hc, slots * static_cast<int>(f.hc.size()));
}

long inversions(const std::vector<int>& a) {
    long count = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) count += a[i] > a[j];
    }
    return count;
}

} // namespace

EarDecomposition hamilton_decomposition(const Graph& g, const HamiltonCycle& h) {
    EarDecomposition d;
    d.base = h.order;
    for (const Edge& e : g.edges()) {
        if (!h.contains(e.u, e.v)) d.ears.push_back({e.u, e.v});
    }
    validate_decomposition(g, d);
    return d;
}

void align_with_hamilton(Walker& w, const HamiltonCycle& h) {
    if (is_aligned(w.state(), h.order)) return;
    align_with_ears(w, hamilton_decomposition(w.graph(), h));
    if (!is_aligned(w.state(), h.order)) throw InvariantError("placement is not aligned with the Hamilton cycle");
}

SlideSequence align_with_hamilton(const Graph& g, const Placement& p, const HamiltonCycle& h) {
    if (!is_two_connected(g)) throw PreconditionError("graph is not 2-connected");
    validate_hamilton(g, h);
    Walker w(g, p);
    align_with_hamilton(w, h);
    return w.sequence();
}

std::vector<VertexId> slot_cycle(const ParityDiamond& pd) {
    const auto& order = pd.cycle.order;
    const int len = static_cast<int>(order.size());
    if (pd.p2.size() < 2) throw PreconditionError("diamond has no P2");
    const int pc = position(order, pd.c);
    const VertexId into_c = pd.p2[pd.p2.size() - 2];
    const int dir = order[mod(pc + 1, len)] == into_c ? -1 : 1;
    std::vector<VertexId> out;
    for (int i = 0; i < len; ++i) out.push_back(order[mod(pc + dir * i, len)]);
    const int pd_pos = position(out, pd.d), pa = position(out, pd.a);
    if (pd_pos % 2 == 0 || pa % 2 == 0 || out[pa + 1] != pd.b) {
        throw InvariantError("diamond does not match the slot convention");
    }
    return out;
}

int swap_window(const ParityDiamond& pd) {
    if (pd.p1.size() < 3) throw PreconditionError("P1 is too short");
    return (position(slot_cycle(pd), pd.a) - 1) / 2 - 1;
}

SlideSequence swap_adjacent(const Graph& g, const Placement& p, int j, const ParityDiamond& pd) {
    SwapFrame f(g, pd);
    if (p.exposed() != pd.c) throw PreconditionError("c must be exposed");
    CyclePhase ph = cycle_phase(p, f.hc);
    const int n = f.pieces;
    if (n < 2) throw PreconditionError("need two pieces to swap");
    if (j < 0 || j >= n) throw PreconditionError("slot out of range");
    Walker w(g, p);
    const int t = signed_mod(j - f.window, n);
    shift(w, f, t);
    swap_core(w, f);
    shift(w, f, -t);
    const Placement want = transposed(g, p, ph.labels[j], ph.labels[(j + 1) % n]);
    if (!(w.state() == want)) throw InvariantError("adjacent swap is not a transposition");
    return w.sequence();
}

PlanReport plan_hamilton(const Graph& g, const Placement& p, const Placement& q, const HamiltonPlanOptions& opt) {
    check_pair(g, p, q);
    if (is_star_of_david(g)) throw PreconditionError("the Star of David is excluded");
    if (!is_locally_connected(g)) throw PreconditionError("graph is not locally connected");
    HamiltonCycle h = find_hamilton(g, opt.search_budget);

    PlanReport r;
    r.strategy = "hamilton";
    Walker w(g, p);
    auto over_budget = [&] {
        if (opt.max_slides > 0 && static_cast<std::int64_t>(w.moves().size()) > opt.max_slides) {
            throw BudgetExceeded("slide budget exceeded");
        }
    };

    if (p == q) {
        // nothing to do
    } else if (g.order() < 5) {
        align_with_hamilton(w, h);
        Walker tw(g, q);
        align_with_hamilton(tw, h);
        rotate_to_state(w, h.order, tw.state());
        w.play(invert(q, tw.moves()));
    } else {
        ParityDiamond pd = find_local_structure(g, h);
        SwapFrame f(g, pd);
        r.trace.push_back("diamond " + std::string(pd.which == DiamondCase::i ? "i" : "ii") + " from " + pd.source +
                          ", |P1| " + std::to_string(pd.p1.size() - 1) + ", |P2| " + std::to_string(pd.p2.size() - 1));

        align_with_hamilton(w, pd.cycle);
        rotate_to_expose(w, f.hc, pd.c);
        r.trace.push_back("align start: " + std::to_string(w.moves().size()) + " slides");
        Walker tw(g, q);
        align_with_hamilton(tw, pd.cycle);
        rotate_to_expose(tw, f.hc, pd.c);
        r.trace.push_back("align target: " + std::to_string(tw.moves().size()) + " slides");
        const Placement qa = tw.state();

        const int n = f.pieces;
        std::vector<int> slots = cycle_phase(w.state(), f.hc).labels;
        const std::vector<int> goal = cycle_phase(qa, f.hc).labels;

        // Seam o (slot of the first element) and target origin minimizing
        // the inversion count of the linearized order.
        int best_o = 0;
        std::vector<int> rank(n);
        long best_inv = std::numeric_limits<long>::max();
        std::vector<int> best_rank(n);
        for (int origin = 0; origin < n; ++origin) {
            std::vector<int> rk(n);
            for (int i = 0; i < n; ++i) rk[goal[(origin + i) % n]] = i;
            for (int o = 0; o < n; ++o) {
                std::vector<int> seq(n);
                for (int i = 0; i < n; ++i) seq[i] = rk[slots[(o + i) % n]];
                long inv = inversions(seq);
                if (inv < best_inv) best_inv = inv, best_o = o, best_rank = rk;
            }
        }
        rank = best_rank;

        const int before_sort = static_cast<int>(w.moves().size());
        int o = best_o, swaps = 0;
        for (bool changed = n >= 2; changed;) {
            changed = false;
            for (int i = 0; i + 1 < n; ++i) {
                if (rank[slots[(o + i) % n]] < rank[slots[(o + i + 1) % n]]) continue;
                const int t = signed_mod(o + i - f.window, n);
                shift(w, f, t);
                o = mod(o - t, n);
                swap_core(w, f);
                slots = cycle_phase(w.state(), f.hc).labels;
                ++swaps;
                changed = true;
                over_budget();
            }
        }
        r.trace.push_back("bubble sort: " + std::to_string(best_inv) + " inversions, " + std::to_string(swaps) +
                          " swaps, " + std::to_string(static_cast<int>(w.moves().size()) - before_sort) + " slides");
        if (swaps != best_inv) throw InvariantError("swap count differs from the inversion count");
        rotate_to_state(w, f.hc, qa);
        w.play(invert(q, tw.moves()));
    }
    if (!(w.state() == q)) throw InvariantError("Hamilton planner missed the target");
    r.sequence = w.sequence();
    r.budget_n2n_ok = r.slides() <= ear_bound(p.n());
    TRIGRID_LOG(1, "hamilton plan: " << r.slides() << " slides");
    return r;
}

} // namespace trigrid
