#include "trigrid/ear_planner.hpp"

#include "trigrid/error.hpp"
#include "trigrid/log.hpp"
#include "trigrid/matching.hpp"
#include "trigrid/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>

namespace trigrid {

std::int64_t ear_bound(int n) {
    const std::int64_t cap = std::numeric_limits<std::int64_t>::max();
    std::int64_t r = 1;
    for (int i = 0; i < 2 * n; ++i) {
        if (r > cap / std::max(n, 1)) return cap;
        r *= n;
    }
    return r;
}

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

// Pieces covering a subgraph, renumbered 0..k-1 in label order.
struct LocalView {
    Placement local;
    std::vector<int> labels;  // local label -> global label
};

LocalView restrict_to(const SubGraph& sub, const Placement& p, const std::vector<int>& labels) {
    std::vector<Edge> pieces;
    for (int lab : labels) {
        Edge e = p.piece(lab);
        if (!sub.contains(e.u) || !sub.contains(e.v)) throw InvariantError("piece leaves the core");
        pieces.push_back(Edge::make(sub.local[e.u], sub.local[e.v]));
    }
    return {Placement::from_pieces(sub.graph, pieces), labels};
}

std::vector<int> labels_inside(const SubGraph& sub, const Placement& p) {
    std::vector<int> out;
    for (VertexId a : sub.global) {
        int lab = p.owner(a);
        if (lab >= 0 && std::find(out.begin(), out.end(), lab) == out.end()) out.push_back(lab);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Expose whichever of a, b is cheaper to reach inside `sub`.
void expose_nearer(Walker& w, const SubGraph& sub, VertexId a, VertexId b) {
    VertexId x = w.state().exposed();
    if (x == a || x == b) return;
    Walker ta(w.graph(), w.state());
    expose_within(ta, sub, a);
    Walker tb(w.graph(), w.state());
    expose_within(tb, sub, b);
    w.play(ta.moves().size() <= tb.moves().size() ? ta.moves() : tb.moves());
}

// Alternating path (vertex list, global ids) inside `sub` from the exposed
// vertex to `to`.
std::vector<VertexId> path_within(const Placement& p, const SubGraph& sub, VertexId to) {
    Matching local(sub.graph.order());
    for (VertexId a = 0; a < sub.graph.order(); ++a) {
        int label = p.owner(sub.global[a]);
        if (label < 0) continue;
        VertexId b = sub.local[p.piece(label).other(sub.global[a])];
        if (b < 0) throw InvariantError("piece leaves the subgraph");
        local.mate[a] = b;
    }
    auto path = alternating_path_to(sub.graph, local, sub.local[to]);
    for (auto& v : path) v = sub.global[v];
    return path;
}

// Base cycle, Hamilton cycle through the ear and the ear's vertices for a
// diamond core: base ends with a, b; the Hamilton cycle replaces the edge
// (a, b) with the path a, x, y, b.
struct DiamondFrame {
    std::vector<VertexId> c;
    std::vector<VertexId> cprime;
    VertexId a, b, x, y;
    std::vector<VertexId> diagonal;
};

DiamondFrame diamond_frame(const EarDecomposition& d) {
    if (d.ears.size() < 2 || d.ears[0].size() != 4 || d.ears[1].size() != 2) {
        throw PreconditionError("not a diamond core");
    }
    DiamondFrame f;
    f.a = d.ears[0][0];
    f.x = d.ears[0][1];
    f.y = d.ears[0][2];
    f.b = d.ears[0][3];
    f.diagonal = d.ears[1];
    std::vector<VertexId> base = d.base;
    const int len = static_cast<int>(base.size());
    int pa = static_cast<int>(std::find(base.begin(), base.end(), f.a) - base.begin());
    if (pa == len) throw PreconditionError("diamond is not attached to the base");
    if (base[mod(pa + 1, len)] != f.b) {
        std::reverse(base.begin(), base.end());
        pa = len - 1 - pa;
    }
    if (base[mod(pa + 1, len)] != f.b) throw PreconditionError("diamond ends are not adjacent on the base");
    for (int i = 0; i < len; ++i) f.c.push_back(base[mod(pa + 2 + i, len)]);
    f.cprime.assign(f.c.begin(), f.c.end() - 1);
    f.cprime.push_back(f.x);
    f.cprime.push_back(f.y);
    f.cprime.push_back(f.b);
    return f;
}

class DiamondSolver {
public:
    DiamondSolver(const Graph& g, const EarDecomposition& d) : g_(g), f_(diamond_frame(d)) {
        core_ = SubGraph::make(g, d.level_edges(3));
        std::vector<Edge> h2;
        for (std::size_t i = 0; i < f_.cprime.size(); ++i) {
            h2.push_back(Edge::make(f_.cprime[i], f_.cprime[(i + 1) % f_.cprime.size()]));
        }
        h2.push_back(Edge::make(f_.a, f_.b));
        h2_ = SubGraph::make(g, h2);
    }

    // Free the diagonal and the edge (a, b): the placement becomes aligned
    // with the Hamilton cycle through the ear.
    void align(Walker& w) const {
        expose_nearer(w, core_, f_.diagonal[0], f_.diagonal[1]);
        expose_nearer(w, h2_, f_.a, f_.b);
    }

    void solve(Walker& w, const Placement& target) const {
        if (w.state() == target) return;
        align(w);
        Walker tw(g_, target);
        align(tw);
        auto back = invert(target, tw.moves());
        const Placement& tq = tw.state();
        auto order = cycle_phase(tq, f_.cprime).labels;
        const int n = static_cast<int>(order.size());
        const Edge top = Edge::make(f_.x, f_.y);
        const Edge seam = Edge::make(f_.b, f_.c.front());
        std::optional<std::vector<SlideMove>> best;
        for (int r = 0; r < n; ++r) {
            Walker t(g_, w.state());
            for (int j = 1; j <= n; ++j) {
                rotate_to_cover(t, f_.cprime, order[mod(r - j, n)], top);
                if (j >= 2) rotate_to_cover(t, f_.c, order[mod(r - j + 1, n)], seam);
            }
            auto steps = steps_to_state(t.state(), tq, f_.cprime);
            if (!steps) throw InvariantError("diamond loop produced the wrong cyclic order");
            rotate_steps(t, f_.cprime, *steps);
            if (!best || t.moves().size() < best->size()) best = t.moves();
        }
        w.play(*best);
        w.play(back);
    }

private:
    const Graph& g_;
    DiamondFrame f_;
    SubGraph core_;
    SubGraph h2_;
};

class EarPlanner {
public:
    EarPlanner(const Graph& g, const EarDecomposition& d, Walker& w, const EarPlanOptions& opt)
        : g_(g), d_(d), w_(w), opt_(opt), visits_(d.levels() + 1, 0) {
        subs_.resize(d.levels() + 1);
        for (int i = 1; i <= d.levels(); ++i) subs_[i] = SubGraph::make(g, d.level_edges(i));
        if (d.kind == CoreKind::diamond_cycle && subs_[3].graph.order() > 5) diamond_.emplace(g, d);
    }

    void solve(int level, const Placement& target) {
        if (w_.state() == target) return;
        ++visits_[level];
        if (opt_.max_slides > 0 && static_cast<std::int64_t>(w_.moves().size()) > opt_.max_slides) {
            throw BudgetExceeded("slide budget exceeded");
        }
        if (level <= 3) {
            solve_core(target);
            return;
        }
        const auto& ear = d_.ears[level - 2];
        const SubGraph& sub = subs_[level];
        expose_nearer(w_, sub, ear.front(), ear.back());
        Walker tw(g_, target);
        expose_nearer(tw, sub, ear.front(), ear.back());
        auto back = invert(target, tw.moves());
        if (ear.size() == 2) {
            solve(level - 1, tw.state());
        } else {
            feed(level, tw.state());
        }
        w_.play(back);
        if (!(w_.state() == target)) throw InvariantError("level " + std::to_string(level) + " missed its target");
    }

    std::vector<std::string> trace() const {
        std::vector<std::string> out;
        for (int i = 1; i < static_cast<int>(visits_.size()); ++i) {
            if (!visits_[i]) continue;
            std::size_t len = i == 1 ? d_.base.size() : d_.ears[i - 2].size() - 1;
            out.push_back("level " + std::to_string(i) + " (" + (i == 1 ? "base " : "ear ") + std::to_string(len) +
                          "): " + std::to_string(visits_[i]) + " visits");
        }
        return out;
    }

private:
    void solve_core(const Placement& target) {
        if (diamond_) {
            diamond_->solve(w_, target);
            return;
        }
        const SubGraph& core = subs_[3];
        auto labels = labels_inside(core, w_.state());
        LocalView from = restrict_to(core, w_.state(), labels);
        LocalView to = restrict_to(core, target, labels);
        auto path = shortest_path(core.graph, from.local, to.local);
        if (!path) throw InvariantError("core placements are not connected");
        for (const auto& m : *path) w_.slide({labels[m.label], core.global[m.kept], core.global[m.dest]});
    }

    struct FeedPlan {
        std::vector<int> fed;
        std::vector<char> swap;
        int swaps = 0;
    };

    // Label-level simulation of the feed schedule: K free feeds then the
    // wanted labels in order. A fed label stays on the ear for the next
    // `ell` feeds, so any ell + 1 consecutive feeds must be distinct.
    static std::optional<FeedPlan> simulate(std::vector<int> slots, int m, int ell, const std::vector<int>& want,
                                            const std::vector<int>& universe, int free_feeds) {
        auto on_ear = [&](int lab) {
            auto it = std::find(slots.begin(), slots.end(), lab);
            return it != slots.end() && it - slots.begin() >= m;
        };
        std::map<int, int> last_fed;
        FeedPlan plan;
        for (int t = 0; t < free_feeds + ell; ++t) {
            int choice = -1;
            if (t >= free_feeds) {
                choice = want[t - free_feeds];
                if (on_ear(choice)) return std::nullopt;
            } else {
                auto allowed = [&](int lab) {
                    if (on_ear(lab)) return false;
                    for (int f = 0; f < ell; ++f) {
                        int when = free_feeds + f;
                        if (when > t && when <= t + ell && want[f] == lab) return false;
                    }
                    return true;
                };
                if (allowed(slots[m - 1])) {
                    choice = slots[m - 1];
                } else {
                    int oldest = std::numeric_limits<int>::max();
                    for (int lab : universe) {
                        if (!allowed(lab)) continue;
                        int when = last_fed.count(lab) ? last_fed[lab] : -1;
                        if (when < oldest) oldest = when, choice = lab;
                    }
                    if (choice < 0) return std::nullopt;
                }
            }
            bool sw = slots[m - 1] != choice;
            if (sw) {
                auto it = std::find(slots.begin(), slots.end(), choice);
                if (it != slots.end()) std::iter_swap(it, slots.begin() + (m - 1));
                else slots[m - 1] = choice;
                ++plan.swaps;
            }
            plan.fed.push_back(choice);
            plan.swap.push_back(sw);
            last_fed[choice] = t;
            std::rotate(slots.rbegin(), slots.rbegin() + 1, slots.rend());
        }
        return plan;
    }

    // Ear Q of length >= 3 aligned in both placements. Circulate pieces
    // around the cycle formed by Q and an alternating path in G_{level-1},
    // using recursive swaps in G_{level-1} to pick which label enters Q.
    void feed(int level, const Placement& target) {
        auto ear = d_.ears[level - 2];
        const SubGraph& lower = subs_[level - 1];
        VertexId v = ear.front();
        if (w_.state().exposed() == ear.back() && target.exposed() == ear.back()) {
            std::reverse(ear.begin(), ear.end());
            v = ear.front();
        }
        VertexId u = ear.back();
        expose_within(w_, lower, v);
        Walker tw(g_, target);
        expose_within(tw, lower, v);
        auto back = invert(target, tw.moves());
        const Placement& tq = tw.state();

        const int ell = static_cast<int>(ear.size() - 2) / 2;
        std::vector<int> want;
        for (int f = 0; f < ell; ++f) want.push_back(tq.owner(ear[2 * f + 1]));

        auto path = path_within(w_.state(), lower, u);
        const int m = static_cast<int>(path.size() - 1) / 2;
        std::vector<VertexId> cycle = path;
        for (int i = 2 * ell; i >= 1; --i) cycle.push_back(ear[i]);
        const int slots_total = m + ell;

        auto current_slots = [&] {
            std::vector<int> s;
            for (int i = 0; i < slots_total; ++i) s.push_back(w_.state().owner(cycle[2 * i + 1]));
            return s;
        };
        auto ear_labels = [&] {
            std::vector<int> s;
            for (int f = 0; f < ell; ++f) s.push_back(w_.state().owner(ear[2 * f + 1]));
            return s;
        };

        if (ear_labels() != want) {
            auto universe = labels_inside(subs_[level], w_.state());
            std::optional<FeedPlan> best;
            const int limit = 4 * slots_total + 4;
            for (int k = 0; k <= limit; ++k) {
                auto plan = simulate(current_slots(), m, ell, want, universe, k);
                if (plan && (!best || plan->swaps < best->swaps)) best = plan;
            }
            if (!best) throw InvariantError("no feed schedule found");
            TRIGRID_LOG(2, "level " << level << ": " << best->fed.size() << " feeds, " << best->swaps << " swaps");
            const VertexId entry = cycle[2 * m - 1];
            for (std::size_t t = 0; t < best->fed.size(); ++t) {
                int choice = best->fed[t];
                if (best->swap[t]) {
                    int mu = w_.state().owner(entry);
                    auto pieces = w_.state().pieces();
                    std::swap(pieces[choice], pieces[mu]);
                    solve(level - 1, Placement::from_pieces(g_, pieces));
                }
                if (w_.state().owner(entry) != choice) throw InvariantError("feed entry holds the wrong label");
                rotate_steps(w_, cycle, -(2 * slots_total + 1));
                if (w_.state().owner(cycle[2 * m + 1]) != choice) throw InvariantError("feed moved the wrong way");
            }
            if (ear_labels() != want) throw InvariantError("feeding left the ear out of order");
        }
        solve(level - 1, tq);
        w_.play(back);
    }

    const Graph& g_;
    const EarDecomposition& d_;
    Walker& w_;
    EarPlanOptions opt_;
    std::vector<SubGraph> subs_;
    std::vector<long long> visits_;
    std::optional<DiamondSolver> diamond_;
};

void check_pair(const Graph& g, const Placement& p, const Placement& q) {
    Placement::from_pieces(g, p.pieces());
    Placement::from_pieces(g, q.pieces());
    if (p.n() != q.n()) throw PreconditionError("placements have different piece counts");
}

} // namespace

PlanReport plan_ear(const Graph& g, const EarDecomposition& d, const Placement& p, const Placement& q,
                    const EarPlanOptions& opt) {
    check_pair(g, p, q);
    validate_decomposition(g, d);
    if (d.kind != CoreKind::pentagon && d.kind != CoreKind::diamond_cycle) {
        throw PreconditionError("decomposition has no reconfigurable core");
    }
    Walker w(g, p);
    EarPlanner planner(g, d, w, opt);
    planner.solve(d.levels(), q);
    if (!(w.state() == q)) throw InvariantError("ear planner missed the target");
    PlanReport r;
    r.strategy = "ear";
    r.sequence = w.sequence();
    r.bound = ear_bound(p.n());
    r.budget_n2n_ok = r.slides() <= ear_bound(p.n());
    r.trace = planner.trace();
    return r;
}

SlideSequence reconfigure_aligned(const Graph& g, const EarDecomposition& d, const Placement& p, const Placement& q,
                                  const EarPlanOptions& opt) {
    check_pair(g, p, q);
    validate_decomposition(g, d);
    if (d.kind != CoreKind::pentagon && d.kind != CoreKind::diamond_cycle) {
        throw PreconditionError("decomposition has no reconfigurable core");
    }
    if (!is_aligned_with(p, d) || !is_aligned_with(q, d)) throw PreconditionError("placement is not aligned");
    Walker w(g, p);
    EarPlanner planner(g, d, w, opt);
    planner.solve(d.levels(), q);
    return w.sequence();
}

SlideSequence phase2_step(const Graph& g, const EarDecomposition& d, int level, const Placement& p, const Placement& q,
                          std::vector<std::string>* trace, const EarPlanOptions& opt) {
    check_pair(g, p, q);
    validate_decomposition(g, d);
    if (d.kind != CoreKind::pentagon && d.kind != CoreKind::diamond_cycle) {
        throw PreconditionError("decomposition has no reconfigurable core");
    }
    if (level < 4 || level > d.levels()) throw PreconditionError("level must hold an ear above the core");
    if (!is_aligned_with(p, d) || !is_aligned_with(q, d)) throw PreconditionError("placement is not aligned");
    SubGraph sub = SubGraph::make(g, d.level_edges(level));
    for (int lab = 0; lab < p.n(); ++lab) {
        Edge e = p.piece(lab);
        bool inside = sub.contains(e.u) && sub.contains(e.v);
        if (!inside && !(q.piece(lab) == e)) throw PreconditionError("placements differ outside the level");
        Edge f = q.piece(lab);
        if (inside != (sub.contains(f.u) && sub.contains(f.v))) throw PreconditionError("placements differ outside the level");
    }
    Walker w(g, p);
    EarPlanner planner(g, d, w, opt);
    planner.solve(level, q);
    if (trace) *trace = planner.trace();
    return w.sequence();
}

PlanReport plan_ear(const Graph& g, const Placement& p, const Placement& q, const EarPlanOptions& opt) {
    if (!is_two_connected(g)) throw PreconditionError("graph is not 2-connected");
    if (!is_factor_critical(g)) throw PreconditionError("graph is not factor-critical");
    auto adm = find_admissible(g);
    if (!adm) throw PreconditionError("no central pentagon or diamond cycle found");
    auto r = plan_ear(g, adm->decomposition, p, q, opt);
    r.trace.insert(r.trace.begin(), "core: " + adm->how);
    return r;
}

PlanReport plan_pentagon(const Graph& g, const Placement& p, const Placement& q) {
    check_pair(g, p, q);
    bool apex = false;
    for (VertexId v = 0; v < g.order(); ++v) apex = apex || g.degree(v) == 4;
    if (g.order() != 5 || g.size() != 7 || !apex) throw PreconditionError("graph is not a pentagon fan");
    auto path = shortest_path(g, p, q);
    if (!path) throw InvariantError("pentagon placements are not connected");
    PlanReport r;
    r.strategy = "pentagon";
    r.sequence = {p, *path};
    r.bound = 8;
    r.budget_n2n_ok = r.slides() <= ear_bound(p.n());
    return r;
}

PlanReport plan_diamond_cycle(const Graph& g, const EarDecomposition& d, const Placement& p, const Placement& q) {
    check_pair(g, p, q);
    validate_decomposition(g, d);
    if (d.levels() != 3 || d.kind != CoreKind::diamond_cycle) throw PreconditionError("not a bare diamond cycle");
    const std::int64_t n = p.n();
    Walker w(g, p);
    if (d.base.size() == 3) {
        auto path = shortest_path(g, p, q);
        if (!path) throw InvariantError("core placements are not connected");
        w.play(*path);
    } else {
        DiamondSolver(g, d).solve(w, q);
    }
    if (!(w.state() == q)) throw InvariantError("diamond loop missed the target");
    PlanReport r;
    r.strategy = "diamond_cycle";
    r.sequence = w.sequence();
    r.bound = n * n * n + n * n;
    r.budget_n2n_ok = r.slides() <= ear_bound(p.n());
    return r;
}

} // namespace trigrid
