#include "trigrid/ears.hpp"

#include "trigrid/error.hpp"
#include "trigrid/log.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace trigrid {

std::string core_kind_name(CoreKind k) {
    switch (k) {
    case CoreKind::pentagon: return "pentagon";
    case CoreKind::diamond_cycle: return "diamond_cycle";
    default: return "none";
    }
}

std::optional<CoreKind> core_kind_from_name(const std::string& s) {
    if (s == "pentagon") return CoreKind::pentagon;
    if (s == "diamond_cycle") return CoreKind::diamond_cycle;
    if (s == "none") return CoreKind::none;
    return std::nullopt;
}

std::vector<Edge> EarDecomposition::level_edges(int level) const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < base.size(); ++i) out.push_back(Edge::make(base[i], base[(i + 1) % base.size()]));
    for (int i = 0; i + 1 < level && i < static_cast<int>(ears.size()); ++i) {
        for (std::size_t j = 0; j + 1 < ears[i].size(); ++j) out.push_back(Edge::make(ears[i][j], ears[i][j + 1]));
    }
    return out;
}

void validate_decomposition(const Graph& g, const EarDecomposition& d) {
    auto fail = [](const std::string& msg) { throw InvariantError("ear decomposition: " + msg); };
    std::vector<char> in(g.order(), 0);
    std::vector<char> used(g.size(), 0);
    auto use_edge = [&](VertexId a, VertexId b) {
        if (a < 0 || b < 0 || a >= g.order() || b >= g.order()) fail("vertex out of range");
        int e = g.edge_index(a, b);
        if (e < 0) fail("missing edge " + std::to_string(a + 1) + "-" + std::to_string(b + 1));
        if (used[e]) fail("edge used twice " + std::to_string(a + 1) + "-" + std::to_string(b + 1));
        used[e] = 1;
    };
    if (d.base.size() < 3 || d.base.size() % 2 == 0) fail("base is not an odd cycle");
    for (VertexId v : d.base) {
        if (v < 0 || v >= g.order() || in[v]) fail("base repeats a vertex");
        in[v] = 1;
    }
    for (std::size_t i = 0; i < d.base.size(); ++i) use_edge(d.base[i], d.base[(i + 1) % d.base.size()]);
    for (std::size_t i = 0; i < d.ears.size(); ++i) {
        const auto& ear = d.ears[i];
        const std::string tag = "ear " + std::to_string(i + 1);
        if (ear.size() < 2 || ear.size() % 2 == 1) fail(tag + " is not odd");
        if (ear.front() == ear.back()) fail(tag + " is closed");
        if (!in[ear.front()] || !in[ear.back()]) fail(tag + " has an end vertex outside the earlier subgraph");
        for (std::size_t j = 1; j + 1 < ear.size(); ++j) {
            if (ear[j] < 0 || ear[j] >= g.order() || in[ear[j]]) fail(tag + " reuses a vertex");
            in[ear[j]] = 1;
        }
        for (std::size_t j = 0; j + 1 < ear.size(); ++j) use_edge(ear[j], ear[j + 1]);
    }
    if (std::find(in.begin(), in.end(), 0) != in.end()) fail("a vertex is not covered");
    if (std::find(used.begin(), used.end(), 0) != used.end()) fail("an edge is not covered");
}

bool is_aligned_with(const Placement& p, const EarDecomposition& d) {
    if (!is_aligned(p, d.base)) return false;
    for (const auto& ear : d.ears) {
        const std::size_t len = ear.size() - 1;
        if (len == 1) {
            int a = p.owner(ear[0]);
            if (a >= 0 && p.piece(a) == Edge::make(ear[0], ear[1])) return false;
            continue;
        }
        for (std::size_t r = 1; r + 1 < len + 1; r += 2) {
            int a = p.owner(ear[r]);
            if (a < 0 || p.piece(a) != Edge::make(ear[r], ear[r + 1])) return false;
        }
    }
    return true;
}

namespace {

// Depth-limited search for an m-alternating ear leaving H through (a, b).
// `pairs` bounds the number of interior matched pairs.
bool grow_ear(const Graph& g, const Matching& m, const std::vector<char>& in_h, std::vector<char>& on_path,
              std::vector<VertexId>& path, int pairs) {
    VertexId c = path.back();
    for (VertexId w : g.neighbors(c)) {
        if (m.contains(c, w) || on_path[w]) continue;
        if (in_h[w]) {
            if (w == path.front()) continue;
            path.push_back(w);
            return true;
        }
        if (pairs == 0) continue;
        VertexId z = m.mate[w];
        if (z < 0 || in_h[z] || on_path[z]) continue;
        path.push_back(w);
        path.push_back(z);
        on_path[w] = on_path[z] = 1;
        if (grow_ear(g, m, in_h, on_path, path, pairs - 1)) return true;
        on_path[w] = on_path[z] = 0;
        path.resize(path.size() - 2);
    }
    return false;
}

std::optional<std::vector<VertexId>> ear_through(const Graph& g, const Matching& m, const std::vector<char>& in_h,
                                                 VertexId a, VertexId b, int pairs) {
    if (m.contains(a, b)) return std::nullopt;
    VertexId c = m.mate[b];
    if (c < 0 || in_h[c]) return std::nullopt;
    std::vector<char> on_path(g.order(), 0);
    std::vector<VertexId> path{a, b, c};
    on_path[a] = on_path[b] = on_path[c] = 1;
    if (grow_ear(g, m, in_h, on_path, path, pairs)) return path;
    return std::nullopt;
}

} // namespace

EarDecomposition extend_from_central(const Graph& g, const Matching& m, const EarDecomposition& partial) {
    EarDecomposition d = partial;
    std::vector<char> in_h(g.order(), 0);
    std::vector<char> used(g.size(), 0);
    int used_count = 0;
    auto take = [&](const std::vector<VertexId>& ear) {
        for (std::size_t j = 0; j + 1 < ear.size(); ++j) {
            used[g.edge_index(ear[j], ear[j + 1])] = 1;
            ++used_count;
        }
        for (VertexId v : ear) in_h[v] = 1;
    };
    std::vector<VertexId> closed = d.base;
    closed.push_back(d.base.front());
    take(closed);
    for (const auto& ear : d.ears) take(ear);
    for (VertexId v = 0; v < g.order(); ++v) {
        if (!in_h[v] && (m.mate[v] < 0 || in_h[m.mate[v]])) throw PreconditionError("matching is not perfect outside the core");
    }

    while (used_count < g.size()) {
        // Chords first, then the shortest ear over all edges leaving H.
        std::optional<std::vector<VertexId>> found;
        for (int e = 0; e < g.size() && !found; ++e) {
            const Edge& ed = g.edges()[e];
            if (!used[e] && in_h[ed.u] && in_h[ed.v]) found = std::vector<VertexId>{ed.u, ed.v};
        }
        const int outside = static_cast<int>(std::count(in_h.begin(), in_h.end(), 0));
        for (int pairs = 0; pairs <= outside / 2 && !found; ++pairs) {
            for (int e = 0; e < g.size() && !found; ++e) {
                const Edge& ed = g.edges()[e];
                if (used[e] || in_h[ed.u] == in_h[ed.v]) continue;
                VertexId a = in_h[ed.u] ? ed.u : ed.v;
                found = ear_through(g, m, in_h, a, ed.other(a), pairs);
            }
        }
        if (!found) throw InvariantError("no alternating ear extends the central subgraph");
        take(*found);
        d.ears.push_back(std::move(*found));
    }
    return d;
}

EarDecomposition ear_decomposition(const Graph& g, const Matching& m) {
    auto exposed = m.exposed();
    if (exposed.size() != 1) throw PreconditionError("matching is not nearly perfect");
    VertexId x = exposed.front();
    if (g.neighbors(x).empty()) throw PreconditionError("exposed vertex is isolated");
    VertexId u = g.neighbors(x).front();
    EarDecomposition d;
    d.base = odd_alternating_cycle_through(g, m, Edge::make(x, u), g.order() <= 19);
    return extend_from_central(g, m, d);
}

namespace {

std::optional<AdmissibleResult> try_extend(const Graph& g, const Matching& m, const EarDecomposition& core,
                                           const std::string& how) {
    try {
        AdmissibleResult r{extend_from_central(g, m, core), m, how};
        validate_decomposition(g, r.decomposition);
        return r;
    } catch (const InvariantError&) {
        return std::nullopt;
    }
}

std::optional<AdmissibleResult> find_pentagon(const Graph& g) {
    for (VertexId o = 0; o < g.order(); ++o) {
        const auto& nb = g.neighbors(o);
        for (VertexId w2 : nb) {
            for (VertexId w3 : nb) {
                if (w2 == w3 || !g.adjacent(w2, w3)) continue;
                for (VertexId w1 : nb) {
                    if (w1 == w2 || w1 == w3 || !g.adjacent(w1, w2) || g.adjacent(w1, w3)) continue;
                    for (VertexId w4 : nb) {
                        if (w4 == w1 || w4 == w2 || w4 == w3 || !g.adjacent(w3, w4)) continue;
                        if (g.adjacent(w2, w4) || g.adjacent(w1, w4) || w1 > w4) continue;
                        auto rest = perfect_matching(g, {o, w1, w2, w3, w4});
                        if (!rest) continue;
                        Matching m = *rest;
                        m.add(w1, w2);
                        m.add(w3, w4);
                        EarDecomposition core;
                        core.base = {w1, w2, w3, w4, o};
                        core.ears = {{o, w2}, {o, w3}};
                        core.kind = CoreKind::pentagon;
                        std::string how = "pentagon at " + std::to_string(o + 1);
                        if (auto r = try_extend(g, m, core, how)) return r;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

// Odd cycle through the edge (a, b) avoiding x and y, read off the symmetric
// difference of matchings of G - {x, y} exposing a and b.
std::vector<VertexId> cycle_from_pair(const Matching& ma, const Matching& mb, VertexId a, VertexId b) {
    std::vector<VertexId> path{a};
    VertexId cur = a;
    bool use_b = true;
    while (cur != b) {
        cur = use_b ? mb.mate[cur] : ma.mate[cur];
        if (cur < 0) throw InvariantError("broken symmetric difference");
        path.push_back(cur);
        use_b = !use_b;
    }
    return path;
}

std::optional<AdmissibleResult> find_diamond(const Graph& g) {
    struct Candidate {
        std::vector<VertexId> cycle;
        Matching m;
        std::vector<VertexId> ear;
        std::vector<VertexId> diagonal;
    };
    std::vector<Candidate> candidates;
    for (const Edge& base : g.edges()) {
        for (int flip = 0; flip < 2; ++flip) {
            VertexId a = flip ? base.v : base.u;
            VertexId b = base.other(a);
            for (VertexId x : g.neighbors(a)) {
                if (x == b) continue;
                for (VertexId y : g.neighbors(b)) {
                    if (y == a || y == x || !g.adjacent(x, y)) continue;
                    std::vector<VertexId> diagonal;
                    if (g.adjacent(a, y)) diagonal = {a, y};
                    else if (g.adjacent(x, b)) diagonal = {x, b};
                    else continue;
                    auto ma = perfect_matching(g, {x, y, a});
                    if (!ma) continue;
                    auto mb = perfect_matching(g, {x, y, b});
                    if (!mb) continue;
                    Candidate c;
                    c.cycle = cycle_from_pair(*ma, *mb, a, b);
                    c.m = *mb;
                    c.m.add(x, y);
                    c.ear = {a, x, y, b};
                    c.diagonal = diagonal;
                    candidates.push_back(std::move(c));
                }
            }
        }
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& l, const Candidate& r) { return l.cycle.size() < r.cycle.size(); });
    for (const auto& c : candidates) {
        EarDecomposition core;
        core.base = c.cycle;
        core.ears = {c.ear, c.diagonal};
        core.kind = CoreKind::diamond_cycle;
        std::string how = "diamond on " + std::to_string(c.ear.front() + 1) + "-" + std::to_string(c.ear.back() + 1) +
                          " with a " + std::to_string(c.cycle.size()) + "-cycle";
        if (auto r = try_extend(g, c.m, core, how)) return r;
    }
    return std::nullopt;
}

} // namespace

std::optional<AdmissibleResult> find_admissible(const Graph& g) {
    auto r = find_pentagon(g);
    if (!r) r = find_diamond(g);
    if (r) {
        TRIGRID_LOG(1, "admissible core: " << r->how << ", " << r->decomposition.levels() << " levels");
    } else {
        TRIGRID_LOG(1, "no admissible core");
    }
    return r;
}

void align_with_ears(Walker& w, const EarDecomposition& d) {
    for (int i = d.levels() - 1; i >= 1; --i) {
        const auto& ear = d.ears[i - 1];
        SubGraph sub = SubGraph::make(w.graph(), d.level_edges(i + 1));
        VertexId ends[2] = {ear.front(), ear.back()};
        if (w.state().exposed() == ends[0] || w.state().exposed() == ends[1]) continue;
        std::size_t best = std::numeric_limits<std::size_t>::max();
        std::vector<SlideMove> best_moves;
        for (VertexId v : ends) {
            Walker trial(w.graph(), w.state());
            expose_within(trial, sub, v);
            if (trial.moves().size() < best) {
                best = trial.moves().size();
                best_moves = trial.moves();
            }
        }
        w.play(best_moves);
    }
}

} // namespace trigrid
