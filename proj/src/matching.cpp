#include "trigrid/matching.hpp"

#include "trigrid/error.hpp"

#include <algorithm>
#include <queue>

namespace trigrid {

int Matching::size() const {
    int c = 0;
    for (VertexId v = 0; v < static_cast<int>(mate.size()); ++v) {
        if (mate[v] > v) ++c;
    }
    return c;
}

std::vector<Edge> Matching::edges() const {
    std::vector<Edge> out;
    for (VertexId v = 0; v < static_cast<int>(mate.size()); ++v) {
        if (mate[v] > v) out.push_back({v, mate[v]});
    }
    return out;
}

std::vector<VertexId> Matching::exposed() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < static_cast<int>(mate.size()); ++v) {
        if (mate[v] < 0) out.push_back(v);
    }
    return out;
}

bool Matching::valid_in(const Graph& g) const {
    if (static_cast<int>(mate.size()) != g.order()) return false;
    for (VertexId v = 0; v < g.order(); ++v) {
        VertexId w = mate[v];
        if (w < 0) continue;
        if (w >= g.order() || mate[w] != v || w == v || !g.adjacent(v, w)) return false;
    }
    return true;
}

namespace {

// Edmonds' blossom algorithm, one BFS per exposed root.
class Blossom {
public:
    Blossom(const Graph& g, const std::vector<char>& active)
        : g_(g), n_(g.order()), active_(active), match_(n_, -1), parent_(n_), base_(n_), used_(n_), blossom_(n_) {}

    std::vector<VertexId> run() {
        // Greedy start in id order keeps results reproducible.
        for (VertexId v = 0; v < n_; ++v) {
            if (!on(v) || match_[v] >= 0) continue;
            for (VertexId w : g_.neighbors(v)) {
                if (on(w) && match_[w] < 0) {
                    match_[v] = w, match_[w] = v;
                    break;
                }
            }
        }
        for (VertexId v = 0; v < n_; ++v) {
            if (!on(v) || match_[v] >= 0) continue;
            VertexId end = find_path(v);
            while (end >= 0) {
                VertexId pv = parent_[end], ppv = match_[pv];
                match_[end] = pv, match_[pv] = end;
                end = ppv;
            }
        }
        return match_;
    }

private:
    bool on(VertexId v) const { return active_.empty() || active_[v]; }

    VertexId lca(VertexId a, VertexId b) {
        std::vector<char> seen(n_, 0);
        for (;;) {
            a = base_[a];
            seen[a] = 1;
            if (match_[a] < 0) break;
            a = parent_[match_[a]];
        }
        for (;;) {
            b = base_[b];
            if (seen[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(VertexId v, VertexId b, VertexId child) {
        while (base_[v] != b) {
            blossom_[base_[v]] = blossom_[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    VertexId find_path(VertexId root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (VertexId i = 0; i < n_; ++i) base_[i] = i;
        used_[root] = 1;
        std::queue<VertexId> q;
        q.push(root);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (VertexId to : g_.neighbors(v)) {
                if (!on(to) || base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] >= 0 && parent_[match_[to]] >= 0)) {
                    VertexId cur = lca(v, to);
                    std::fill(blossom_.begin(), blossom_.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (VertexId i = 0; i < n_; ++i) {
                        if (blossom_[base_[i]]) {
                            base_[i] = cur;
                            if (!used_[i]) {
                                used_[i] = 1;
                                q.push(i);
                            }
                        }
                    }
                } else if (parent_[to] < 0) {
                    parent_[to] = v;
                    if (match_[to] < 0) return to;
                    used_[match_[to]] = 1;
                    q.push(match_[to]);
                }
            }
        }
        return -1;
    }

    const Graph& g_;
    int n_;
    const std::vector<char>& active_;
    std::vector<VertexId> match_, parent_, base_;
    std::vector<char> used_, blossom_;
};

} // namespace

Matching maximum_matching(const Graph& g, const std::vector<char>& active) {
    Matching m;
    m.mate = Blossom(g, active).run();
    return m;
}

std::optional<Matching> perfect_matching(const Graph& g, const std::vector<VertexId>& removed) {
    std::vector<char> active(g.order(), 1);
    int remaining = g.order();
    for (VertexId v : removed) {
        if (active[v]) --remaining;
        active[v] = 0;
    }
    if (remaining % 2) return std::nullopt;
    if (remaining == 0) return Matching(g.order());
    Matching m = maximum_matching(g, active);
    if (2 * m.size() != remaining) return std::nullopt;
    return m;
}

std::optional<Matching> near_perfect_matching(const Graph& g, VertexId expose) {
    if (expose < 0 || expose >= g.order()) throw PreconditionError("vertex id out of range");
    if (g.order() % 2 == 0) return std::nullopt;
    return perfect_matching(g, {expose});
}

bool is_factor_critical(const Graph& g) {
    if (g.order() % 2 == 0) return false;
    for (VertexId v = 0; v < g.order(); ++v) {
        if (!near_perfect_matching(g, v)) return false;
    }
    return true;
}

bool is_central(const Graph& g, const std::vector<VertexId>& sub) { return perfect_matching(g, sub).has_value(); }

std::vector<VertexId> alternating_path_to(const Graph& g, const Matching& m, VertexId to) {
    auto ex = m.exposed();
    if (ex.size() != 1) throw PreconditionError("matching must expose exactly one vertex");
    VertexId from = ex.front();
    if (from == to) return {from};
    auto other = near_perfect_matching(g, to);
    if (!other) throw PreconditionError("no nearly perfect matching exposes vertex " + std::to_string(to + 1));
    // Walk the component of M xor M' that starts at `from`.
    std::vector<VertexId> path{from};
    VertexId cur = from;
    bool use_other = true;
    while (cur != to) {
        VertexId next = use_other ? other->mate[cur] : m.mate[cur];
        if (next < 0) throw InvariantError("symmetric difference path broke off");
        path.push_back(next);
        cur = next;
        use_other = !use_other;
    }
    return path;
}

void flip_path(Matching& m, const std::vector<VertexId>& path) {
    for (std::size_t i = 0; i + 1 < path.size(); i += 2) {
        VertexId a = path[i], b = path[i + 1];
        if (m.mate[b] >= 0) m.mate[m.mate[b]] = -1;
        m.mate[a] = b, m.mate[b] = a;
    }
    if (path.size() > 1) m.mate[path.back()] = -1;
}

namespace {

bool alternating_dfs(const Graph& g, const Matching& m, VertexId cur, VertexId to, bool need_matched, int depth,
                     std::vector<char>& on_path, std::vector<VertexId>& path) {
    if (cur == to && !need_matched && path.size() > 1) return true;
    if (depth == 0) return false;
    if (need_matched) {
        VertexId w = m.mate[cur];
        if (w < 0 || on_path[w]) return false;
        on_path[w] = 1;
        path.push_back(w);
        if (alternating_dfs(g, m, w, to, false, depth - 1, on_path, path)) return true;
        path.pop_back();
        on_path[w] = 0;
        return false;
    }
    for (VertexId w : g.neighbors(cur)) {
        if (on_path[w] || m.mate[cur] == w) continue;
        // A non-matching edge into `to` is useless: the path must end on a matching edge.
        if (w == to) continue;
        on_path[w] = 1;
        path.push_back(w);
        if (alternating_dfs(g, m, w, to, true, depth - 1, on_path, path)) return true;
        path.pop_back();
        on_path[w] = 0;
    }
    return false;
}

} // namespace

std::optional<std::vector<VertexId>> shortest_alternating_path(const Graph& g, const Matching& m, VertexId from,
                                                               VertexId to, const std::vector<char>& blocked) {
    if (from == to) return std::vector<VertexId>{from};
    for (int depth = 2; depth < g.order(); depth += 2) {
        std::vector<char> on_path = blocked.empty() ? std::vector<char>(g.order(), 0) : blocked;
        on_path[from] = 1;
        on_path[to] = 0;
        std::vector<VertexId> path{from};
        if (alternating_dfs(g, m, from, to, false, depth, on_path, path)) return path;
    }
    return std::nullopt;
}

std::vector<VertexId> odd_alternating_cycle_through(const Graph& g, const Matching& m, Edge e, bool minimize) {
    auto ex = m.exposed();
    if (ex.size() != 1) throw PreconditionError("matching must expose exactly one vertex");
    VertexId x = ex.front();
    if (!e.has(x) || !g.adjacent(e.u, e.v)) throw PreconditionError("edge must be incident to the exposed vertex");
    VertexId u = e.other(x);
    if (minimize) {
        auto path = shortest_alternating_path(g, m, x, u);
        if (!path) throw PreconditionError("no odd alternating cycle through the edge");
        return *path;
    }
    if (!near_perfect_matching(g, u)) throw PreconditionError("no odd alternating cycle through the edge");
    return alternating_path_to(g, m, u);
}

} // namespace trigrid
