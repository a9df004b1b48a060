#include "trigrid/hamilton.hpp"

#include "trigrid/error.hpp"
#include "trigrid/log.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace trigrid {

namespace {

int position(const std::vector<VertexId>& order, VertexId v) {
    auto it = std::find(order.begin(), order.end(), v);
    return it == order.end() ? -1 : static_cast<int>(it - order.begin());
}

double signed_area(const Graph& g, const std::vector<VertexId>& order) {
    double area = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        auto p = cartesian(g.points()[order[i]]);
        auto q = cartesian(g.points()[order[(i + 1) % order.size()]]);
        area += p[0] * q[1] - q[0] * p[1];
    }
    return area / 2;
}

} // namespace

bool HamiltonCycle::contains(VertexId a, VertexId b) const {
    const int len = static_cast<int>(order.size());
    int pa = position(order, a);
    if (pa < 0) return false;
    return order[(pa + 1) % len] == b || order[(pa + len - 1) % len] == b;
}

std::vector<VertexId> HamiltonCycle::path(VertexId from, VertexId to, VertexId avoid) const {
    const int len = static_cast<int>(order.size());
    int start = position(order, from);
    if (start < 0 || position(order, to) < 0) throw PreconditionError("vertex not on the cycle");
    for (int dir : {1, -1}) {
        std::vector<VertexId> out{from};
        bool blocked = false;
        for (int i = 1; i < len && out.back() != to; ++i) {
            VertexId v = order[((start + dir * i) % len + len) % len];
            if (v == avoid) {
                blocked = true;
                break;
            }
            out.push_back(v);
        }
        if (!blocked && out.back() == to) return out;
    }
    throw PreconditionError("no cycle path avoids the given vertex");
}

void validate_hamilton(const Graph& g, const HamiltonCycle& h) {
    if (static_cast<int>(h.order.size()) != g.order()) throw InvariantError("cycle does not cover every vertex");
    std::vector<char> seen(g.order(), 0);
    for (VertexId v : h.order) {
        if (v < 0 || v >= g.order() || seen[v]) throw InvariantError("cycle repeats a vertex");
        seen[v] = 1;
    }
    for (std::size_t i = 0; i < h.order.size(); ++i) {
        if (!g.adjacent(h.order[i], h.order[(i + 1) % h.order.size()])) throw InvariantError("cycle uses a non-edge");
    }
}

HamiltonCycle canonical_cycle(const Graph& g, std::vector<VertexId> order) {
    auto it = std::min_element(order.begin(), order.end());
    std::rotate(order.begin(), it, order.end());
    bool flip = false;
    if (order.size() > 2) {
        if (g.is_lattice()) flip = signed_area(g, order) < 0;
        else flip = order[1] > order.back();
    }
    if (flip) std::reverse(order.begin() + 1, order.end());
    return {order};
}

namespace {

class HamiltonSearch {
public:
    HamiltonSearch(const Graph& g, std::size_t budget) : g_(g), budget_(budget), visited_(g.order(), 0) {}

    std::optional<std::vector<VertexId>> run() {
        const int n = g_.order();
        if (n < 3) return std::nullopt;
        VertexId start = 0;
        for (VertexId v = 1; v < n; ++v) {
            if (g_.degree(v) < g_.degree(start)) start = v;
        }
        start_ = start;
        path_.push_back(start);
        visited_[start] = 1;
        if (dfs()) return path_;
        return std::nullopt;
    }

private:
    int free_degree(VertexId x, VertexId end) const {
        int cnt = 0;
        for (VertexId y : g_.neighbors(x)) cnt += !visited_[y] || y == start_ || y == end;
        return cnt;
    }

    // Every unvisited vertex keeps two usable neighbours and the unvisited
    // vertices stay reachable from the path end.
    bool feasible() const {
        const VertexId end = path_.back();
        std::vector<char> reach(g_.order(), 0);
        std::vector<VertexId> stack{end};
        reach[end] = 1;
        int count = 0;
        bool start_reached = path_.size() == 1;
        while (!stack.empty()) {
            VertexId x = stack.back();
            stack.pop_back();
            for (VertexId y : g_.neighbors(x)) {
                if (y == start_ && x != end) start_reached = true;
                if (visited_[y] || reach[y]) continue;
                reach[y] = 1;
                ++count;
                stack.push_back(y);
            }
        }
        const int unvisited = g_.order() - static_cast<int>(path_.size());
        if (count != unvisited) return false;
        if (unvisited > 0 && !start_reached) return false;
        for (VertexId x = 0; x < g_.order(); ++x) {
            if (!visited_[x] && free_degree(x, end) < 2) return false;
        }
        return true;
    }

    bool dfs() {
        if (++nodes_ > budget_) throw BudgetExceeded("Hamilton search budget exceeded");
        const VertexId u = path_.back();
        if (static_cast<int>(path_.size()) == g_.order()) return g_.adjacent(u, start_);
        std::vector<std::pair<int, VertexId>> next;
        for (VertexId w : g_.neighbors(u)) {
            if (!visited_[w]) next.push_back({free_degree(w, u), w});
        }
        std::sort(next.begin(), next.end());
        for (auto [deg, w] : next) {
            visited_[w] = 1;
            path_.push_back(w);
            if (feasible() && dfs()) return true;
            path_.pop_back();
            visited_[w] = 0;
        }
        return false;
    }

    const Graph& g_;
    std::size_t budget_;
    std::size_t nodes_ = 0;
    VertexId start_ = 0;
    std::vector<char> visited_;
    std::vector<VertexId> path_;
};

} // namespace

HamiltonCycle find_hamilton(const Graph& g, std::size_t budget) {
    if (is_star_of_david(g)) throw PreconditionError("the Star of David has no Hamilton cycle");
    auto found = HamiltonSearch(g, budget).run();
    if (!found) throw PreconditionError("graph has no Hamilton cycle");
    HamiltonCycle h = canonical_cycle(g, *found);
    validate_hamilton(g, h);
    return h;
}

std::vector<std::vector<int>> DualForests::components(int which) const {
    const auto& edges = which == 1 ? side1 : side2;
    std::vector<std::vector<int>> adj(triangles.size());
    for (auto [s, t] : edges) {
        adj[s].push_back(t);
        adj[t].push_back(s);
    }
    std::vector<char> seen(triangles.size(), 0);
    std::vector<std::vector<int>> out;
    for (int t = 0; t < static_cast<int>(triangles.size()); ++t) {
        if (side[t] != which || seen[t]) continue;
        std::vector<int> comp{t};
        seen[t] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            for (int s : adj[comp[i]]) {
                if (!seen[s]) seen[s] = 1, comp.push_back(s);
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(comp);
    }
    return out;
}

DualForests dual_forests(const Graph& g, const HamiltonCycle& h) {
    if (!g.is_lattice()) throw PreconditionError("dual forests need lattice coordinates");
    validate_hamilton(g, h);
    DualForests df;
    df.triangles = g.triangles();
    std::vector<std::array<double, 2>> poly;
    for (VertexId v : h.order) poly.push_back(cartesian(g.points()[v]));
    for (const auto& t : df.triangles) {
        double cx = 0, cy = 0;
        for (VertexId v : t) {
            auto p = cartesian(g.points()[v]);
            cx += p[0] / 3;
            cy += p[1] / 3;
        }
        // Even-odd ray cast to the right; centroids never lie on lattice edges.
        bool inside = false;
        for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
            auto [xi, yi] = poly[i];
            auto [xj, yj] = poly[j];
            if ((yi > cy) != (yj > cy) && cx < (xj - xi) * (cy - yi) / (yj - yi) + xi) inside = !inside;
        }
        df.side.push_back(inside ? 2 : 1);
    }
    std::map<Edge, std::vector<int>> by_edge;
    for (int t = 0; t < static_cast<int>(df.triangles.size()); ++t) {
        const auto& tri = df.triangles[t];
        for (int i = 0; i < 3; ++i) by_edge[Edge::make(tri[i], tri[(i + 1) % 3])].push_back(t);
    }
    for (const auto& [e, ts] : by_edge) {
        if (ts.size() != 2) continue;
        if (h.contains(e.u, e.v)) {
            df.cut_edges.push_back(e);
        } else if (df.side[ts[0]] != df.side[ts[1]]) {
            throw InvariantError("an edge between the two sides is off the cycle");
        } else {
            (df.side[ts[0]] == 1 ? df.side1 : df.side2).push_back({ts[0], ts[1]});
        }
    }
    return df;
}

std::optional<DiamondCase> diamond_condition(const Graph& g, const HamiltonCycle& h, VertexId a, VertexId b,
                                             VertexId c, VertexId d) {
    if (!g.adjacent(a, b) || !g.adjacent(b, c) || !g.adjacent(a, c) || !g.adjacent(c, d) || !g.adjacent(a, d)) {
        return std::nullopt;
    }
    if (b == d || g.adjacent(b, d)) return std::nullopt;
    if (h.contains(a, b) && h.contains(c, d) && !h.contains(a, c)) return DiamondCase::i;
    if (h.contains(a, b) && h.contains(b, c)) return DiamondCase::ii;
    return std::nullopt;
}

ParityDiamond select_parity(const Graph& g, ParityDiamond pd) {
    const HamiltonCycle& h = pd.cycle;
    auto even = [](const std::vector<VertexId>& p) { return (p.size() - 1) % 2 == 0; };
    if (pd.which == DiamondCase::i) {
        auto q1 = h.path(pd.d, pd.a, pd.b);
        if (!even(q1)) {
            std::tie(pd.a, pd.b, pd.c, pd.d) = std::make_tuple(pd.c, pd.d, pd.a, pd.b);
            q1 = h.path(pd.d, pd.a, pd.b);
        }
        pd.p1 = q1;
        pd.p2 = h.path(pd.b, pd.c, pd.a);
    } else {
        auto q1 = h.path(pd.d, pd.a, pd.b);
        if (!even(q1)) {
            std::swap(pd.a, pd.c);
            pd.anticlockwise = !pd.anticlockwise;
            q1 = h.path(pd.d, pd.a, pd.b);
        }
        pd.p1 = q1;
        pd.p2 = {pd.b, pd.c};
    }
    if (!even(pd.p1) || pd.p1.size() < 3 || even(pd.p2) || !h.contains(pd.a, pd.b) || h.contains(pd.a, pd.c) ||
        !diamond_condition(g, h, pd.a, pd.b, pd.c, pd.d)) {
        throw InvariantError("no parity labeling of the diamond");
    }
    return pd;
}

namespace {

struct DiamondShape {
    VertexId a, b, c, d;  // shared edge (a, c)
};

std::vector<DiamondShape> all_diamonds(const Graph& g) {
    std::map<Edge, std::vector<VertexId>> tips;
    for (const auto& t : g.triangles()) {
        for (int i = 0; i < 3; ++i) tips[Edge::make(t[i], t[(i + 1) % 3])].push_back(t[(i + 2) % 3]);
    }
    std::vector<DiamondShape> out;
    for (const auto& [e, ts] : tips) {
        for (std::size_t i = 0; i < ts.size(); ++i) {
            for (std::size_t j = i + 1; j < ts.size(); ++j) {
                if (!g.adjacent(ts[i], ts[j])) out.push_back({e.u, ts[i], e.v, ts[j]});
            }
        }
    }
    return out;
}

bool is_anticlockwise(const Graph& g, VertexId a, VertexId b, VertexId c, VertexId d) {
    return !g.is_lattice() || signed_area(g, {a, b, c, d}) > 0;
}

// Best qualifying labeling among the diamonds accepted by `keep`: shortest
// p2, then smallest ids.
template <class Keep>
std::optional<ParityDiamond> best_diamond(const Graph& g, const HamiltonCycle& h, Keep keep) {
    std::optional<ParityDiamond> best;
    for (const auto& s : all_diamonds(g)) {
        if (!keep(s)) continue;
        const VertexId labels[4][4] = {
            {s.a, s.b, s.c, s.d}, {s.a, s.d, s.c, s.b}, {s.c, s.b, s.a, s.d}, {s.c, s.d, s.a, s.b}};
        for (const auto& l : labels) {
            auto which = diamond_condition(g, h, l[0], l[1], l[2], l[3]);
            if (!which) continue;
            ParityDiamond pd;
            pd.a = l[0], pd.b = l[1], pd.c = l[2], pd.d = l[3];
            pd.which = *which;
            pd.cycle = h;
            pd.anticlockwise = is_anticlockwise(g, pd.a, pd.b, pd.c, pd.d);
            pd = select_parity(g, pd);
            auto key = [](const ParityDiamond& x) { return std::make_tuple(x.p2.size(), x.a, x.b, x.c, x.d); };
            if (!best || key(pd) < key(*best)) best = pd;
        }
    }
    return best;
}

// Cycle from an edge set in which every vertex has degree two, if connected.
std::optional<std::vector<VertexId>> single_cycle(int order, const std::set<Edge>& edges) {
    std::vector<std::vector<VertexId>> adj(order);
    for (const Edge& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (const auto& a : adj) {
        if (a.size() != 2) return std::nullopt;
    }
    std::vector<VertexId> out{0};
    VertexId prev = -1, cur = 0;
    while (true) {
        VertexId nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        if (nxt == 0) break;
        out.push_back(nxt);
        prev = cur;
        cur = nxt;
        if (static_cast<int>(out.size()) > order) return std::nullopt;
    }
    if (static_cast<int>(out.size()) != order) return std::nullopt;
    return out;
}

std::set<Edge> cycle_edges(const HamiltonCycle& h) {
    std::set<Edge> out;
    for (std::size_t i = 0; i < h.order.size(); ++i) out.insert(Edge::make(h.order[i], h.order[(i + 1) % h.order.size()]));
    return out;
}

} // namespace

std::vector<HamiltonCycle> exchange_cycles(const Graph& g, const HamiltonCycle& h, VertexId a) {
    std::vector<HamiltonCycle> out;
    const std::set<Edge> base = cycle_edges(h);
    const int len = static_cast<int>(h.order.size());
    const int i = position(h.order, a);
    VertexId f = h.order[(i + len - 1) % len];
    VertexId gv = h.order[(i + 1) % len];
    if (!g.adjacent(f, gv)) return out;
    for (VertexId b : g.neighbors(a)) {
        for (VertexId c : g.neighbors(a)) {
            if (b >= c || b == f || b == gv || c == f || c == gv) continue;
            if (!base.count(Edge::make(b, c))) continue;
            std::set<Edge> edges = base;
            edges.erase(Edge::make(a, f));
            edges.erase(Edge::make(a, gv));
            edges.erase(Edge::make(b, c));
            edges.insert(Edge::make(a, b));
            edges.insert(Edge::make(a, c));
            edges.insert(Edge::make(f, gv));
            if (auto cyc = single_cycle(g.order(), edges)) {
                HamiltonCycle h2 = canonical_cycle(g, *cyc);
                validate_hamilton(g, h2);
                out.push_back(h2);
            }
        }
    }
    return out;
}

namespace {

int shared(const DiamondShape& s, const std::set<VertexId>& vs) {
    return static_cast<int>(vs.count(s.a) + vs.count(s.b) + vs.count(s.c) + vs.count(s.d));
}

DiamondShape shape_of(const Triangle& t1, const Triangle& t2) {
    std::vector<VertexId> common, tips;
    for (VertexId v : t1) (std::find(t2.begin(), t2.end(), v) != t2.end() ? common : tips).push_back(v);
    for (VertexId v : t2) {
        if (std::find(t1.begin(), t1.end(), v) == t1.end()) tips.push_back(v);
    }
    return {common[0], tips[0], common[1], tips[1]};
}

bool same_shape(const DiamondShape& x, const DiamondShape& y) {
    return Edge::make(x.a, x.c) == Edge::make(y.a, y.c) && Edge::make(x.b, x.d) == Edge::make(y.b, y.d);
}

// The case analysis on one dual tree with at least two triangles: its leaf
// diamond, the diamonds around it, and for a degree-3 node with two leaves
// the cycle exchange at the surrounding pentagon.
std::optional<ParityDiamond> from_component(const Graph& g, const HamiltonCycle& h, const DualForests& df,
                                            const std::vector<int>& comp, int side) {
    const auto& edges = side == 1 ? df.side1 : df.side2;
    std::map<int, std::vector<int>> adj;
    for (auto [s, t] : edges) {
        if (std::find(comp.begin(), comp.end(), s) == comp.end()) continue;
        adj[s].push_back(t);
        adj[t].push_back(s);
    }
    auto deg = [&](int t) { return static_cast<int>(adj[t].size()); };
    auto exactly = [&](const DiamondShape& want) {
        return best_diamond(g, h, [&](const DiamondShape& s) { return same_shape(s, want); });
    };
    auto around = [&](const HamiltonCycle& hc, const std::set<VertexId>& vs) {
        return best_diamond(g, hc, [&](const DiamondShape& s) { return shared(s, vs) >= 2; });
    };
    auto tag = [](std::optional<ParityDiamond> pd, const char* src) {
        if (pd) pd->source = src;
        return pd;
    };

    if (comp.size() == 2) {
        return tag(exactly(shape_of(df.triangles[comp[0]], df.triangles[comp[1]])), "component");
    }
    // (a) a leaf next to a node of degree 2.
    for (int v : comp) {
        if (deg(v) != 1 || deg(adj[v][0]) != 2) continue;
        DiamondShape s = shape_of(df.triangles[v], df.triangles[adj[v][0]]);
        if (auto pd = exactly(s)) return tag(pd, "component");
        if (auto pd = around(h, {s.a, s.b, s.c, s.d})) return tag(pd, "component");
    }
    // (b) a node of degree 3 with two leaves.
    for (int v : comp) {
        if (deg(v) != 3) continue;
        std::vector<int> leaves;
        for (int u : adj[v]) {
            if (deg(u) == 1) leaves.push_back(u);
        }
        if (leaves.size() < 2) continue;
        std::set<VertexId> pent;
        for (int t : {v, leaves[0], leaves[1]}) pent.insert(df.triangles[t].begin(), df.triangles[t].end());
        for (int u : leaves) {
            if (auto pd = exactly(shape_of(df.triangles[v], df.triangles[u]))) return tag(pd, "component");
        }
        if (auto pd = around(h, pent)) return tag(pd, "component");
        for (VertexId a : pent) {
            for (const auto& h2 : exchange_cycles(g, h, a)) {
                if (auto pd = around(h2, pent)) {
                    pd->modified = true;
                    return tag(pd, "exchange");
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace

ParityDiamond find_local_structure(const Graph& g, const HamiltonCycle& h) {
    if (g.order() < 5) throw PreconditionError("local structure needs at least 5 vertices");
    validate_hamilton(g, h);

    if (g.is_lattice()) {
        DualForests df = dual_forests(g, h);
        for (int side : {1, 2}) {
            for (const auto& comp : df.components(side)) {
                if (comp.size() < 2) continue;
                if (auto pd = from_component(g, h, df, comp, side)) {
                    if (pd->modified) TRIGRID_LOG(1, "local structure uses a modified Hamilton cycle");
                    return *pd;
                }
                TRIGRID_LOG(1, "dual tree of " << comp.size() << " triangles gave no diamond");
            }
        }
    }
    // Abstract graphs, or a lattice case the tree analysis missed.
    if (auto pd = best_diamond(g, h, [](const DiamondShape&) { return true; })) {
        pd->source = "global";
        return *pd;
    }
    for (VertexId a : h.order) {
        for (const auto& h2 : exchange_cycles(g, h, a)) {
            if (auto pd = best_diamond(g, h2, [](const DiamondShape&) { return true; })) {
                pd->source = "exchange";
                pd->modified = true;
                return *pd;
            }
        }
    }
    throw InvariantError("no diamond satisfies the cycle conditions");
}

} // namespace trigrid
