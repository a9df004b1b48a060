#include "trigrid/grid.hpp"

#include "trigrid/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>

namespace trigrid {

namespace {

// Anti-clockwise order of the six lattice directions.
constexpr std::array<LatticePoint, 6> kDirections{{{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};

int direction_index(LatticePoint from, LatticePoint to) {
    LatticePoint d{to.x - from.x, to.y - from.y};
    for (int i = 0; i < 6; ++i) {
        if (kDirections[i] == d) return i;
    }
    return -1;
}

// Twice the signed area of the walk, in the sheared frame (2x + y, y).
long long doubled_area(const std::vector<LatticePoint>& pts, const std::vector<VertexId>& walk) {
    long long a = 0;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        const auto& p = pts[walk[i]];
        const auto& q = pts[walk[(i + 1) % walk.size()]];
        a += static_cast<long long>(2 * p.x + p.y) * q.y - static_cast<long long>(2 * q.x + q.y) * p.y;
    }
    return a;
}

} // namespace

bool lattice_adjacent(LatticePoint a, LatticePoint b) { return direction_index(a, b) >= 0; }

std::array<double, 2> cartesian(LatticePoint p) {
    return {p.x + p.y / 2.0, p.y * std::sqrt(3.0) / 2.0};
}

Graph Graph::from_points(std::vector<LatticePoint> points) {
    if (points.empty()) throw PreconditionError("empty point set");
    std::sort(points.begin(), points.end());
    if (std::adjacent_find(points.begin(), points.end()) != points.end()) {
        throw PreconditionError("duplicate lattice point");
    }
    Graph g;
    g.lattice_ = true;
    g.points_ = std::move(points);
    const int order = static_cast<int>(g.points_.size());
    g.adj_.assign(order, {});
    std::map<LatticePoint, VertexId> index;
    for (int i = 0; i < order; ++i) index[g.points_[i]] = i;
    for (int i = 0; i < order; ++i) {
        for (const auto& d : kDirections) {
            auto it = index.find({g.points_[i].x + d.x, g.points_[i].y + d.y});
            if (it != index.end()) g.adj_[i].push_back(it->second);
        }
        std::sort(g.adj_[i].begin(), g.adj_[i].end());
    }
    g.index_edges();
    if (!is_connected(g)) throw PreconditionError("point set is not connected");
    if (order % 2 == 0) throw PreconditionError("number of vertices must be odd, got " + std::to_string(order));
    g.compute_triangles();
    g.compute_faces();
    return g;
}

Graph Graph::from_edges(int order, std::vector<Edge> edges, bool validate) {
    if (order <= 0) throw PreconditionError("empty graph");
    Graph g;
    g.adj_.assign(order, {});
    std::set<Edge> seen;
    for (auto e : edges) {
        e = Edge::make(e.u, e.v);
        if (e.u == e.v || e.u < 0 || e.v >= order) throw PreconditionError("invalid edge");
        if (!seen.insert(e).second) continue;
        g.adj_[e.u].push_back(e.v);
        g.adj_[e.v].push_back(e.u);
    }
    for (auto& a : g.adj_) std::sort(a.begin(), a.end());
    g.index_edges();
    if (validate) {
        if (!is_connected(g)) throw PreconditionError("graph is not connected");
        if (order % 2 == 0) throw PreconditionError("number of vertices must be odd, got " + std::to_string(order));
    }
    g.compute_triangles();
    g.inner_.assign(g.edges_.size(), false);
    return g;
}

void Graph::index_edges() {
    const int n = order();
    edges_.clear();
    edge_id_.assign(static_cast<std::size_t>(n) * n, -1);
    for (int u = 0; u < n; ++u) {
        for (VertexId v : adj_[u]) {
            if (u < v) {
                edge_id_[u * n + v] = edge_id_[v * n + u] = static_cast<int>(edges_.size());
                edges_.push_back({u, v});
            }
        }
    }
}

int Graph::edge_index(VertexId a, VertexId b) const {
    const int n = order();
    if (a < 0 || b < 0 || a >= n || b >= n) return -1;
    return edge_id_[a * n + b];
}

std::optional<VertexId> Graph::vertex_at(LatticePoint p) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), p);
    if (it == points_.end() || *it != p) return std::nullopt;
    return static_cast<VertexId>(it - points_.begin());
}

void Graph::compute_triangles() {
    triangles_.clear();
    for (const auto& e : edges_) {
        for (VertexId w : adj_[e.v]) {
            if (w > e.v && adjacent(e.u, w)) triangles_.push_back({e.u, e.v, w});
        }
    }
}

void Graph::compute_faces() {
    const int n = order();
    // Rotation system: neighbours sorted anti-clockwise by lattice direction.
    std::vector<std::array<VertexId, 6>> rot(n);
    for (int v = 0; v < n; ++v) {
        rot[v].fill(-1);
        for (VertexId w : adj_[v]) rot[v][direction_index(points_[v], points_[w])] = w;
    }
    std::set<std::pair<VertexId, VertexId>> used;
    std::vector<Face> inner_faces;
    std::vector<Face> outer;
    for (int s = 0; s < n; ++s) {
        for (VertexId t : adj_[s]) {
            if (used.count({s, t})) continue;
            // Walk with the face on the left: at each vertex take the first
            // neighbour clockwise from the one we arrived from.
            Face f;
            VertexId a = s, b = t;
            do {
                used.insert({a, b});
                f.walk.push_back(a);
                int d = direction_index(points_[b], points_[a]);
                VertexId next = -1;
                for (int k = 1; k <= 6; ++k) {
                    VertexId c = rot[b][((d - k) % 6 + 6) % 6];
                    if (c >= 0) {
                        next = c;
                        break;
                    }
                }
                a = b;
                b = next;
            } while (!(a == s && b == t));
            if (doubled_area(points_, f.walk) <= 0) {
                f.outer = true;
                outer.push_back(std::move(f));
            } else {
                inner_faces.push_back(std::move(f));
            }
        }
    }
    if (n == 1) outer.push_back(Face{{0}, true});
    if (outer.size() != 1) throw InvariantError("face census found " + std::to_string(outer.size()) + " outer faces");
    boundary_.clear();
    boundary_.push_back(std::move(outer.front()));
    for (auto& f : inner_faces) {
        if (f.walk.size() == 4 || f.walk.size() == 5) {
            throw InvariantError("inner face of length " + std::to_string(f.walk.size()) + " in an induced lattice graph");
        }
        if (f.walk.size() >= 6) boundary_.push_back(std::move(f));
    }
    inner_.assign(edges_.size(), true);
    for (const auto& f : boundary_) {
        for (std::size_t i = 0; i < f.walk.size(); ++i) {
            VertexId a = f.walk[i], b = f.walk[(i + 1) % f.walk.size()];
            if (a != b) inner_[edge_index(a, b)] = false;
        }
    }
}

std::vector<Face> Graph::holes() const {
    if (boundary_.size() <= 1) return {};
    return {boundary_.begin() + 1, boundary_.end()};
}

std::vector<int> Graph::inner_edges() const {
    std::vector<int> out;
    for (int e = 0; e < size(); ++e) {
        if (inner_[e]) out.push_back(e);
    }
    return out;
}

SubGraph SubGraph::make(const Graph& host, const std::vector<Edge>& edges) {
    SubGraph s;
    s.local.assign(host.order(), -1);
    for (const auto& e : edges) {
        s.local[e.u] = 0;
        s.local[e.v] = 0;
    }
    for (VertexId v = 0; v < host.order(); ++v) {
        if (s.local[v] >= 0) {
            s.local[v] = static_cast<int>(s.global.size());
            s.global.push_back(v);
        }
    }
    std::vector<Edge> local_edges;
    for (const auto& e : edges) local_edges.push_back(Edge::make(s.local[e.u], s.local[e.v]));
    s.graph = Graph::from_edges(static_cast<int>(s.global.size()), local_edges, false);
    return s;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    std::vector<char> seen(g.order(), 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == g.order();
}

bool is_two_connected(const Graph& g) {
    const int n = g.order();
    if (n < 3) return false;
    if (!is_connected(g)) return false;
    // Articulation points by DFS low-link.
    std::vector<int> disc(n, -1), low(n, 0);
    int timer = 0;
    bool cut = false;
    struct Frame {
        VertexId v;
        VertexId parent;
        std::size_t next;
    };
    std::vector<Frame> stack{{0, -1, 0}};
    disc[0] = low[0] = timer++;
    int root_children = 0;
    while (!stack.empty()) {
        auto& f = stack.back();
        auto nb = g.neighbors(f.v);
        if (f.next < nb.size()) {
            VertexId w = nb[f.next++];
            if (w == f.parent) continue;
            if (disc[w] >= 0) {
                low[f.v] = std::min(low[f.v], disc[w]);
            } else {
                disc[w] = low[w] = timer++;
                if (f.v == 0) ++root_children;
                stack.push_back({w, f.v, 0});
            }
        } else {
            Frame done = f;
            stack.pop_back();
            if (!stack.empty()) {
                auto& p = stack.back();
                low[p.v] = std::min(low[p.v], low[done.v]);
                if (p.v != 0 && low[done.v] >= disc[p.v]) cut = true;
            }
        }
    }
    if (root_children > 1) cut = true;
    return !cut;
}

bool is_locally_connected(const Graph& g) {
    for (VertexId u = 0; u < g.order(); ++u) {
        auto nb = g.neighbors(u);
        if (nb.empty()) return false;
        std::vector<VertexId> seen{nb[0]};
        std::vector<VertexId> stack{nb[0]};
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : nb) {
                if (g.adjacent(v, w) && std::find(seen.begin(), seen.end(), w) == seen.end()) {
                    seen.push_back(w);
                    stack.push_back(w);
                }
            }
        }
        if (seen.size() != nb.size()) return false;
    }
    return true;
}

std::vector<LatticePoint> canonical_form(std::vector<LatticePoint> points) {
    std::vector<LatticePoint> best;
    for (int reflect = 0; reflect < 2; ++reflect) {
        std::vector<LatticePoint> cur = points;
        if (reflect) {
            for (auto& p : cur) p = {p.y, p.x};
        }
        for (int r = 0; r < 6; ++r) {
            for (auto& p : cur) p = {-p.y, p.x + p.y};
            std::vector<LatticePoint> t = cur;
            std::sort(t.begin(), t.end());
            LatticePoint o = t.front();
            for (auto& p : t) p = {p.x - o.x, p.y - o.y};
            if (best.empty() || t < best) best = std::move(t);
        }
    }
    return best;
}

std::vector<LatticePoint> star_of_david_points() {
    // Union of two opposite side-3 triangles around the origin.
    std::vector<LatticePoint> pts;
    for (int x = -2; x <= 2; ++x) {
        for (int y = -2; y <= 2; ++y) {
            bool up = x >= -1 && y >= -1 && x + y <= 1;
            bool down = x <= 1 && y <= 1 && x + y >= -1;
            if (up || down) pts.push_back({x, y});
        }
    }
    return pts;
}

bool is_star_of_david(const Graph& g) {
    if (!g.is_lattice() || g.order() != 13) return false;
    static const auto canonical = canonical_form(star_of_david_points());
    return canonical_form(g.points()) == canonical;
}

std::vector<VertexId> degree6_vertices(const Graph& g) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 6) out.push_back(v);
    }
    return out;
}

std::optional<Family> family_from_name(const std::string& name) {
    static const std::map<std::string, Family> names{
        {"triangle", Family::triangle},         {"pentagon", Family::pentagon},
        {"hexagon", Family::hexagon},           {"diamond_cycle", Family::diamond_cycle},
        {"chord_cycle", Family::chord_cycle},   {"star_of_david", Family::star_of_david},
        {"hex_with_hole", Family::hex_with_hole}};
    auto it = names.find(name);
    if (it == names.end()) return std::nullopt;
    return it->second;
}

std::string family_name(Family f) {
    switch (f) {
    case Family::triangle: return "triangle";
    case Family::pentagon: return "pentagon";
    case Family::hexagon: return "hexagon";
    case Family::diamond_cycle: return "diamond_cycle";
    case Family::chord_cycle: return "chord_cycle";
    case Family::star_of_david: return "star_of_david";
    case Family::hex_with_hole: return "hex_with_hole";
    }
    return "?";
}

Graph generate(Family family, const GenerateParams& params) {
    switch (family) {
    case Family::triangle: return Graph::from_points({{0, 0}, {1, 0}, {0, 1}});
    case Family::pentagon: return Graph::from_points({{0, 0}, {1, 0}, {0, 1}, {-1, 1}, {-1, 0}});
    case Family::hexagon: {
        std::vector<LatticePoint> pts{{0, 0}};
        for (const auto& d : kDirections) pts.push_back(d);
        return Graph::from_points(pts);
    }
    case Family::star_of_david: return Graph::from_points(star_of_david_points());
    case Family::diamond_cycle: {
        const int n = params.n;
        if (n < 3) throw PreconditionError("diamond_cycle requires n >= 3");
        // Cycle 1..2n-1 plus diamond {2n-2, 2n-1, 2n, 2n+1} with diagonal (2n-1, 2n+1).
        std::vector<Edge> edges;
        for (int i = 1; i <= 2 * n - 2; ++i) edges.push_back(Edge::make(i - 1, i));
        edges.push_back(Edge::make(2 * n - 2, 0));
        edges.push_back(Edge::make(2 * n - 3, 2 * n));
        edges.push_back(Edge::make(2 * n, 2 * n - 1));
        edges.push_back(Edge::make(2 * n - 1, 2 * n - 2));
        edges.push_back(Edge::make(2 * n - 2, 2 * n));
        return Graph::from_edges(2 * n + 1, edges);
    }
    case Family::chord_cycle: {
        const int n = params.n, m = params.m;
        if (n < 2 || m < 1 || m > n - 1) throw PreconditionError("chord_cycle requires n >= 2 and 1 <= m <= n-1");
        // Cycle 1..2n+1 with chord (1, 2m+1) closing an odd cycle of length 2m+1.
        std::vector<Edge> edges;
        for (int i = 0; i < 2 * n + 1; ++i) edges.push_back(Edge::make(i, (i + 1) % (2 * n + 1)));
        edges.push_back(Edge::make(0, 2 * m));
        return Graph::from_edges(2 * n + 1, edges);
    }
    case Family::hex_with_hole: {
        const int r = params.radius;
        if (r < 1) throw PreconditionError("hex_with_hole requires radius >= 1");
        std::set<LatticePoint> removed(params.removed.begin(), params.removed.end());
        std::vector<LatticePoint> pts;
        for (int x = -r; x <= r; ++x) {
            for (int y = -r; y <= r; ++y) {
                if (std::abs(x + y) <= r && !removed.count({x, y})) pts.push_back({x, y});
            }
        }
        return Graph::from_points(pts);
    }
    }
    throw PreconditionError("unknown family");
}

} // namespace trigrid
