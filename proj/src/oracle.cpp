#include "trigrid/oracle.hpp"

#include "trigrid/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace trigrid {

namespace {

void over_budget(std::size_t budget) {
    throw BudgetExceeded("state budget of " + std::to_string(budget) + " placements exceeded");
}

} // namespace

Component bfs_component(const Graph& g, const Placement& start, std::size_t budget) {
    Component c;
    std::deque<std::pair<Placement, int>> queue;
    c.distance.emplace(start.key(g), 0);
    queue.emplace_back(start, 0);
    while (!queue.empty()) {
        auto [p, d] = std::move(queue.front());
        queue.pop_front();
        c.eccentricity = std::max(c.eccentricity, d);
        for (const auto& m : legal_moves(g, p)) {
            Placement next = p;
            next.apply(m);
            if (c.distance.emplace(next.key(g), d + 1).second) {
                if (c.distance.size() > budget) over_budget(budget);
                queue.emplace_back(std::move(next), d + 1);
            }
        }
    }
    return c;
}

std::optional<std::vector<SlideMove>> shortest_path(const Graph& g, const Placement& p, const Placement& q,
                                                    std::size_t budget) {
    const std::string goal = q.key(g);
    std::unordered_map<std::string, std::pair<std::string, SlideMove>> parent;
    std::deque<Placement> queue{p};
    parent.emplace(p.key(g), std::make_pair(std::string(), SlideMove{}));
    while (!queue.empty()) {
        Placement cur = std::move(queue.front());
        queue.pop_front();
        std::string key = cur.key(g);
        if (key == goal) {
            std::vector<SlideMove> moves;
            const std::string origin = p.key(g);
            while (key != origin) {
                const auto& [prev, m] = parent.at(key);
                moves.push_back(m);
                key = prev;
            }
            std::reverse(moves.begin(), moves.end());
            return moves;
        }
        for (const auto& m : legal_moves(g, cur)) {
            Placement next = cur;
            next.apply(m);
            if (parent.emplace(next.key(g), std::make_pair(key, m)).second) {
                if (parent.size() > budget) over_budget(budget);
                queue.push_back(std::move(next));
            }
        }
    }
    return std::nullopt;
}

std::optional<int> distance(const Graph& g, const Placement& p, const Placement& q, std::size_t budget) {
    auto path = shortest_path(g, p, q, budget);
    if (!path) return std::nullopt;
    return static_cast<int>(path->size());
}

namespace {

void enumerate(const Graph& g, std::vector<char>& covered, int skips_left, std::vector<Edge>& cur,
               std::vector<std::vector<Edge>>& out) {
    VertexId v = 0;
    while (v < g.order() && covered[v]) ++v;
    if (v == g.order()) {
        out.push_back(cur);
        return;
    }
    covered[v] = 1;
    if (skips_left > 0) enumerate(g, covered, skips_left - 1, cur, out);
    for (VertexId w : g.neighbors(v)) {
        if (covered[w]) continue;
        covered[w] = 1;
        cur.push_back(Edge::make(v, w));
        enumerate(g, covered, skips_left, cur, out);
        cur.pop_back();
        covered[w] = 0;
    }
    covered[v] = 0;
}

} // namespace

std::vector<std::vector<Edge>> all_near_perfect_matchings(const Graph& g) {
    std::vector<std::vector<Edge>> out;
    std::vector<char> covered(g.order(), 0);
    std::vector<Edge> cur;
    enumerate(g, covered, g.order() % 2, cur, out);
    return out;
}

std::size_t placement_count(const Graph& g) {
    std::size_t f = 1;
    for (int i = 2; i <= g.n(); ++i) f *= i;
    return all_near_perfect_matchings(g).size() * f;
}

int component_count(const Graph& g, std::size_t budget) {
    if (placement_count(g) > budget) over_budget(budget);
    std::unordered_set<std::string> seen;
    int components = 0;
    for (const auto& m : all_near_perfect_matchings(g)) {
        std::vector<int> perm(m.size());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<Edge> pieces(m.size());
            for (std::size_t i = 0; i < m.size(); ++i) pieces[perm[i]] = m[i];
            Placement p = Placement::from_pieces(g, pieces);
            if (seen.count(p.key(g))) continue;
            ++components;
            for (auto& [key, d] : bfs_component(g, p, budget).distance) seen.insert(key);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return components;
}

bool is_reconfigurable_bruteforce(const Graph& g, std::size_t budget) {
    auto matchings = all_near_perfect_matchings(g);
    if (matchings.empty()) return false;
    std::size_t total = placement_count(g);
    if (total > budget) over_budget(budget);
    return bfs_component(g, Placement::from_pieces(g, matchings.front()), budget).size() == total;
}

} // namespace trigrid
