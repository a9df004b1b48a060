#include "doctest.h"

#include "test_support.hpp"
#include "trigrid/error.hpp"
#include "trigrid/grid.hpp"
#include "trigrid/matching.hpp"

#include <set>

using namespace trigrid;

namespace {

// Cut-vertex test by deleting each vertex in turn.
bool two_connected_by_deletion(const Graph& g) {
    for (VertexId cut = 0; cut < g.order(); ++cut) {
        std::vector<char> seen(g.order(), 0);
        seen[cut] = 1;
        VertexId start = cut == 0 ? 1 : 0;
        std::vector<VertexId> stack{start};
        seen[start] = 1;
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
        if (count != g.order() - 1) return false;
    }
    return true;
}

// Euler's formula for connected plane graphs: V - E + F = 2.
void check_euler(const Graph& g) {
    int faces = static_cast<int>(g.triangles().size() + g.holes().size()) + 1;
    CHECK(g.order() - g.size() + faces == 2);
}

} // namespace

TEST_CASE("triangle") {
    Graph g = Graph::from_points({{0, 0}, {1, 0}, {0, 1}});
    CHECK(g.order() == 3);
    CHECK(g.size() == 3);
    CHECK(g.triangles().size() == 1);
    CHECK(g.holes().empty());
    CHECK(g.inner_edges().empty());
    CHECK(is_two_connected(g));
    CHECK(is_locally_connected(g));
    CHECK(degree6_vertices(g).empty());
    check_euler(g);
}

TEST_CASE("pentagon fan") {
    Graph g = generate(Family::pentagon);
    CHECK(g.order() == 5);
    CHECK(g.size() == 7);
    CHECK(g.triangles().size() == 3);
    CHECK(g.holes().empty());
    CHECK(g.inner_edges().size() == 2);
    CHECK(is_two_connected(g));
    CHECK(two_connected_by_deletion(g));
    CHECK(is_locally_connected(g));
    CHECK_FALSE(is_star_of_david(g));
    // The apex (0,0) has id 3 in text, 2 in memory.
    CHECK(g.points()[2] == LatticePoint{0, 0});
    CHECK(g.degree(2) == 4);
    check_euler(g);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(Graph::from_points({{0, 0}, {1, 0}}), PreconditionError);
    CHECK_THROWS_AS(Graph::from_points({{0, 0}, {1, 0}, {5, 5}}), PreconditionError);
    CHECK_THROWS_AS(Graph::from_points({{0, 0}, {1, 0}, {0, 0}}), PreconditionError);
    CHECK_THROWS_AS(Graph::from_points({}), PreconditionError);
}

TEST_CASE("two triangles sharing a vertex") {
    Graph g = Graph::from_points({{0, 0}, {1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    CHECK_FALSE(is_two_connected(g));
    CHECK_FALSE(two_connected_by_deletion(g));
    CHECK_FALSE(is_locally_connected(g));
    check_euler(g);
}

TEST_CASE("hexagon has one degree-6 vertex") {
    Graph g = generate(Family::hexagon);
    auto d6 = degree6_vertices(g);
    REQUIRE(d6.size() == 1);
    CHECK(g.points()[d6[0]] == LatticePoint{0, 0});
    CHECK(g.triangles().size() == 6);
    CHECK(g.inner_edges().size() == 6);
    check_euler(g);
}

TEST_CASE("two holes") {
    // A removed row of five points leaves a single long hole.
    GenerateParams params;
    params.radius = 3;
    params.removed = {{-1, 0}, {-2, 0}, {1, 0}, {2, 0}, {0, 0}, {0, 3}};
    Graph g = generate(Family::hex_with_hole, params);
    check_euler(g);
    REQUIRE(g.holes().size() == 1);
    CHECK(g.holes()[0].walk.size() == 14);

    // Two separated removed pairs give two holes.

    GenerateParams two;
    two.radius = 3;
    two.removed = {{-2, 1}, {-1, 1}, {1, -1}, {2, -1}, {3, -3}, {-3, 3}};
    Graph g2 = generate(Family::hex_with_hole, two);
    CHECK(g2.holes().size() == 2);
    for (const auto& h : g2.holes()) CHECK(h.walk.size() >= 6);
    check_euler(g2);
}

TEST_CASE("degree-6 vertices are the vertices off every boundary cycle") {
    for (const auto& g : test_support::lattice_corpus()) {
        std::set<VertexId> on_boundary;
        for (const auto& f : g.boundary_cycles()) on_boundary.insert(f.walk.begin(), f.walk.end());
        std::set<VertexId> interior;
        for (VertexId v = 0; v < g.order(); ++v) {
            if (!on_boundary.count(v)) interior.insert(v);
        }
        auto d6 = degree6_vertices(g);
        CHECK(std::set<VertexId>(d6.begin(), d6.end()) == interior);
        check_euler(g);
        if (is_locally_connected(g)) CHECK(is_two_connected(g));
        CHECK(is_two_connected(g) == two_connected_by_deletion(g));
        // Inner edges lie in two triangles, boundary edges in at most one.
        for (int e = 0; e < g.size(); ++e) {
            int count = 0;
            for (const auto& t : g.triangles()) {
                std::set<VertexId> s(t.begin(), t.end());
                if (s.count(g.edges()[e].u) && s.count(g.edges()[e].v)) ++count;
            }
            if (g.is_inner_edge(e)) {
                CHECK(count == 2);
            } else {
                CHECK(count <= 1);
            }
        }
    }
}

TEST_CASE("star of david") {
    Graph g = generate(Family::star_of_david);
    CHECK(g.order() == 13);
    CHECK(is_star_of_david(g));
    CHECK(is_locally_connected(g));
    CHECK_FALSE(is_factor_critical(g));
    // Six tips of degree 2 around a central hexagon whose center is the only degree-6 vertex.
    int tips = 0;
    for (VertexId v = 0; v < g.order(); ++v) tips += g.degree(v) == 2;
    CHECK(tips == 6);
    CHECK(degree6_vertices(g).size() == 1);

    // Any lattice symmetry of the point set is still recognized.
    std::vector<LatticePoint> moved;
    for (auto p : star_of_david_points()) moved.push_back({-p.y + 5, p.x + p.y - 3});
    CHECK(is_star_of_david(Graph::from_points(moved)));
}

TEST_CASE("star of david plus a point is not the star") {
    auto pts = star_of_david_points();
    pts.push_back({3, -1});
    pts.push_back({3, -2});
    Graph g = Graph::from_points(pts);
    CHECK_FALSE(is_star_of_david(g));
}

TEST_CASE("abstract families") {
    Graph d3 = generate(Family::diamond_cycle, {3});
    CHECK(d3.order() == 7);
    CHECK(d3.size() == 9);
    CHECK_FALSE(d3.is_lattice());
    CHECK_THROWS_AS(generate(Family::diamond_cycle, {2}), PreconditionError);

    GenerateParams cp;
    cp.n = 4;
    cp.m = 2;
    Graph c = generate(Family::chord_cycle, cp);
    CHECK(c.order() == 9);
    CHECK(c.size() == 10);
    // The chord closes a 5-cycle: vertices 0..4 with chord (0,4).
    CHECK(c.adjacent(0, 4));
    CHECK_FALSE(is_locally_connected(c));
    cp.m = 4;
    CHECK_THROWS_AS(generate(Family::chord_cycle, cp), PreconditionError);
}

TEST_CASE("subgraph reindexing") {
    Graph g = generate(Family::pentagon);
    SubGraph s = SubGraph::make(g, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(s.graph.order() == 3);
    CHECK(s.contains(2));
    CHECK_FALSE(s.contains(4));
    CHECK(s.global[s.local[1]] == 1);
}
