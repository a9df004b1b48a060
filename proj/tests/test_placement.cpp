#include "doctest.h"

#include "test_support.hpp"
#include "trigrid/error.hpp"
#include "trigrid/matching.hpp"
#include "trigrid/oracle.hpp"
#include "trigrid/placement.hpp"

#include <numeric>
#include <random>

using namespace trigrid;

namespace {

Graph cycle_graph(int len) {
    std::vector<Edge> edges;
    for (int i = 0; i < len; ++i) edges.push_back(Edge::make(i, (i + 1) % len));
    return Graph::from_edges(len, edges);
}

std::vector<VertexId> identity_cycle(int len) {
    std::vector<VertexId> c(len);
    std::iota(c.begin(), c.end(), 0);
    return c;
}

// 1-based pair on the 7-cycle.
Edge e7(int a, int b) { return Edge::make(a - 1, b - 1); }

} // namespace

TEST_CASE("slide on the triangle") {
    Graph g = generate(Family::triangle);
    Placement p = Placement::from_pieces(g, {{0, 1}});
    CHECK(p.exposed() == 2);
    CHECK(legal_moves(g, p).size() == 2);
    Placement q = slide(g, p, {0, 1, 2});
    CHECK(q.piece(0) == Edge{1, 2});
    CHECK(q.exposed() == 0);
    Placement back = slide(g, q, reverse_move(p, {0, 1, 2}));
    CHECK(back == p);
    CHECK_THROWS_AS(slide(g, p, {0, 2, 1}), PreconditionError);
}

TEST_CASE("placement validation") {
    Graph g = generate(Family::pentagon);
    CHECK_THROWS_AS(Placement::from_pieces(g, {{0, 1}}), PreconditionError);
    CHECK_THROWS_AS(Placement::from_pieces(g, {{0, 1}, {1, 2}}), PreconditionError);
    CHECK_THROWS_AS(Placement::from_pieces(g, {{1, 2}, {0, 4}}), PreconditionError);
}

TEST_CASE("legal moves") {
    Graph c7 = cycle_graph(7);
    Placement p = Placement::from_pieces(c7, {e7(1, 2), e7(4, 5), e7(6, 7)});
    CHECK(legal_moves(c7, p).size() == 2);
    Graph pent = generate(Family::pentagon);
    // Apex id 3 exposed: all four pieces endpoints are its neighbours.
    Placement a = Placement::from_pieces(pent, {{0, 1}, {3, 4}});
    CHECK(a.exposed() == 2);
    CHECK(legal_moves(pent, a).size() == 4);
}

TEST_CASE("rotation examples on the 7-cycle") {
    Graph c7 = cycle_graph(7);
    auto cyc = identity_cycle(7);
    Placement p31 = Placement::from_pieces(c7, {e7(1, 2), e7(4, 5), e7(6, 7)});
    CHECK(rotation_closed_form(cyc, 3, 1) == p31.pieces());
    CHECK(rotation_closed_form(cyc, 1, 1) == std::vector<Edge>{e7(2, 3), e7(4, 5), e7(6, 7)});
    CHECK(rotation_closed_form(cyc, 6, 4) == std::vector<Edge>{e7(4, 5), e7(7, 1), e7(2, 3)});
    CHECK_THROWS_AS(rotation_closed_form(cyc, 2, 1), PreconditionError);

    Walker w(c7, p31);
    rotate_to_state(w, cyc, Placement::from_pieces(c7, rotation_closed_form(cyc, 1, 1)));
    CHECK(w.moves().size() == 1);

    Walker w2(c7, p31);
    Placement p64 = Placement::from_pieces(c7, rotation_closed_form(cyc, 6, 4));
    rotate_to_state(w2, cyc, p64);
    CHECK(w2.state() == p64);
    CHECK(w2.moves().size() <= 12);
    CHECK(verify_sequence(c7, w2.sequence(), p64).ok());
}

TEST_CASE("rotation bounds on small cycles") {
    for (int k = 2; k <= 5; ++k) {
        const int len = 2 * k + 1;
        Graph g = cycle_graph(len);
        auto cyc = identity_cycle(len);
        for (int j = 1; j <= len; ++j) {
            for (int h = 1; h <= len; ++h) {
                if ((j - h + len) % len % 2) continue;
                Placement from = Placement::from_pieces(g, rotation_closed_form(cyc, j, h));
                for (int j2 = 1; j2 <= len; ++j2) {
                    Walker we(g, from);
                    rotate_to_expose(we, cyc, j2 - 1);
                    CHECK(we.state().exposed() == j2 - 1);
                    CHECK(static_cast<int>(we.moves().size()) <= k);
                    for (int h2 = 1; h2 <= len; ++h2) {
                        if ((j2 - h2 + len) % len % 2) continue;
                        Placement to = Placement::from_pieces(g, rotation_closed_form(cyc, j2, h2));
                        Walker w(g, from);
                        rotate_to_state(w, cyc, to);
                        CHECK(w.state() == to);
                        CHECK(static_cast<int>(w.moves().size()) <= k * k + k);
                    }
                }
            }
        }
    }
}

TEST_CASE("rotation counts match oracle distances on the 5-cycle") {
    Graph g = cycle_graph(5);
    auto cyc = identity_cycle(5);
    Placement from = Placement::from_pieces(g, rotation_closed_form(cyc, 1, 1));
    for (int j = 1; j <= 5; ++j) {
        for (int h = 1; h <= 5; ++h) {
            if ((j - h + 5) % 5 % 2) continue;
            Placement to = Placement::from_pieces(g, rotation_closed_form(cyc, j, h));
            Walker w(g, from);
            rotate_to_state(w, cyc, to);
            CHECK(static_cast<int>(w.moves().size()) == *distance(g, from, to));
        }
    }
}

TEST_CASE("rotation leaves pieces off the cycle alone") {
    Graph g = generate(Family::hexagon);
    // A 5-cycle through the center; the third piece sits on the remaining ring edge.
    auto id = [&](int x, int y) { return *g.vertex_at({x, y}); };
    std::vector<VertexId> cyc{id(0, 0), id(1, 0), id(0, 1), id(-1, 1), id(-1, 0)};
    Placement p = Placement::from_pieces(
        g, {Edge::make(id(1, 0), id(0, 1)), Edge::make(id(-1, 1), id(-1, 0)), Edge::make(id(0, -1), id(1, -1))});
    REQUIRE(is_aligned(p, cyc));
    Walker w(g, p);
    rotate_steps(w, cyc, 7);
    CHECK(w.state().piece(2) == p.piece(2));
    for (const auto& m : w.moves()) CHECK(m.label != 2);
}

TEST_CASE("expose") {
    Graph pent = generate(Family::pentagon);
    Placement p = Placement::from_pieces(pent, {{1, 2}, {3, 4}});
    Walker w(pent, p);
    expose(w, 2);
    CHECK(w.moves().size() == 1);
    CHECK(w.state().exposed() == 2);

    Graph d4 = generate(Family::diamond_cycle, {4});
    std::mt19937 rng(5);
    auto matchings = all_near_perfect_matchings(d4);
    for (int rep = 0; rep < 50; ++rep) {
        Placement s = test_support::random_placement(d4, rng, matchings);
        for (VertexId v = 0; v < d4.order(); ++v) {
            Walker wv(d4, s);
            expose(wv, v);
            CHECK(wv.state().exposed() == v);
            CHECK(static_cast<int>(wv.moves().size()) <= d4.n());
        }
    }
}

TEST_CASE("verify sequence and inversion") {
    Graph g = generate(Family::hexagon);
    std::mt19937 rng(9);
    auto matchings = all_near_perfect_matchings(g);
    Placement start = test_support::random_placement(g, rng, matchings);
    CHECK(verify_sequence(g, {start, {}}, start).ok());

    Walker w(g, start);
    for (int i = 0; i < 30; ++i) {
        auto moves = legal_moves(g, w.state());
        w.slide(moves[rng() % moves.size()]);
    }
    auto report = verify_sequence(g, w.sequence(), w.state());
    CHECK(report.ok());
    CHECK(report.count == 30);

    Walker back(g, w.state());
    back.play(invert(start, w.moves()));
    CHECK(back.state() == start);

    auto bad = w.sequence();
    bad.moves.insert(bad.moves.begin() + 4, SlideMove{0, 0, 0});
    auto r = verify_sequence(g, bad);
    CHECK_FALSE(r.ok());
    CHECK(r.failed_index == 4);
}

TEST_CASE("rotate a label onto a cycle edge") {
    Graph c7 = cycle_graph(7);
    auto cyc = identity_cycle(7);
    Placement p = Placement::from_pieces(c7, {e7(1, 2), e7(4, 5), e7(6, 7)});
    for (int label = 0; label < 3; ++label) {
        for (int i = 0; i < 7; ++i) {
            Edge e = Edge::make(i, (i + 1) % 7);
            // Shortest stepping found by walking both directions one slide at a time.
            int brute = -1;
            for (int t = 0; t <= 21 && brute < 0; ++t) {
                for (int sign : {1, -1}) {
                    Walker probe(c7, p);
                    rotate_steps(probe, cyc, sign * t);
                    if (probe.state().piece(label) == e) brute = t;
                }
            }
            REQUIRE(brute >= 0);
            Walker w(c7, p);
            rotate_to_cover(w, cyc, label, e);
            CHECK(w.state().piece(label) == e);
            CHECK(static_cast<int>(w.moves().size()) == brute);
        }
    }
}

TEST_CASE("rotate a label onto a cycle edge with a fixed exposed vertex") {
    Graph c7 = cycle_graph(7);
    auto cyc = identity_cycle(7);
    Placement p = Placement::from_pieces(c7, {e7(1, 2), e7(4, 5), e7(6, 7)});
    for (int label = 0; label < 3; ++label) {
        for (VertexId x = 0; x < 7; ++x) {
            for (int i = 0; i < 7; ++i) {
                Edge e = Edge::make(i, (i + 1) % 7);
                if (e.has(x)) continue;
                int brute = -1;
                for (int t = 0; t <= 21 && brute < 0; ++t) {
                    for (int sign : {1, -1}) {
                        Walker probe(c7, p);
                        rotate_steps(probe, cyc, sign * t);
                        if (probe.state().piece(label) == e && probe.state().exposed() == x) brute = t;
                    }
                }
                if (brute < 0) {
                    CHECK_THROWS_AS(steps_to_cover(p, cyc, label, e, x), PreconditionError);
                    continue;
                }
                Walker w(c7, p);
                rotate_to_cover(w, cyc, label, e, x);
                CHECK(w.state().piece(label) == e);
                CHECK(w.state().exposed() == x);
                CHECK(static_cast<int>(w.moves().size()) == brute);
            }
        }
    }
}
