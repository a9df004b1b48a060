#include "doctest.h"

#include "test_support.hpp"
#include "trigrid/error.hpp"
#include "trigrid/hc_planner.hpp"
#include "trigrid/io.hpp"

#include <random>

using namespace trigrid;

namespace {

int parse_error_line(const std::function<void()>& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

} // namespace

TEST_CASE("graph round trip") {
    for (const auto& g : test_support::lattice_corpus()) {
        Graph h = parse_graph(format_graph(g));
        CHECK(h.points() == g.points());
        CHECK(h.edges() == g.edges());
    }
    Graph a = generate(Family::diamond_cycle, {4});
    Graph b = parse_graph(format_graph(a));
    CHECK_FALSE(b.is_lattice());
    CHECK(b.order() == a.order());
    CHECK(b.edges() == a.edges());
}

TEST_CASE("graph text is literal") {
    Graph g = parse_graph("# pentagon\nv 1 -1 0\nv 2 -1 1\n\nv 3 0 0\nv 4 0 1\nv 5 1 0\n");
    CHECK(g.order() == 5);
    CHECK(g.size() == 7);
    CHECK(format_graph(g) == "v 1 -1 0\nv 2 -1 1\nv 3 0 0\nv 4 0 1\nv 5 1 0\n");
}

TEST_CASE("graph parse errors carry line numbers") {
    CHECK(parse_error_line([] { parse_graph("v 1 0 0\nv 2 1 0\nq 3\n"); }) == 3);
    CHECK(parse_error_line([] { parse_graph("v 1 0 0\nv 2 x 0\n"); }) == 2);
    CHECK(parse_error_line([] { parse_graph("v 1 0 0\nv 3 1 0\nv 4 0 1\n"); }) == 2);
    CHECK(parse_error_line([] { parse_graph("v 1 1 0\nv 2 0 0\nv 3 0 1\n"); }) == 2);
    CHECK(parse_error_line([] { parse_graph("v 1 0 0\nv 1 1 0\n"); }) == 2);
    CHECK(parse_error_line([] { parse_graph("v 1 0 0 7\n"); }) == 1);
    CHECK_THROWS_AS(parse_graph("v 1 0 0\nv 2 1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("# nothing\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("av 1\nav 2\nav 3\nae 1 4\n"), ParseError);
}

TEST_CASE("placement, matching and sequence round trips") {
    std::mt19937 rng(4);
    Graph g = generate(Family::hexagon);
    auto seed = Placement::from_matching(g, *near_perfect_matching(g, 0));
    for (int rep = 0; rep < 20; ++rep) {
        Placement p = test_support::random_walk_placement(g, seed, rng, 30);
        CHECK(parse_placement(g, format_placement(p)) == p);
        CHECK(parse_matching(g, format_matching(p.matching())) == p.matching());
        Walker w(g, p);
        for (int i = 0; i < 10; ++i) {
            auto moves = legal_moves(g, w.state());
            w.slide(moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)]);
        }
        SlideSequence s = w.sequence();
        SlideSequence t = parse_sequence(g, format_sequence(s));
        CHECK(t.start == s.start);
        CHECK(t.moves == s.moves);
    }
    CHECK(format_move({0, 2, 4}) == "s 1 3 5");
}

TEST_CASE("placement parse errors") {
    Graph g = generate(Family::pentagon);
    CHECK(parse_error_line([&] { parse_placement(g, "p 1 1 2\np 2 3 9\n"); }) == 2);
    CHECK(parse_error_line([&] { parse_placement(g, "p 1 1 2\np 1 3 4\n"); }) == 2);
    CHECK(parse_error_line([&] { parse_placement(g, "p 1 1 5\n"); }) == 1);
    CHECK_THROWS_AS(parse_placement(g, "p 1 1 2\np 3 3 4\n"), ParseError);
    CHECK_THROWS_AS(parse_placement(g, "p 1 1 2\np 2 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse_matching(g, "m 1 2\nx 1\n"), ParseError);
    CHECK(parse_error_line([&] { parse_sequence(g, "p 1 1 2\n"); }) == 1);
    CHECK(parse_error_line([&] { parse_sequence(g, "start\np 1 1 2\np 2 3 4\ns 1 1\n"); }) == 4);
}

TEST_CASE("decomposition and cycle round trips") {
    Graph g = generate(Family::hexagon);
    auto adm = find_admissible(g);
    REQUIRE(adm);
    auto d = parse_decomposition(g, format_decomposition(adm->decomposition));
    CHECK(d.base == adm->decomposition.base);
    CHECK(d.ears == adm->decomposition.ears);
    CHECK(d.kind == adm->decomposition.kind);
    auto h = find_hamilton(g);
    CHECK(parse_cycle(g, format_cycle(h)).order == h.order);
    CHECK(format_cycle(h).rfind("h 1 ", 0) == 0);
    CHECK_THROWS_AS(parse_cycle(g, "h 1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse_decomposition(g, "ear 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_decomposition(g, "base 1 2 3\nkind nope\n"), ParseError);
}

TEST_CASE("plan round trip") {
    Graph g = generate(Family::pentagon);
    Placement p = Placement::from_pieces(g, {Edge::make(0, 1), Edge::make(3, 4)});
    Placement q = Placement::from_pieces(g, {Edge::make(3, 4), Edge::make(0, 1)});
    auto r = plan_hamilton(g, p, q);
    std::string text = format_plan(r);
    CHECK(text.rfind("strategy hamilton\nslides " + std::to_string(r.slides()) + "\nstart\n", 0) == 0);
    auto f = parse_plan(g, text);
    CHECK(f.strategy == "hamilton");
    CHECK(f.sequence.start == p);
    CHECK(f.sequence.moves == r.sequence.moves);
    CHECK(parse_error_line([&] { parse_plan(g, "strategy ear\nslides 1\nstart\np 1 1 2\np 2 4 5\ns 1 x 3\n"); }) == 6);
    CHECK_THROWS_AS(parse_plan(g, "strategy ear\nslides 2\nstart\np 1 1 2\np 2 4 5\n"), ParseError);
}

TEST_CASE("component csv") {
    Graph g = generate(Family::pentagon);
    Placement p = Placement::from_pieces(g, {Edge::make(0, 1), Edge::make(3, 4)});
    auto c = bfs_component(g, p);
    std::string csv = format_component_csv(g, c, 1);
    CHECK(csv.rfind("state_key,distance\n1-2;4-5,0\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(c.size()) + 2);
    CHECK(csv.find("# components 1 eccentricity " + std::to_string(c.eccentricity)) != std::string::npos);
    CHECK(state_text(p) == "1-2;4-5");
}
