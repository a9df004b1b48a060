#include "doctest.h"

#include "test_support.hpp"
#include "trigrid/ears.hpp"
#include "trigrid/error.hpp"
#include "trigrid/matching.hpp"
#include "trigrid/oracle.hpp"
#include "trigrid/witnesses.hpp"

#include <random>
#include <set>

using namespace trigrid;

namespace {

// Vertex set of G_level, checked against the edge list independently.
std::vector<VertexId> level_vertices(const EarDecomposition& d, int level) {
    std::set<VertexId> vs(d.base.begin(), d.base.end());
    for (int i = 0; i + 1 < level; ++i) vs.insert(d.ears[i].begin(), d.ears[i].end());
    return {vs.begin(), vs.end()};
}

bool suitable(const Graph& g) { return is_two_connected(g) && is_factor_critical(g); }

} // namespace

TEST_CASE("validation rejects broken decompositions") {
    Graph g = generate(Family::pentagon);
    EarDecomposition d;
    d.base = {0, 1, 3, 4, 2};
    d.ears = {{1, 2}, {2, 3}};
    CHECK_NOTHROW(validate_decomposition(g, d));
    auto missing = d;
    missing.ears.pop_back();
    CHECK_THROWS_AS(validate_decomposition(g, missing), InvariantError);
    auto twice = d;
    twice.ears.push_back({1, 2});
    CHECK_THROWS_AS(validate_decomposition(g, twice), InvariantError);
    auto even = d;
    even.base = {0, 1, 3, 2};
    CHECK_THROWS_AS(validate_decomposition(g, even), InvariantError);
}

TEST_CASE("aligned predicate on the pentagon") {
    Graph g = generate(Family::pentagon);
    EarDecomposition d;
    d.base = {0, 1, 3, 4, 2};
    d.ears = {{1, 2}, {2, 3}};
    // Exposed 2, pieces along the base.
    CHECK(is_aligned_with(Placement::from_pieces(g, {{0, 1}, {3, 4}}), d));
    // A piece on the chord 1-2 breaks the second condition.
    CHECK_FALSE(is_aligned_with(Placement::from_pieces(g, {{1, 2}, {3, 4}}), d));
}

TEST_CASE("ear decompositions of the lattice corpus") {
    int checked = 0;
    for (const auto& g : test_support::lattice_corpus()) {
        if (!suitable(g)) continue;
        for (VertexId x = 0; x < g.order(); x += 3) {
            Matching m = *near_perfect_matching(g, x);
            EarDecomposition d = ear_decomposition(g, m);
            CHECK_NOTHROW(validate_decomposition(g, d));
            for (int level = 1; level <= d.levels(); ++level) CHECK(is_central(g, level_vertices(d, level)));
            ++checked;
        }
    }
    CHECK(checked > 10);
}

TEST_CASE("admissible cores") {
    SUBCASE("hexagon has a central pentagon") {
        Graph g = generate(Family::hexagon);
        auto r = find_admissible(g);
        REQUIRE(r);
        CHECK(r->decomposition.kind == CoreKind::pentagon);
        CHECK(r->decomposition.base.size() == 5);
        validate_decomposition(g, r->decomposition);
    }
    SUBCASE("lattice diamond cycle") {
        Graph g = lattice_diamond_cycle_graph();
        auto r = find_admissible(g);
        REQUIRE(r);
        CHECK(r->decomposition.kind == CoreKind::diamond_cycle);
        CHECK(r->decomposition.base.size() == 9);
        CHECK(r->decomposition.ears[0].size() == 4);
        validate_decomposition(g, r->decomposition);
    }
    SUBCASE("abstract diamond cycles") {
        for (int n : {3, 4, 5}) {
            Graph g = generate(Family::diamond_cycle, {n});
            auto r = find_admissible(g);
            REQUIRE(r);
            CHECK(r->decomposition.kind == CoreKind::diamond_cycle);
            CHECK(static_cast<int>(r->decomposition.base.size()) == 2 * n - 1);
        }
    }
    SUBCASE("odd cycles have no core") {
        CHECK_FALSE(find_admissible(ring9_graph()));
        CHECK_FALSE(find_admissible(generate(Family::chord_cycle, {4, 2})));
    }
    SUBCASE("every core level is central") {
        for (const auto& g : test_support::lattice_corpus()) {
            if (!suitable(g) || degree6_vertices(g).empty()) continue;
            auto r = find_admissible(g);
            REQUIRE(r);
            CHECK(r->witness.valid_in(g));
            CHECK(r->witness.exposed().size() == 1);
            for (int level = 1; level <= r->decomposition.levels(); ++level) {
                CHECK(is_central(g, level_vertices(r->decomposition, level)));
            }
        }
    }
}

TEST_CASE("alignment with ears") {
    std::mt19937 rng(21);
    for (const auto& g : test_support::lattice_corpus()) {
        if (!suitable(g) || g.order() > 15) continue;
        auto r = find_admissible(g);
        if (!r) continue;
        Placement seed = Placement::from_matching(g, r->witness);
        for (int rep = 0; rep < 5; ++rep) {
            Placement p = test_support::random_walk_placement(g, seed, rng, 200);
            Walker w(g, p);
            align_with_ears(w, r->decomposition);
            CHECK(is_aligned_with(w.state(), r->decomposition));
            CHECK(verify_sequence(g, w.sequence(), w.state()).ok());
        }
    }
}
