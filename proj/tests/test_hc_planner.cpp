#include "doctest.h"

#include "test_support.hpp"
#include "trigrid/error.hpp"
#include "trigrid/hc_planner.hpp"
#include "trigrid/oracle.hpp"
#include "trigrid/witnesses.hpp"

#include <random>
#include <set>

using namespace trigrid;

namespace {

std::vector<Placement> all_placements(const Graph& g) {
    std::vector<Placement> out;
    for (auto m : all_near_perfect_matchings(g)) {
        std::sort(m.begin(), m.end());
        do {
            out.push_back(Placement::from_pieces(g, m));
        } while (std::next_permutation(m.begin(), m.end()));
    }
    return out;
}

bool on_cycle(const Placement& p, const HamiltonCycle& h) {
    for (const Edge& e : p.pieces()) {
        if (!h.contains(e.u, e.v)) return false;
    }
    return true;
}

std::set<Edge> cycle_edge_set(const std::vector<VertexId>& c) {
    std::set<Edge> out;
    for (std::size_t i = 0; i < c.size(); ++i) out.insert(Edge::make(c[i], c[(i + 1) % c.size()]));
    return out;
}

// Aligned placement with c exposed and a random label order.
Placement aligned_at_c(const Graph& g, const ParityDiamond& pd, std::mt19937& rng) {
    auto hc = slot_cycle(pd);
    std::vector<Edge> pieces;
    for (std::size_t s = 0; 2 * s + 2 < hc.size() + 1; ++s) pieces.push_back(Edge::make(hc[2 * s + 1], hc[2 * s + 2]));
    std::shuffle(pieces.begin(), pieces.end(), rng);
    return Placement::from_pieces(g, pieces);
}

std::vector<Graph> hamilton_corpus(std::mt19937& rng, int min_size, int max_size, int per_size) {
    std::vector<Graph> out;
    for (int size = min_size; size <= max_size; size += 2) {
        int found = 0;
        for (int tries = 0; found < per_size && tries < 200; ++tries) {
            Graph g = Graph::from_points(test_support::random_blob(rng, size));
            if (!is_locally_connected(g) || is_star_of_david(g)) continue;
            out.push_back(g);
            ++found;
        }
    }
    return out;
}

} // namespace

TEST_CASE("alignment moves every piece onto the cycle") {
    Graph g = generate(Family::pentagon);
    auto h = find_hamilton(g);
    int moved = 0;
    for (const auto& p : all_placements(g)) {
        auto seq = align_with_hamilton(g, p, h);
        auto v = verify_sequence(g, seq);
        REQUIRE(v.ok());
        CHECK(on_cycle(v.final_state, h));
        CHECK(is_aligned(v.final_state, h.order));
        if (is_aligned(p, h.order)) CHECK(seq.moves.empty());
        if (!on_cycle(p, h)) ++moved;
    }
    CHECK(moved > 0);

    std::mt19937 rng(5);
    for (const auto& g2 : hamilton_corpus(rng, 11, 11, 4)) {
        auto h2 = find_hamilton(g2);
        auto matchings = all_near_perfect_matchings(g2);
        for (int rep = 0; rep < 10; ++rep) {
            Placement p = test_support::random_placement(g2, rng, matchings);
            auto seq = align_with_hamilton(g2, p, h2);
            auto v = verify_sequence(g2, seq);
            REQUIRE(v.ok());
            CHECK(is_aligned(v.final_state, h2.order));
            const int n = p.n();
            CHECK(static_cast<int>(seq.moves.size()) <= 3 * (2 * n + 1) * n);
        }
    }
}

TEST_CASE("slot cycle convention") {
    std::mt19937 rng(9);
    for (const auto& g : hamilton_corpus(rng, 5, 15, 3)) {
        auto pd = find_local_structure(g, find_hamilton(g));
        auto hc = slot_cycle(pd);
        CHECK(hc.front() == pd.c);
        CHECK(cycle_edge_set(hc) == cycle_edge_set(pd.cycle.order));
        const int j = swap_window(pd);
        CHECK(Edge::make(hc[2 * j + 1], hc[2 * j + 2]) == Edge::make(pd.p1[pd.p1.size() - 3], pd.p1[pd.p1.size() - 2]));
        CHECK(Edge::make(hc[2 * j + 3], hc[2 * j + 4]) == Edge::make(pd.a, pd.b));
    }
}

TEST_CASE("adjacent swaps are transpositions") {
    std::mt19937 rng(13);
    int short_cases = 0, long_cases = 0;
    for (const auto& g : hamilton_corpus(rng, 5, 17, 4)) {
        auto pd = find_local_structure(g, find_hamilton(g));
        const bool is_short = pd.p1.size() == 3;
        (is_short ? short_cases : long_cases)++;
        Placement p = aligned_at_c(g, pd, rng);
        auto hc = slot_cycle(pd);
        const int n = p.n();
        const int window = swap_window(pd);
        for (int j = 0; j < n; ++j) {
            auto seq = swap_adjacent(g, p, j, pd);
            auto v = verify_sequence(g, seq);
            REQUIRE(v.ok());
            auto before = cycle_phase(p, hc).labels;
            auto after = cycle_phase(v.final_state, hc).labels;
            std::swap(before[j], before[(j + 1) % n]);
            CHECK(after == before);
            CHECK(v.final_state.exposed() == pd.c);
            if (j == window) {
                if (is_short) {
                    CHECK(seq.moves.size() <= 8);
                } else {
                    CHECK(static_cast<int>(seq.moves.size()) <= 3 * g.order() + 1);
                    // Rotations stay on P1 + (a, d) and P1 + (a, b), (b, c), (c, d).
                    auto allowed = cycle_edge_set(pd.p1);
                    for (Edge e : {Edge::make(pd.a, pd.d), Edge::make(pd.a, pd.b), Edge::make(pd.b, pd.c),
                                   Edge::make(pd.c, pd.d)}) {
                        allowed.insert(e);
                    }
                    Placement cur = p;
                    for (const auto& m : seq.moves) {
                        cur.apply(m);
                        CHECK(allowed.count(cur.piece(m.label)));
                    }
                }
            }
        }
    }
    CHECK(short_cases > 0);
    CHECK(long_cases > 0);
}

TEST_CASE("pentagon pairs against the oracle") {
    Graph g = generate(Family::pentagon);
    auto all = all_placements(g);
    for (const auto& p : all) {
        for (const auto& q : all) {
            auto r = plan_hamilton(g, p, q);
            CHECK(r.strategy == "hamilton");
            CHECK(verify_sequence(g, r.sequence, q).ok());
            CHECK(r.slides() >= *distance(g, p, q));
            if (p == q) CHECK(r.slides() == 0);
        }
    }
}

TEST_CASE("random pairs on locally connected graphs") {
    std::mt19937 rng(21);
    for (const auto& g : hamilton_corpus(rng, 5, 21, 3)) {
        auto matchings = all_near_perfect_matchings(g);
        for (int rep = 0; rep < 6; ++rep) {
            Placement p = test_support::random_placement(g, rng, matchings);
            Placement q = test_support::random_placement(g, rng, matchings);
            auto r = plan_hamilton(g, p, q);
            CHECK(verify_sequence(g, r.sequence, q).ok());
            const long n = p.n();
            CHECK(r.slides() <= 40 * n * n * n + 100);
            if (g.order() <= 9) CHECK(r.slides() >= *distance(g, p, q));
        }
    }
}

TEST_CASE("triangle and refusals") {
    Graph tri = generate(Family::triangle);
    auto all = all_placements(tri);
    for (const auto& p : all) {
        for (const auto& q : all) CHECK(verify_sequence(tri, plan_hamilton(tri, p, q).sequence, q).ok());
    }
    Graph sod = generate(Family::star_of_david);
    auto m = near_perfect_matching(sod, 0);
    REQUIRE(m);
    Placement ps = Placement::from_matching(sod, *m);
    CHECK_THROWS_AS(plan_hamilton(sod, ps, ps), PreconditionError);
    Graph ring = ring9_graph();
    Placement pr = Placement::from_matching(ring, *near_perfect_matching(ring, 0));
    CHECK_THROWS_AS(plan_hamilton(ring, pr, pr), PreconditionError);
}
