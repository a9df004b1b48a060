#pragma once

// Instance corpora shared by the unit tests and the acceptance runner.

#include "trigrid/grid.hpp"
#include "trigrid/placement.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

namespace test_support {

using trigrid::Graph;
using trigrid::LatticePoint;

inline const std::vector<LatticePoint>& directions() {
    static const std::vector<LatticePoint> d{{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
    return d;
}

// All connected lattice point sets of each size 1..max_size, one per
// symmetry class, grown layer by layer from canonical forms.
inline std::vector<std::vector<std::vector<LatticePoint>>> enumerate_animals(int max_size) {
    std::vector<std::vector<std::vector<LatticePoint>>> layers(max_size + 1);
    layers[1] = {{{0, 0}}};
    for (int size = 2; size <= max_size; ++size) {
        std::set<std::vector<LatticePoint>> seen;
        for (const auto& shape : layers[size - 1]) {
            std::set<LatticePoint> present(shape.begin(), shape.end());
            std::set<LatticePoint> frontier;
            for (auto p : shape) {
                for (auto d : directions()) {
                    LatticePoint q{p.x + d.x, p.y + d.y};
                    if (!present.count(q)) frontier.insert(q);
                }
            }
            for (auto q : frontier) {
                auto grown = shape;
                grown.push_back(q);
                seen.insert(trigrid::canonical_form(grown));
            }
        }
        layers[size].assign(seen.begin(), seen.end());
    }
    return layers;
}

// Random connected point set grown from the origin.
inline std::vector<LatticePoint> random_animal(std::mt19937& rng, int size) {
    std::vector<LatticePoint> pts{{0, 0}};
    std::set<LatticePoint> present{{0, 0}};
    while (static_cast<int>(pts.size()) < size) {
        auto base = pts[std::uniform_int_distribution<int>(0, static_cast<int>(pts.size()) - 1)(rng)];
        auto d = directions()[std::uniform_int_distribution<int>(0, 5)(rng)];
        LatticePoint q{base.x + d.x, base.y + d.y};
        if (present.insert(q).second) pts.push_back(q);
    }
    return pts;
}

// Random compact point set: growth prefers points with many present
// neighbours, which yields interior vertices and few cut vertices.
inline std::vector<LatticePoint> random_blob(std::mt19937& rng, int size) {
    std::vector<LatticePoint> pts{{0, 0}};
    std::set<LatticePoint> present{{0, 0}};
    while (static_cast<int>(pts.size()) < size) {
        std::vector<std::pair<int, LatticePoint>> cands;
        std::set<LatticePoint> frontier;
        for (auto p : pts) {
            for (auto d : directions()) {
                LatticePoint q{p.x + d.x, p.y + d.y};
                if (!present.count(q)) frontier.insert(q);
            }
        }
        for (auto q : frontier) {
            int nb = 0;
            for (auto d : directions()) nb += present.count({q.x + d.x, q.y + d.y});
            cands.push_back({nb, q});
        }
        std::vector<double> weights;
        for (auto& c : cands) weights.push_back(static_cast<double>(c.first * c.first * c.first));
        std::discrete_distribution<int> pick(weights.begin(), weights.end());
        auto q = cands[pick(rng)].second;
        present.insert(q);
        pts.push_back(q);
    }
    return pts;
}

// Small fixed corpus of lattice graphs for structural unit tests.
inline std::vector<Graph> lattice_corpus() {
    using trigrid::Family;
    std::vector<Graph> out{trigrid::generate(Family::triangle), trigrid::generate(Family::pentagon),
                           trigrid::generate(Family::hexagon), trigrid::generate(Family::star_of_david),
                           trigrid::generate(Family::hex_with_hole)};
    std::mt19937 rng(7);
    for (int size : {5, 7, 9, 11, 13, 15, 17, 19, 21}) {
        out.push_back(Graph::from_points(random_animal(rng, size)));
        out.push_back(Graph::from_points(random_blob(rng, size)));
    }
    return out;
}

inline trigrid::Placement random_placement(const Graph& g, std::mt19937& rng,
                                           const std::vector<std::vector<trigrid::Edge>>& matchings) {
    auto m = matchings[std::uniform_int_distribution<std::size_t>(0, matchings.size() - 1)(rng)];
    std::shuffle(m.begin(), m.end(), rng);
    return trigrid::Placement::from_pieces(g, m);
}

// Random placement reached by a random walk of slides, then relabeled.
inline trigrid::Placement random_walk_placement(const Graph& g, const trigrid::Placement& seed, std::mt19937& rng,
                                                int steps) {
    trigrid::Placement p = seed;
    for (int i = 0; i < steps; ++i) {
        auto moves = trigrid::legal_moves(g, p);
        p.apply(moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)]);
    }
    auto pieces = p.pieces();
    std::shuffle(pieces.begin(), pieces.end(), rng);
    return trigrid::Placement::from_pieces(g, pieces);
}

} // namespace test_support
