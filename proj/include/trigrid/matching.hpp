#pragma once

#include "trigrid/grid.hpp"

#include <optional>
#include <vector>

namespace trigrid {

// mate[v] is the partner of v, or -1 when v is exposed.
struct Matching {
    std::vector<VertexId> mate;

    Matching() = default;
    explicit Matching(int order) : mate(order, -1) {}

    int size() const;
    bool covers(VertexId v) const { return mate[v] >= 0; }
    bool contains(VertexId a, VertexId b) const { return mate[a] == b; }
    void add(VertexId a, VertexId b) { mate[a] = b, mate[b] = a; }
    std::vector<Edge> edges() const;
    std::vector<VertexId> exposed() const;
    bool valid_in(const Graph& g) const;
    bool operator==(const Matching&) const = default;
};

// Maximum matching of the subgraph induced by the vertices with active[v]
// set (all vertices when `active` is empty). Edmonds' blossom algorithm.
Matching maximum_matching(const Graph& g, const std::vector<char>& active = {});

// Perfect matching of g minus `removed`, if one exists.
std::optional<Matching> perfect_matching(const Graph& g, const std::vector<VertexId>& removed);

// Matching of size n exposing exactly `expose`.
std::optional<Matching> near_perfect_matching(const Graph& g, VertexId expose);

bool is_factor_critical(const Graph& g);

// G - sub has a perfect matching.
bool is_central(const Graph& g, const std::vector<VertexId>& sub);

// Even path from the vertex exposed by m to `to`, alternating non-matching
// and matching edges, read off M xor M' for some M' exposing `to`. Returns the
// vertex sequence (a single vertex when `to` is already exposed).
std::vector<VertexId> alternating_path_to(const Graph& g, const Matching& m, VertexId to);

// Flip m along an even alternating path starting at its exposed vertex.
void flip_path(Matching& m, const std::vector<VertexId>& path);

// Odd cycle through e = (u, x), x exposed by m, alternating for m except at x.
// The vertex list starts at x and ends at u. With `minimize`, the shortest
// such cycle is returned (exhaustive search).
std::vector<VertexId> odd_alternating_cycle_through(const Graph& g, const Matching& m, Edge e, bool minimize = false);

// Shortest simple path from `from` to `to` whose edges alternate, starting
// with a non-matching edge and ending with a matching edge, avoiding the
// vertices flagged in `blocked`. Depth-first with iterative deepening.
std::optional<std::vector<VertexId>> shortest_alternating_path(const Graph& g, const Matching& m, VertexId from,
                                                               VertexId to, const std::vector<char>& blocked = {});

} // namespace trigrid
