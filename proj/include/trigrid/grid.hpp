#pragma once

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace trigrid {

// Vertex ids are 0-based in memory and 1-based in every text format.
using VertexId = int;

// Axial coordinates on the triangular lattice. Two points are adjacent iff
// their difference is one of (+-1,0), (0,+-1), (1,-1), (-1,1).
struct LatticePoint {
    int x = 0;
    int y = 0;
    auto operator<=>(const LatticePoint&) const = default;
};

bool lattice_adjacent(LatticePoint a, LatticePoint b);

// Cartesian drawing position (x + y/2, y*sqrt(3)/2).
std::array<double, 2> cartesian(LatticePoint p);

struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    static Edge make(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }
    bool has(VertexId w) const { return u == w || v == w; }
    VertexId other(VertexId w) const { return w == u ? v : u; }
    auto operator<=>(const Edge&) const = default;
};

using Triangle = std::array<VertexId, 3>;

// A face boundary as a closed walk (first vertex not repeated at the end).
// Inner faces are walked anti-clockwise, the outer face clockwise.
struct Face {
    std::vector<VertexId> walk;
    bool outer = false;
};

class Graph {
public:
    Graph() = default;

    // Induced subgraph of the lattice on `points`. Ids follow lexicographic
    // (x, y) order. Throws PreconditionError on duplicates, an even number of
    // points, or a disconnected point set.
    static Graph from_points(std::vector<LatticePoint> points);

    // Abstract (non-lattice) graph. With `validate`, the graph must be
    // connected with an odd number of vertices.
    static Graph from_edges(int order, std::vector<Edge> edges, bool validate = true);

    int order() const { return static_cast<int>(adj_.size()); }
    int size() const { return static_cast<int>(edges_.size()); }
    // Number of pieces of a nearly perfect matching: order = 2n + 1.
    int n() const { return (order() - 1) / 2; }

    bool is_lattice() const { return lattice_; }
    const std::vector<LatticePoint>& points() const { return points_; }
    std::optional<VertexId> vertex_at(LatticePoint p) const;

    std::span<const VertexId> neighbors(VertexId v) const { return adj_[v]; }
    int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(VertexId a, VertexId b) const { return edge_index(a, b) >= 0; }
    int edge_index(VertexId a, VertexId b) const;
    const std::vector<Edge>& edges() const { return edges_; }

    // All 3-cliques; on lattice graphs these are exactly the triangle faces.
    const std::vector<Triangle>& triangles() const { return triangles_; }

    // Lattice graphs only: outer face first, then holes.
    const std::vector<Face>& boundary_cycles() const { return boundary_; }
    std::vector<Face> holes() const;
    // Lattice graphs only: edge lies on no boundary cycle.
    bool is_inner_edge(int edge) const { return inner_[edge]; }
    std::vector<int> inner_edges() const;

private:
    void index_edges();
    void compute_triangles();
    void compute_faces();

    bool lattice_ = false;
    std::vector<LatticePoint> points_;
    std::vector<std::vector<VertexId>> adj_;
    std::vector<Edge> edges_;
    std::vector<int> edge_id_;  // order x order, -1 if absent
    std::vector<Triangle> triangles_;
    std::vector<Face> boundary_;
    std::vector<bool> inner_;
};

// A subgraph given by an edge list, re-indexed as a standalone graph.
struct SubGraph {
    Graph graph;
    std::vector<VertexId> global;  // local id -> host id
    std::vector<int> local;        // host id -> local id, -1 if absent

    static SubGraph make(const Graph& host, const std::vector<Edge>& edges);
    bool contains(VertexId v) const { return v >= 0 && v < static_cast<int>(local.size()) && local[v] >= 0; }
};

bool is_connected(const Graph& g);
bool is_two_connected(const Graph& g);
bool is_locally_connected(const Graph& g);
// Lattice graphs only; abstract graphs are never the Star of David.
bool is_star_of_david(const Graph& g);
std::vector<VertexId> degree6_vertices(const Graph& g);

// Canonical representative of a point set under lattice translations,
// rotations and reflections.
std::vector<LatticePoint> canonical_form(std::vector<LatticePoint> points);

enum class Family { triangle, pentagon, hexagon, diamond_cycle, chord_cycle, star_of_david, hex_with_hole };

struct GenerateParams {
    int n = 0;
    int m = 0;
    int radius = 2;
    std::vector<LatticePoint> removed{{0, 0}, {1, 0}};
};

std::optional<Family> family_from_name(const std::string& name);
std::string family_name(Family f);

// Named instances. diamond_cycle(n) and chord_cycle(n, m) are abstract graphs
// that keep the 1..2n+1 cycle labelling (vertex i has id i-1).
Graph generate(Family family, const GenerateParams& params = {});

std::vector<LatticePoint> star_of_david_points();

} // namespace trigrid
