#pragma once

#include "trigrid/grid.hpp"
#include "trigrid/matching.hpp"

#include <optional>
#include <string>
#include <vector>

namespace trigrid {

// Labels are 0-based in memory and 1-based in text.
struct SlideMove {
    int label = 0;
    VertexId kept = 0;
    VertexId dest = 0;
    bool operator==(const SlideMove&) const = default;
};

// Labeled nearly perfect matching: piece `label` occupies pieces()[label].
class Placement {
public:
    Placement() = default;

    // Throws PreconditionError unless the pieces form a nearly perfect matching of g.
    static Placement from_pieces(const Graph& g, std::vector<Edge> pieces);
    // Labels follow the lexicographic order of the matching's edges.
    static Placement from_matching(const Graph& g, const Matching& m);

    int n() const { return static_cast<int>(pieces_.size()); }
    const std::vector<Edge>& pieces() const { return pieces_; }
    Edge piece(int label) const { return pieces_[label]; }
    VertexId exposed() const { return exposed_; }
    // Label of the piece covering v, or -1.
    int owner(VertexId v) const { return owner_[v]; }
    Matching matching() const;

    // Unchecked state update; see slide() for the checked version.
    void apply(const SlideMove& m);

    // Compact key: one byte pair per label holding its edge index.
    std::string key(const Graph& g) const;

    bool operator==(const Placement& o) const { return pieces_ == o.pieces_; }

private:
    std::vector<Edge> pieces_;
    std::vector<int> owner_;
    VertexId exposed_ = -1;
};

bool is_legal(const Graph& g, const Placement& p, const SlideMove& m);
// Throws PreconditionError on an illegal move.
Placement slide(const Graph& g, const Placement& p, const SlideMove& m);
std::vector<SlideMove> legal_moves(const Graph& g, const Placement& p);
// The move undoing `m` when applied right after it.
SlideMove reverse_move(const Placement& before, const SlideMove& m);

// Moves undoing `moves` (played from `start`), in order.
std::vector<SlideMove> invert(const Placement& start, const std::vector<SlideMove>& moves);

struct SlideSequence {
    Placement start;
    std::vector<SlideMove> moves;
};

struct VerifyReport {
    bool legal = true;
    int failed_index = -1;  // first illegal move
    std::string message;
    Placement final_state;
    int count = 0;
    bool matches_expected = true;
    bool ok() const { return legal && matches_expected; }
};

VerifyReport verify_sequence(const Graph& g, const SlideSequence& seq, const std::optional<Placement>& expected = {});

// Accumulates a checked move sequence from a start placement.
class Walker {
public:
    Walker(const Graph& g, Placement start) : g_(&g), start_(start), cur_(std::move(start)) {}

    const Graph& graph() const { return *g_; }
    const Placement& state() const { return cur_; }
    const Placement& start() const { return start_; }
    const std::vector<SlideMove>& moves() const { return moves_; }
    SlideSequence sequence() const { return {start_, moves_}; }

    void slide(const SlideMove& m);
    // Slide the piece holding `kept` so that it covers the exposed vertex.
    void slide_keeping(VertexId kept);
    void play(const std::vector<SlideMove>& moves);

private:
    const Graph* g_;
    Placement start_;
    Placement cur_;
    std::vector<SlideMove> moves_;
};

// An odd cycle given as a vertex list; consecutive entries (and last-first)
// are adjacent. p is aligned with it when the exposed vertex lies on it and
// the remaining cycle vertices are paired by pieces along the cycle.
bool is_aligned(const Placement& p, const std::vector<VertexId>& cycle);

// Index of the exposed vertex on the cycle and the label sitting right after
// it (forward direction). Throws PreconditionError when not aligned.
struct CyclePhase {
    int exposed_pos;
    std::vector<int> labels;  // labels in forward order starting after the exposed vertex
};
CyclePhase cycle_phase(const Placement& p, const std::vector<VertexId>& cycle);

// One forward step slides the piece right after the exposed vertex back onto
// it, moving the exposed vertex two positions forward; negative counts go
// backwards.
void rotate_steps(Walker& w, const std::vector<VertexId>& cycle, int steps);

// Fewest steps (at most k for a cycle with k pieces) exposing `target`.
int steps_to_expose(const Placement& p, const std::vector<VertexId>& cycle, VertexId target);
void rotate_to_expose(Walker& w, const std::vector<VertexId>& cycle, VertexId target);

// Fewest steps reaching `target`, which must be aligned with the cycle and
// carry the same cyclic label order; at most k*k + k.
std::optional<int> steps_to_state(const Placement& p, const Placement& target, const std::vector<VertexId>& cycle);
void rotate_to_state(Walker& w, const std::vector<VertexId>& cycle, const Placement& target);

// Fewest steps after which piece `label` covers the cycle edge `e`, and
// `exposed` (when given) is the exposed vertex.
int steps_to_cover(const Placement& p, const std::vector<VertexId>& cycle, int label, Edge e,
                   std::optional<VertexId> exposed = {});
void rotate_to_cover(Walker& w, const std::vector<VertexId>& cycle, int label, Edge e,
                     std::optional<VertexId> exposed = {});

// Closed form of the rotation state p_{j,h}: entry i is piece i + 1. Cycle
// positions j and h are 1-based and (j - h) mod (2k + 1) must be even; j is
// the exposed position and piece 1 starts at h or h + 1.
std::vector<Edge> rotation_closed_form(const std::vector<VertexId>& cycle, int j, int h);

// Expose v by flipping along an alternating path; |P|/2 moves.
void expose(Walker& w, VertexId v);
// Same inside a subgraph holding the exposed vertex; pieces covering the
// subgraph must be subgraph edges and stay inside it.
void expose_within(Walker& w, const SubGraph& sub, VertexId v);

} // namespace trigrid
