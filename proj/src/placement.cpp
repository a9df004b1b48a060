#include "trigrid/placement.hpp"

#include "trigrid/error.hpp"

#include <algorithm>
#include <cstdlib>

namespace trigrid {

Placement Placement::from_pieces(const Graph& g, std::vector<Edge> pieces) {
    if (g.order() != 2 * static_cast<int>(pieces.size()) + 1) {
        throw PreconditionError("placement needs exactly " + std::to_string(g.n()) + " pieces");
    }
    Placement p;
    p.owner_.assign(g.order(), -1);
    for (int label = 0; label < static_cast<int>(pieces.size()); ++label) {
        Edge e = Edge::make(pieces[label].u, pieces[label].v);
        if (!g.adjacent(e.u, e.v)) {
            throw PreconditionError("piece " + std::to_string(label + 1) + " is not on an edge");
        }
        if (p.owner_[e.u] >= 0 || p.owner_[e.v] >= 0) {
            throw PreconditionError("piece " + std::to_string(label + 1) + " overlaps another piece");
        }
        p.owner_[e.u] = p.owner_[e.v] = label;
        p.pieces_.push_back(e);
    }
    for (VertexId v = 0; v < g.order(); ++v) {
        if (p.owner_[v] < 0) p.exposed_ = v;
    }
    return p;
}

Placement Placement::from_matching(const Graph& g, const Matching& m) { return from_pieces(g, m.edges()); }

Matching Placement::matching() const {
    Matching m(static_cast<int>(owner_.size()));
    for (const auto& e : pieces_) m.add(e.u, e.v);
    return m;
}

void Placement::apply(const SlideMove& m) {
    Edge old = pieces_[m.label];
    VertexId freed = old.other(m.kept);
    pieces_[m.label] = Edge::make(m.kept, m.dest);
    owner_[freed] = -1;
    owner_[m.dest] = m.label;
    exposed_ = freed;
}

std::string Placement::key(const Graph& g) const {
    std::string k(2 * pieces_.size(), '\0');
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        int id = g.edge_index(pieces_[i].u, pieces_[i].v);
        k[2 * i] = static_cast<char>(id & 0xff);
        k[2 * i + 1] = static_cast<char>(id >> 8);
    }
    return k;
}

bool is_legal(const Graph& g, const Placement& p, const SlideMove& m) {
    if (m.label < 0 || m.label >= p.n()) return false;
    if (m.dest != p.exposed()) return false;
    if (!p.piece(m.label).has(m.kept)) return false;
    return g.adjacent(m.kept, m.dest);
}

Placement slide(const Graph& g, const Placement& p, const SlideMove& m) {
    if (!is_legal(g, p, m)) {
        throw PreconditionError("illegal slide: piece " + std::to_string(m.label + 1) + " keeping " +
                                std::to_string(m.kept + 1) + " onto " + std::to_string(m.dest + 1));
    }
    Placement out = p;
    out.apply(m);
    return out;
}

std::vector<SlideMove> legal_moves(const Graph& g, const Placement& p) {
    std::vector<SlideMove> out;
    VertexId x = p.exposed();
    for (VertexId v : g.neighbors(x)) {
        int label = p.owner(v);
        if (label >= 0) out.push_back({label, v, x});
    }
    return out;
}

SlideMove reverse_move(const Placement& before, const SlideMove& m) {
    return {m.label, m.kept, before.piece(m.label).other(m.kept)};
}

std::vector<SlideMove> invert(const Placement& start, const std::vector<SlideMove>& moves) {
    std::vector<SlideMove> out;
    out.reserve(moves.size());
    Placement cur = start;
    for (const auto& m : moves) {
        out.push_back(reverse_move(cur, m));
        cur.apply(m);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

VerifyReport verify_sequence(const Graph& g, const SlideSequence& seq, const std::optional<Placement>& expected) {
    VerifyReport r;
    Placement cur = seq.start;
    for (std::size_t i = 0; i < seq.moves.size(); ++i) {
        if (!is_legal(g, cur, seq.moves[i])) {
            r.legal = false;
            r.failed_index = static_cast<int>(i);
            r.message = "move " + std::to_string(i + 1) + " is illegal";
            break;
        }
        cur.apply(seq.moves[i]);
        ++r.count;
    }
    r.final_state = cur;
    if (expected) {
        r.matches_expected = r.legal && cur == *expected;
        if (r.legal && !r.matches_expected) r.message = "final placement differs from the target";
    }
    return r;
}

void Walker::slide(const SlideMove& m) {
    if (!is_legal(*g_, cur_, m)) {
        throw InvariantError("planner produced an illegal slide of piece " + std::to_string(m.label + 1));
    }
    cur_.apply(m);
    moves_.push_back(m);
}

void Walker::slide_keeping(VertexId kept) {
    int label = cur_.owner(kept);
    if (label < 0) throw InvariantError("no piece covers vertex " + std::to_string(kept + 1));
    slide({label, kept, cur_.exposed()});
}

void Walker::play(const std::vector<SlideMove>& moves) {
    for (const auto& m : moves) slide(m);
}

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

int position_of(const std::vector<VertexId>& cycle, VertexId v) {
    auto it = std::find(cycle.begin(), cycle.end(), v);
    return it == cycle.end() ? -1 : static_cast<int>(it - cycle.begin());
}

} // namespace

CyclePhase cycle_phase(const Placement& p, const std::vector<VertexId>& cycle) {
    const int len = static_cast<int>(cycle.size());
    if (len % 2 == 0) throw PreconditionError("rotation cycle must be odd");
    CyclePhase ph{position_of(cycle, p.exposed()), {}};
    if (ph.exposed_pos < 0) throw PreconditionError("exposed vertex is not on the cycle");
    for (int i = 1; i < len; i += 2) {
        VertexId a = cycle[mod(ph.exposed_pos + i, len)];
        VertexId b = cycle[mod(ph.exposed_pos + i + 1, len)];
        int label = p.owner(a);
        if (label < 0 || p.owner(b) != label) throw PreconditionError("placement is not aligned with the cycle");
        ph.labels.push_back(label);
    }
    return ph;
}

bool is_aligned(const Placement& p, const std::vector<VertexId>& cycle) {
    try {
        cycle_phase(p, cycle);
        return true;
    } catch (const PreconditionError&) {
        return false;
    }
}

void rotate_steps(Walker& w, const std::vector<VertexId>& cycle, int steps) {
    const int len = static_cast<int>(cycle.size());
    for (int s = 0; s < std::abs(steps); ++s) {
        int e = position_of(cycle, w.state().exposed());
        if (e < 0) throw InvariantError("rotation lost the exposed vertex");
        w.slide_keeping(cycle[mod(e + (steps > 0 ? 1 : -1), len)]);
    }
}

int steps_to_expose(const Placement& p, const std::vector<VertexId>& cycle, VertexId target) {
    const int len = static_cast<int>(cycle.size());
    const int k = len / 2;
    int e = cycle_phase(p, cycle).exposed_pos;
    int t = position_of(cycle, target);
    if (t < 0) throw PreconditionError("target vertex is not on the cycle");
    // 2 (k + 1) = 1 modulo 2k + 1.
    int s = mod((t - e) * (k + 1), len);
    return s > k ? s - len : s;
}

void rotate_to_expose(Walker& w, const std::vector<VertexId>& cycle, VertexId target) {
    rotate_steps(w, cycle, steps_to_expose(w.state(), cycle, target));
}

std::optional<int> steps_to_state(const Placement& p, const Placement& target, const std::vector<VertexId>& cycle) {
    const int len = static_cast<int>(cycle.size());
    const int k = len / 2;
    CyclePhase from = cycle_phase(p, cycle);
    CyclePhase to = cycle_phase(target, cycle);
    if (k == 0) return 0;
    auto it = std::find(from.labels.begin(), from.labels.end(), to.labels[0]);
    if (it == from.labels.end()) return std::nullopt;
    int shift = static_cast<int>(it - from.labels.begin());
    for (int i = 0; i < k; ++i) {
        if (from.labels[(shift + i) % k] != to.labels[i]) return std::nullopt;
    }
    // A forward step moves the exposed vertex by +2 and the label phase by +1.
    const int period = k * len;
    int e_steps = mod((to.exposed_pos - from.exposed_pos) * (k + 1), len);
    for (int t = 0; t < period; ++t) {
        if (t % len == e_steps && t % k == shift) return t > period / 2 ? t - period : t;
    }
    throw InvariantError("no rotation phase found");
}

void rotate_to_state(Walker& w, const std::vector<VertexId>& cycle, const Placement& target) {
    auto steps = steps_to_state(w.state(), target, cycle);
    if (!steps) throw PreconditionError("target has a different cyclic label order");
    rotate_steps(w, cycle, *steps);
}

int steps_to_cover(const Placement& p, const std::vector<VertexId>& cycle, int label, Edge e,
                   std::optional<VertexId> exposed) {
    const int len = static_cast<int>(cycle.size());
    const int k = len / 2;
    CyclePhase ph = cycle_phase(p, cycle);
    auto it = std::find(ph.labels.begin(), ph.labels.end(), label);
    if (it == ph.labels.end()) throw PreconditionError("label is not on the cycle");
    const int lambda = static_cast<int>(it - ph.labels.begin());
    const int period = k * len;
    int best = 0;
    bool found = false;
    for (int t = -period / 2; t <= period / 2; ++t) {
        if (found && std::abs(t) >= std::abs(best)) continue;
        int start = ph.exposed_pos + 2 * t;
        int slot = mod(lambda - t, k);
        Edge at = Edge::make(cycle[mod(start + 1 + 2 * slot, len)], cycle[mod(start + 2 + 2 * slot, len)]);
        if (at == e && (!exposed || cycle[mod(start, len)] == *exposed)) best = t, found = true;
    }
    if (!found) throw PreconditionError("edge is not a slot of the cycle for that exposed vertex");
    return best;
}

void rotate_to_cover(Walker& w, const std::vector<VertexId>& cycle, int label, Edge e,
                     std::optional<VertexId> exposed) {
    rotate_steps(w, cycle, steps_to_cover(w.state(), cycle, label, e, exposed));
}

std::vector<Edge> rotation_closed_form(const std::vector<VertexId>& cycle, int j, int h) {
    const int len = static_cast<int>(cycle.size());
    const int k = len / 2;
    int r = mod(j - h, len);
    if (r % 2) throw PreconditionError("(j - h) must be even modulo the cycle length");
    auto at = [&](int offset) { return cycle[mod(h - 1 + offset, len)]; };
    std::vector<Edge> pieces;
    for (int i = 1; i <= k; ++i) {
        if (2 * i - 1 < r) {
            pieces.push_back(Edge::make(at(2 * i - 2), at(2 * i - 1)));
        } else {
            pieces.push_back(Edge::make(at(2 * i - 1), at(2 * i)));
        }
    }
    return pieces;
}

namespace {

void play_path(Walker& w, const std::vector<VertexId>& path) {
    for (std::size_t i = 1; i + 1 < path.size(); i += 2) w.slide_keeping(path[i]);
    if (w.state().exposed() != path.back()) throw InvariantError("exposure path ended at the wrong vertex");
}

} // namespace

void expose(Walker& w, VertexId v) {
    if (w.state().exposed() == v) return;
    play_path(w, alternating_path_to(w.graph(), w.state().matching(), v));
}

void expose_within(Walker& w, const SubGraph& sub, VertexId v) {
    const Placement& p = w.state();
    if (p.exposed() == v) return;
    if (!sub.contains(v) || !sub.contains(p.exposed())) throw PreconditionError("vertex outside the subgraph");
    Matching local(sub.graph.order());
    for (VertexId a = 0; a < sub.graph.order(); ++a) {
        int label = p.owner(sub.global[a]);
        if (label < 0) continue;
        VertexId b = sub.local[p.piece(label).other(sub.global[a])];
        if (b < 0 || !sub.graph.adjacent(a, b)) throw PreconditionError("piece leaves the subgraph");
        local.mate[a] = b;
    }
    auto path = alternating_path_to(sub.graph, local, sub.local[v]);
    for (auto& x : path) x = sub.global[x];
    play_path(w, path);
}

} // namespace trigrid
