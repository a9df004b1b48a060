#include "trigrid/io.hpp"

#include "trigrid/error.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

namespace trigrid {

namespace {

struct Record {
    int line;
    std::string tag;
    std::vector<std::string> args;
};

std::vector<Record> records(const std::string& text) {
    std::vector<Record> out;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::istringstream ls(raw);
        Record r{line, {}, {}};
        if (!(ls >> r.tag) || r.tag[0] == '#') continue;
        for (std::string tok; ls >> tok;) r.args.push_back(tok);
        out.push_back(std::move(r));
    }
    return out;
}

long long number(const Record& r, std::size_t i) {
    if (i >= r.args.size()) throw ParseError("'" + r.tag + "' needs more fields", r.line);
    const std::string& s = r.args[i];
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError("not an integer: '" + s + "'", r.line);
    return v;
}

void arity(const Record& r, std::size_t n) {
    if (r.args.size() != n) {
        throw ParseError("'" + r.tag + "' takes " + std::to_string(n) + " fields, got " + std::to_string(r.args.size()),
                         r.line);
    }
}

VertexId vertex(const Graph& g, const Record& r, std::size_t i) {
    long long v = number(r, i);
    if (v < 1 || v > g.order()) throw ParseError("vertex " + std::to_string(v) + " out of range", r.line);
    return static_cast<VertexId>(v - 1);
}

[[noreturn]] void unexpected(const Record& r) { throw ParseError("unexpected record '" + r.tag + "'", r.line); }

// Wraps library errors raised while building a parsed object.
template <class F>
auto build(int line, F f) {
    try {
        return f();
    } catch (const PreconditionError& e) {
        throw ParseError(e.what(), line);
    } catch (const InvariantError& e) {
        throw ParseError(e.what(), line);
    }
}

std::vector<Edge> pieces_from(const Graph& g, const std::vector<Record>& recs, std::size_t begin, std::size_t end) {
    std::map<int, Edge> by_label;
    for (std::size_t i = begin; i < end; ++i) {
        const Record& r = recs[i];
        arity(r, 3);
        long long label = number(r, 0);
        VertexId u = vertex(g, r, 1), v = vertex(g, r, 2);
        if (!g.adjacent(u, v)) throw ParseError("piece on a non-edge", r.line);
        if (!by_label.emplace(static_cast<int>(label), Edge::make(u, v)).second) {
            throw ParseError("label " + std::to_string(label) + " repeated", r.line);
        }
    }
    std::vector<Edge> pieces;
    int expect = 1;
    for (auto [label, e] : by_label) {
        if (label != expect++) throw ParseError("labels must be 1.." + std::to_string(by_label.size()), 0);
        pieces.push_back(e);
    }
    return pieces;
}

SlideMove move_from(const Graph& g, const Record& r) {
    arity(r, 3);
    long long label = number(r, 0);
    if (label < 1) throw ParseError("label must be positive", r.line);
    return {static_cast<int>(label - 1), vertex(g, r, 1), vertex(g, r, 2)};
}

int last_line(const std::vector<Record>& recs) { return recs.empty() ? 0 : recs.back().line; }

} // namespace

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    if (g.is_lattice()) {
        for (VertexId v = 0; v < g.order(); ++v) {
            out << "v " << v + 1 << ' ' << g.points()[v].x << ' ' << g.points()[v].y << '\n';
        }
    } else {
        for (VertexId v = 0; v < g.order(); ++v) out << "av " << v + 1 << '\n';
        for (const Edge& e : g.edges()) out << "ae " << e.u + 1 << ' ' << e.v + 1 << '\n';
    }
    return out.str();
}

Graph parse_graph(const std::string& text) {
    auto recs = records(text);
    std::map<long long, std::pair<LatticePoint, int>> points;
    std::set<long long> abstract;
    std::vector<std::pair<std::pair<long long, long long>, int>> edges;
    for (const auto& r : recs) {
        if (r.tag == "v") {
            arity(r, 3);
            long long id = number(r, 0);
            LatticePoint p{static_cast<int>(number(r, 1)), static_cast<int>(number(r, 2))};
            if (!points.emplace(id, std::make_pair(p, r.line)).second) throw ParseError("vertex id repeated", r.line);
        } else if (r.tag == "av") {
            arity(r, 1);
            if (!abstract.insert(number(r, 0)).second) throw ParseError("vertex id repeated", r.line);
        } else if (r.tag == "ae") {
            arity(r, 2);
            edges.push_back({{number(r, 0), number(r, 1)}, r.line});
        } else {
            unexpected(r);
        }
    }
    if (!points.empty() && (!abstract.empty() || !edges.empty())) {
        throw ParseError("lattice and abstract records are mixed", 0);
    }
    if (points.empty() && abstract.empty()) throw ParseError("no vertices", 0);
    if (!points.empty()) {
        std::vector<LatticePoint> pts;
        long long expect = 1;
        for (const auto& [id, pl] : points) {
            if (id != expect++) throw ParseError("vertex ids must be 1..|V| without gaps", pl.second);
            pts.push_back(pl.first);
        }
        for (std::size_t i = 1; i < pts.size(); ++i) {
            if (!(pts[i - 1] < pts[i])) {
                throw ParseError("vertex ids must follow lexicographic (x, y) order", points[i + 1].second);
            }
        }
        return build(0, [&] { return Graph::from_points(pts); });
    }
    long long expect = 1;
    for (long long id : abstract) {
        if (id != expect++) throw ParseError("vertex ids must be 1..|V| without gaps", 0);
    }
    const int order = static_cast<int>(abstract.size());
    std::vector<Edge> es;
    for (const auto& [uv, line] : edges) {
        auto [u, v] = uv;
        if (u < 1 || v < 1 || u > order || v > order || u == v) throw ParseError("bad edge", line);
        es.push_back(Edge::make(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1)));
    }
    return build(0, [&] { return Graph::from_edges(order, es); });
}

std::string format_placement(const Placement& p) {
    std::ostringstream out;
    for (int i = 0; i < p.n(); ++i) out << "p " << i + 1 << ' ' << p.piece(i).u + 1 << ' ' << p.piece(i).v + 1 << '\n';
    return out.str();
}

Placement parse_placement(const Graph& g, const std::string& text) {
    auto recs = records(text);
    for (const auto& r : recs) {
        if (r.tag != "p") unexpected(r);
    }
    auto pieces = pieces_from(g, recs, 0, recs.size());
    return build(last_line(recs), [&] { return Placement::from_pieces(g, pieces); });
}

std::string format_matching(const Matching& m) {
    std::ostringstream out;
    for (const Edge& e : m.edges()) out << "m " << e.u + 1 << ' ' << e.v + 1 << '\n';
    for (VertexId v : m.exposed()) out << "x " << v + 1 << '\n';
    return out.str();
}

Matching parse_matching(const Graph& g, const std::string& text) {
    Matching m(g.order());
    std::vector<std::pair<VertexId, int>> exposed;
    for (const auto& r : records(text)) {
        if (r.tag == "m") {
            arity(r, 2);
            VertexId u = vertex(g, r, 0), v = vertex(g, r, 1);
            if (!g.adjacent(u, v)) throw ParseError("matching uses a non-edge", r.line);
            if (m.covers(u) || m.covers(v)) throw ParseError("vertex matched twice", r.line);
            m.add(u, v);
        } else if (r.tag == "x") {
            arity(r, 1);
            exposed.push_back({vertex(g, r, 0), r.line});
        } else {
            unexpected(r);
        }
    }
    for (auto [v, line] : exposed) {
        if (m.covers(v)) throw ParseError("declared exposed vertex is matched", line);
    }
    if (m.size() != g.n()) throw ParseError("matching is not nearly perfect", 0);
    return m;
}

std::string format_move(const SlideMove& m) {
    return "s " + std::to_string(m.label + 1) + ' ' + std::to_string(m.kept + 1) + ' ' + std::to_string(m.dest + 1);
}

std::string format_sequence(const SlideSequence& s) {
    std::string out = "start\n" + format_placement(s.start);
    for (const auto& m : s.moves) out += format_move(m) + '\n';
    return out;
}

SlideSequence parse_sequence(const Graph& g, const std::string& text) {
    auto recs = records(text);
    if (recs.empty() || recs[0].tag != "start") throw ParseError("sequence must begin with 'start'", recs.empty() ? 0 : recs[0].line);
    std::size_t i = 1;
    while (i < recs.size() && recs[i].tag == "p") ++i;
    auto pieces = pieces_from(g, recs, 1, i);
    SlideSequence s;
    s.start = build(recs[0].line, [&] { return Placement::from_pieces(g, pieces); });
    for (; i < recs.size(); ++i) {
        if (recs[i].tag != "s") unexpected(recs[i]);
        s.moves.push_back(move_from(g, recs[i]));
    }
    return s;
}

std::string format_decomposition(const EarDecomposition& d) {
    std::ostringstream out;
    out << "base";
    for (VertexId v : d.base) out << ' ' << v + 1;
    out << '\n';
    for (const auto& ear : d.ears) {
        out << "ear";
        for (VertexId v : ear) out << ' ' << v + 1;
        out << '\n';
    }
    out << "kind " << core_kind_name(d.kind) << '\n';
    return out.str();
}

EarDecomposition parse_decomposition(const Graph& g, const std::string& text) {
    EarDecomposition d;
    bool have_base = false;
    for (const auto& r : records(text)) {
        std::vector<VertexId> vs;
        if (r.tag == "base" || r.tag == "ear") {
            for (std::size_t i = 0; i < r.args.size(); ++i) vs.push_back(vertex(g, r, i));
        }
        if (r.tag == "base") {
            if (have_base) throw ParseError("second base", r.line);
            d.base = vs;
            have_base = true;
        } else if (r.tag == "ear") {
            if (!have_base) throw ParseError("ear before base", r.line);
            d.ears.push_back(vs);
        } else if (r.tag == "kind") {
            arity(r, 1);
            auto k = core_kind_from_name(r.args[0]);
            if (!k) throw ParseError("unknown kind '" + r.args[0] + "'", r.line);
            d.kind = *k;
        } else {
            unexpected(r);
        }
    }
    if (!have_base) throw ParseError("missing base", 0);
    build(0, [&] {
        validate_decomposition(g, d);
        return 0;
    });
    return d;
}

std::string format_cycle(const HamiltonCycle& h) {
    std::string out = "h";
    for (VertexId v : h.order) out += ' ' + std::to_string(v + 1);
    return out + '\n';
}

HamiltonCycle parse_cycle(const Graph& g, const std::string& text) {
    auto recs = records(text);
    if (recs.size() != 1 || recs[0].tag != "h") throw ParseError("expected a single 'h' record", last_line(recs));
    HamiltonCycle h;
    for (std::size_t i = 0; i < recs[0].args.size(); ++i) h.order.push_back(vertex(g, recs[0], i));
    build(recs[0].line, [&] {
        validate_hamilton(g, h);
        return 0;
    });
    return h;
}

std::string format_plan(const PlanReport& r) {
    return "strategy " + r.strategy + "\nslides " + std::to_string(r.slides()) + '\n' + format_sequence(r.sequence);
}

PlanFile parse_plan(const Graph& g, const std::string& text) {
    auto recs = records(text);
    PlanFile out;
    long long slides = -1;
    std::size_t i = 0;
    for (; i < recs.size() && recs[i].tag != "start"; ++i) {
        const Record& r = recs[i];
        if (r.tag == "strategy") {
            arity(r, 1);
            out.strategy = r.args[0];
        } else if (r.tag == "slides") {
            arity(r, 1);
            slides = number(r, 0);
        } else {
            unexpected(r);
        }
    }
    if (out.strategy.empty()) throw ParseError("missing 'strategy'", 0);
    if (slides < 0) throw ParseError("missing 'slides'", 0);
    std::ostringstream rest;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    const int start_line = i < recs.size() ? recs[i].line : last_line(recs) + 1;
    while (std::getline(in, raw)) {
        // Keep line numbers aligned with the whole file.
        rest << (++line >= start_line ? raw : "") << '\n';
    }
    out.sequence = parse_sequence(g, rest.str());
    if (static_cast<long long>(out.sequence.moves.size()) != slides) {
        throw ParseError("slide count " + std::to_string(slides) + " does not match " +
                             std::to_string(out.sequence.moves.size()) + " moves",
                         0);
    }
    return out;
}

std::string state_text(const Placement& p) {
    std::string out;
    for (int i = 0; i < p.n(); ++i) {
        if (i) out += ';';
        out += std::to_string(p.piece(i).u + 1) + '-' + std::to_string(p.piece(i).v + 1);
    }
    return out;
}

std::string format_component_csv(const Graph& g, const Component& c, int components) {
    std::vector<std::pair<int, std::string>> rows;
    for (const auto& [key, dist] : c.distance) {
        std::string text;
        for (std::size_t i = 0; i + 1 < key.size(); i += 2) {
            int id = static_cast<unsigned char>(key[i]) | static_cast<unsigned char>(key[i + 1]) << 8;
            const Edge& e = g.edges()[id];
            if (i) text += ';';
            text += std::to_string(e.u + 1) + '-' + std::to_string(e.v + 1);
        }
        rows.push_back({dist, text});
    }
    std::sort(rows.begin(), rows.end());
    std::string out = "state_key,distance\n";
    for (const auto& [d, k] : rows) out += k + ',' + std::to_string(d) + '\n';
    out += "# components " + std::to_string(components) + " eccentricity " + std::to_string(c.eccentricity) + '\n';
    return out;
}

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PreconditionError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw PreconditionError("cannot write " + path);
    out << text;
}

} // namespace trigrid
