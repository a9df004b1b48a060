#pragma once

#include "trigrid/ear_planner.hpp"
#include "trigrid/ears.hpp"
#include "trigrid/hamilton.hpp"
#include "trigrid/oracle.hpp"
#include "trigrid/placement.hpp"

#include <string>
#include <vector>

namespace trigrid {

// Line-oriented text formats. Vertex ids and labels are 1-based; `#` starts
// a comment line. Parse functions throw ParseError with the line number.

// Lattice graphs: `v <id> <x> <y>`, ids 1..|V| in lexicographic (x, y)
// order. Abstract graphs: `av <id>` and `ae <u> <v>`.
std::string format_graph(const Graph& g);
Graph parse_graph(const std::string& text);

// `p <label> <u> <v>` per piece.
std::string format_placement(const Placement& p);
Placement parse_placement(const Graph& g, const std::string& text);

// `m <u> <v>` per edge, then `x <v>`.
std::string format_matching(const Matching& m);
Matching parse_matching(const Graph& g, const std::string& text);

// `s <label> <kept> <dest>`.
std::string format_move(const SlideMove& m);

// `start`, the start placement's `p` lines, then `s` lines.
std::string format_sequence(const SlideSequence& s);
SlideSequence parse_sequence(const Graph& g, const std::string& text);

// `base ...`, `ear ...` in order, `kind <name>`.
std::string format_decomposition(const EarDecomposition& d);
EarDecomposition parse_decomposition(const Graph& g, const std::string& text);

// `h <v1> ... <vk>` on one line.
std::string format_cycle(const HamiltonCycle& h);
HamiltonCycle parse_cycle(const Graph& g, const std::string& text);

// `strategy <name>`, `slides <count>`, then the sequence block.
struct PlanFile {
    std::string strategy;
    SlideSequence sequence;
};
std::string format_plan(const PlanReport& r);
PlanFile parse_plan(const Graph& g, const std::string& text);

// Readable state key: pieces in label order as `u-v`, joined by `;`.
std::string state_text(const Placement& p);
// `state_key,distance` rows sorted by distance then key, and a trailing
// `# components <c> eccentricity <e>` line.
std::string format_component_csv(const Graph& g, const Component& c, int components);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

} // namespace trigrid
