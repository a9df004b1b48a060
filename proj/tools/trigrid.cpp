#include "render.hpp"

#include "trigrid/ear_planner.hpp"
#include "trigrid/error.hpp"
#include "trigrid/hc_planner.hpp"
#include "trigrid/io.hpp"
#include "trigrid/log.hpp"
#include "trigrid/matching.hpp"
#include "trigrid/oracle.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace trigrid;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitParse = 3;
constexpr int kExitInvariant = 4;

Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

std::string yes(bool b) { return b ? "yes" : "no"; }

// Compact random point set: growth favours sites with many present
// neighbours.
std::vector<LatticePoint> random_points(int size, std::mt19937_64& rng) {
    static const LatticePoint dirs[] = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
    std::vector<LatticePoint> pts{{0, 0}};
    std::set<LatticePoint> present{{0, 0}};
    while (static_cast<int>(pts.size()) < size) {
        std::set<LatticePoint> frontier;
        for (auto p : pts) {
            for (auto d : dirs) {
                LatticePoint q{p.x + d.x, p.y + d.y};
                if (!present.count(q)) frontier.insert(q);
            }
        }
        std::vector<LatticePoint> cands(frontier.begin(), frontier.end());
        std::vector<double> weights;
        for (auto q : cands) {
            int nb = 0;
            for (auto d : dirs) nb += static_cast<int>(present.count({q.x + d.x, q.y + d.y}));
            weights.push_back(static_cast<double>(nb * nb * nb));
        }
        std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
        auto q = cands[pick(rng)];
        present.insert(q);
        pts.push_back(q);
    }
    return pts;
}

// Random exposed vertex, random walk of slides, shuffled labels.
Placement random_placement(const Graph& g, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 4 * g.order(); ++attempt) {
        VertexId x = std::uniform_int_distribution<VertexId>(0, g.order() - 1)(rng);
        auto m = near_perfect_matching(g, x);
        if (!m) continue;
        Placement p = Placement::from_matching(g, *m);
        for (int i = 0; i < 10 * g.order(); ++i) {
            auto moves = legal_moves(g, p);
            if (moves.empty()) break;
            p.apply(moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)]);
        }
        auto pieces = p.pieces();
        std::shuffle(pieces.begin(), pieces.end(), rng);
        return Placement::from_pieces(g, pieces);
    }
    throw PreconditionError("graph has no nearly perfect matching");
}

int cmd_gen(const std::string& what, const std::string& graph_file, int n, int m, int radius, int size,
            std::uint64_t seed, const std::string& out) {
    std::mt19937_64 rng(seed);
    if (what == "placement") {
        if (graph_file.empty()) throw PreconditionError("gen placement needs a graph file");
        Graph g = load_graph(graph_file);
        write_file(out, format_placement(random_placement(g, rng)));
        return 0;
    }
    if (what == "random") {
        if (size < 1 || size % 2 == 0) throw PreconditionError("--size must be a positive odd number");
        write_file(out, format_graph(Graph::from_points(random_points(size, rng))));
        return 0;
    }
    auto family = family_from_name(what);
    if (!family) throw PreconditionError("unknown family '" + what + "'");
    GenerateParams params;
    params.n = n;
    params.m = m;
    params.radius = radius;
    write_file(out, format_graph(generate(*family, params)));
    return 0;
}

int cmd_check(const std::string& graph_file, const std::string& out) {
    Graph g = load_graph(graph_file);
    std::ostringstream s;
    const bool two = is_two_connected(g);
    const bool fc = is_factor_critical(g);
    const bool lc = is_locally_connected(g);
    const bool sod = is_star_of_david(g);
    auto deg6 = degree6_vertices(g);
    s << "vertices " << g.order() << '\n';
    s << "edges " << g.size() << '\n';
    s << "lattice " << yes(g.is_lattice()) << '\n';
    s << "connected " << yes(is_connected(g)) << '\n';
    s << "two_connected " << yes(two) << '\n';
    s << "factor_critical " << yes(fc) << '\n';
    s << "locally_connected " << yes(lc) << '\n';
    s << "degree6";
    if (deg6.empty()) s << " none";
    for (VertexId v : deg6) s << ' ' << v + 1;
    s << '\n';
    s << "star_of_david " << yes(sod) << '\n';
    if (g.is_lattice()) s << "holes " << g.holes().size() << '\n';
    const bool hamilton = lc && !sod && g.order() >= 3;
    const bool ear_sufficient = two && fc && !deg6.empty();
    bool ear = ear_sufficient;
    if (!ear && two && fc) ear = find_admissible(g).has_value();
    s << "hamilton_planner " << (hamilton ? "applies (locally connected, not the Star of David)" : "no") << '\n';
    s << "ear_planner "
      << (ear_sufficient ? "applies (2-connected, factor-critical, degree-6 vertex)"
                         : ear ? "applies (2-connected, factor-critical, admissible core found)" : "no")
      << '\n';
    if (!hamilton && !ear) s << "advice planners refuse this graph\n";
    write_file(out, s.str());
    return 0;
}

PlanReport run_plan(const Graph& g, const Placement& p, const Placement& q, const std::string& strategy,
                    std::size_t budget) {
    std::string chosen = strategy;
    if (chosen == "auto") chosen = is_locally_connected(g) && !is_star_of_david(g) ? "hamilton" : "ear";
    TRIGRID_LOG(1, "strategy " << chosen);
    if (chosen == "hamilton") {
        HamiltonPlanOptions opt;
        opt.search_budget = budget;
        return plan_hamilton(g, p, q, opt);
    }
    return plan_ear(g, p, q);
}

int cmd_plan(const std::string& graph_file, const std::string& start_file, const std::string& target_file,
             const std::string& strategy, std::size_t budget, const std::string& out) {
    Graph g = load_graph(graph_file);
    Placement p = parse_placement(g, read_file(start_file));
    Placement q = parse_placement(g, read_file(target_file));
    if (p.n() != q.n()) throw PreconditionError("start and target have different piece counts");
    PlanReport r = run_plan(g, p, q, strategy, budget);
    for (const auto& line : r.trace) TRIGRID_LOG(1, line);
    auto v = verify_sequence(g, r.sequence, q);
    if (!v.ok()) throw InvariantError("plan failed verification: " + v.message);
    write_file(out, format_plan(r));
    std::cerr << "strategy " << r.strategy << ", " << r.slides() << " slides, verified\n";
    return 0;
}

int cmd_verify(const std::string& graph_file, const std::string& plan_file, const std::string& target_file) {
    Graph g = load_graph(graph_file);
    PlanFile plan = parse_plan(g, read_file(plan_file));
    std::optional<Placement> q;
    if (!target_file.empty()) q = parse_placement(g, read_file(target_file));
    auto v = verify_sequence(g, plan.sequence, q);
    if (!v.legal) {
        std::cout << "illegal move " << v.failed_index + 1 << ": " << v.message << '\n';
        return kExitVerifyFailed;
    }
    if (!v.matches_expected) {
        std::cout << "legal, " << v.count << " slides, final placement differs from the target\n";
        return kExitVerifyFailed;
    }
    std::cout << "ok " << v.count << " slides" << (q ? ", target reached" : "") << '\n';
    return 0;
}

int cmd_oracle(const std::string& graph_file, const std::string& start_file, std::size_t budget,
               const std::string& out) {
    Graph g = load_graph(graph_file);
    const int components = component_count(g, budget);
    if (start_file.empty()) {
        std::ostringstream s;
        s << "placements " << placement_count(g) << '\n';
        s << "components " << components << '\n';
        s << "reconfigurable " << yes(components == 1) << '\n';
        write_file(out, s.str());
        return 0;
    }
    Placement p = parse_placement(g, read_file(start_file));
    write_file(out, format_component_csv(g, bfs_component(g, p, budget), components));
    return 0;
}

int cmd_render(const std::string& graph_file, const std::string& input, const std::string& format,
               const std::string& out) {
    if (format != "svg") throw PreconditionError("only svg output is supported");
    Graph g = load_graph(graph_file);
    if (input.empty()) {
        write_file(out, render_svg(g));
        return 0;
    }
    const std::string text = read_file(input);
    std::istringstream in(text);
    std::string first;
    for (std::string line; std::getline(in, line);) {
        std::istringstream ls(line);
        if ((ls >> first) && first[0] != '#') break;
        first.clear();
    }
    if (first != "strategy" && first != "start") {
        write_file(out, render_svg(g, parse_placement(g, text)));
        return 0;
    }
    SlideSequence seq = first == "strategy" ? parse_plan(g, text).sequence : parse_sequence(g, text);
    if (out == "-") throw PreconditionError("plans render one file per frame; pass --out");
    std::filesystem::path base(out);
    if (base.has_extension()) base.replace_extension();
    if (base.has_parent_path()) std::filesystem::create_directories(base.parent_path());
    Placement cur = seq.start;
    auto frame = [&](std::size_t i, const std::string& caption) {
        char num[16];
        std::snprintf(num, sizeof num, "-%04zu.svg", i);
        write_file(base.string() + num, render_svg(g, cur, caption));
    };
    frame(0, "start");
    for (std::size_t i = 0; i < seq.moves.size(); ++i) {
        cur = slide(g, cur, seq.moves[i]);
        frame(i + 1, "slide " + std::to_string(i + 1) + ": " + format_move(seq.moves[i]));
    }
    std::cerr << seq.moves.size() + 1 << " frames\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Plan and verify slides of labeled nearly perfect matchings on triangular grid graphs"};
    app.require_subcommand(1);

    std::string strategy = "auto", out = "-", format = "svg";
    std::uint64_t seed = 1;
    std::size_t budget = kDefaultStateBudget;

    std::string gen_what, gen_graph;
    int gen_n = 4, gen_m = 2, gen_radius = 2, gen_size = 11;
    auto* gen = app.add_subcommand("gen", "Write a named graph, a random graph or a random placement");
    gen->add_option("what", gen_what, "family name, 'random' or 'placement'")->required();
    gen->add_option("graph", gen_graph, "graph file (for 'placement')");
    gen->add_option("--n", gen_n, "family parameter n");
    gen->add_option("--m", gen_m, "family parameter m");
    gen->add_option("--radius", gen_radius, "hexagon radius for hex_with_hole");
    gen->add_option("--size", gen_size, "vertex count for 'random'");
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--out", out, "output file ('-' for stdout)");

    std::string graph_file;
    auto* check = app.add_subcommand("check", "Report structural properties and applicable planners");
    check->add_option("graph", graph_file)->required();
    check->add_option("--out", out);

    std::string start_file, target_file;
    auto* plan = app.add_subcommand("plan", "Plan slides from a start to a target placement");
    plan->add_option("graph", graph_file)->required();
    plan->add_option("start", start_file)->required();
    plan->add_option("target", target_file)->required();
    plan->add_option("--strategy", strategy, "ear, hamilton or auto")
        ->check(CLI::IsMember({"ear", "hamilton", "auto"}));
    plan->add_option("--budget-states", budget, "Hamilton search node budget");
    plan->add_option("--out", out);

    std::string plan_file;
    auto* verify = app.add_subcommand("verify", "Replay a plan and check every slide");
    verify->add_option("graph", graph_file)->required();
    verify->add_option("plan", plan_file)->required();
    verify->add_option("--target", target_file, "placement the plan must reach");

    auto* oracle = app.add_subcommand("oracle", "Brute-force state space summary or distance table");
    oracle->add_option("graph", graph_file)->required();
    oracle->add_option("start", start_file, "placement whose component is exported as CSV");
    oracle->add_option("--budget-states", budget, "state budget");
    oracle->add_option("--out", out);

    std::string input;
    auto* render = app.add_subcommand("render", "Draw a graph, placement or plan as SVG");
    render->add_option("graph", graph_file)->required();
    render->add_option("input", input, "placement, sequence or plan file");
    render->add_option("--format", format)->check(CLI::IsMember({"svg"}));
    render->add_option("--out", out, "output file; plans write <out>-NNNN.svg frames");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitPrecondition;
    }

    try {
        if (*gen) return cmd_gen(gen_what, gen_graph, gen_n, gen_m, gen_radius, gen_size, seed, out);
        if (*check) return cmd_check(graph_file, out);
        if (*plan) return cmd_plan(graph_file, start_file, target_file, strategy, budget, out);
        if (*verify) return cmd_verify(graph_file, plan_file, target_file);
        if (*oracle) return cmd_oracle(graph_file, start_file, budget, out);
        if (*render) return cmd_render(graph_file, input, format, out);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const PreconditionError& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const BudgetExceeded& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const InvariantError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInvariant;
    }
    return kExitInvariant;
}
