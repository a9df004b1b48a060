#include "trigrid/ear_planner.hpp"
#include "trigrid/error.hpp"
#include "trigrid/hamilton.hpp"
#include "trigrid/hc_planner.hpp"
#include "trigrid/io.hpp"
#include "trigrid/matching.hpp"
#include "trigrid/oracle.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace trigrid;

namespace {

std::pair<int, int> edge_tuple(Edge e) { return {e.u, e.v}; }

std::vector<Edge> to_edges(const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Edge> out;
    for (auto [u, v] : pairs) out.push_back(Edge::make(u, v));
    return out;
}

PlanReport plan(const Graph& g, const Placement& p, const Placement& q, const std::string& strategy,
                std::size_t search_budget) {
    std::string s = strategy;
    if (s == "auto") s = is_locally_connected(g) && !is_star_of_david(g) ? "hamilton" : "ear";
    if (s == "hamilton") {
        HamiltonPlanOptions opt;
        opt.search_budget = search_budget;
        return plan_hamilton(g, p, q, opt);
    }
    if (s == "ear") return plan_ear(g, p, q);
    throw PreconditionError("unknown strategy " + strategy);
}

} // namespace

PYBIND11_MODULE(_trigrid, m) {
    m.doc() = "Sliding dominoes on triangular grid graphs. Vertex ids and labels are 0-based.";

    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def_static(
            "from_points",
            [](const std::vector<std::pair<int, int>>& pts) {
                std::vector<LatticePoint> lp;
                for (auto [x, y] : pts) lp.push_back({x, y});
                return Graph::from_points(lp);
            },
            py::arg("points"))
        .def_static(
            "from_edges", [](int order, const std::vector<std::pair<int, int>>& e) { return Graph::from_edges(order, to_edges(e)); },
            py::arg("order"), py::arg("edges"))
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def_property_readonly("n", &Graph::n)
        .def_property_readonly("is_lattice", &Graph::is_lattice)
        .def_property_readonly("points",
                               [](const Graph& g) {
                                   std::vector<std::pair<int, int>> out;
                                   for (auto p : g.points()) out.push_back({p.x, p.y});
                                   return out;
                               })
        .def_property_readonly("edges",
                               [](const Graph& g) {
                                   std::vector<std::pair<int, int>> out;
                                   for (auto e : g.edges()) out.push_back(edge_tuple(e));
                                   return out;
                               })
        .def("neighbors", [](const Graph& g, VertexId v) { return std::vector<VertexId>(g.neighbors(v).begin(), g.neighbors(v).end()); })
        .def("adjacent", &Graph::adjacent)
        .def("__str__", &format_graph);

    py::class_<SlideMove>(m, "SlideMove")
        .def(py::init<int, VertexId, VertexId>(), py::arg("label"), py::arg("kept"), py::arg("dest"))
        .def_readonly("label", &SlideMove::label)
        .def_readonly("kept", &SlideMove::kept)
        .def_readonly("dest", &SlideMove::dest)
        .def(py::self == py::self)
        .def("__repr__", [](const SlideMove& s) {
            return "SlideMove(" + std::to_string(s.label) + ", " + std::to_string(s.kept) + ", " + std::to_string(s.dest) + ")";
        });

    py::class_<Placement>(m, "Placement")
        .def_static(
            "from_pieces",
            [](const Graph& g, const std::vector<std::pair<int, int>>& pieces) {
                return Placement::from_pieces(g, to_edges(pieces));
            },
            py::arg("graph"), py::arg("pieces"))
        .def_static(
            "exposing",
            [](const Graph& g, VertexId v) {
                auto mt = near_perfect_matching(g, v);
                if (!mt) throw PreconditionError("no nearly perfect matching exposes that vertex");
                return Placement::from_matching(g, *mt);
            },
            py::arg("graph"), py::arg("vertex"))
        .def_property_readonly("pieces",
                               [](const Placement& p) {
                                   std::vector<std::pair<int, int>> out;
                                   for (auto e : p.pieces()) out.push_back(edge_tuple(e));
                                   return out;
                               })
        .def_property_readonly("exposed", &Placement::exposed)
        .def_property_readonly("n", &Placement::n)
        .def(py::self == py::self)
        .def("__str__", &format_placement);

    py::class_<PlanReport>(m, "PlanReport")
        .def_readonly("strategy", &PlanReport::strategy)
        .def_property_readonly("slides", &PlanReport::slides)
        .def_property_readonly("moves", [](const PlanReport& r) { return r.sequence.moves; })
        .def_readonly("bound", &PlanReport::bound)
        .def_readonly("trace", &PlanReport::trace)
        .def("__str__", &format_plan);

    m.def("generate", [](const std::string& family, int n, int mm, int radius) {
        auto f = family_from_name(family);
        if (!f) throw PreconditionError("unknown family " + family);
        GenerateParams params;
        params.n = n, params.m = mm, params.radius = radius;
        return generate(*f, params);
    }, py::arg("family"), py::arg("n") = 0, py::arg("m") = 0, py::arg("radius") = 2);

    m.def("parse_graph", &parse_graph, py::arg("text"));
    m.def("parse_placement", &parse_placement, py::arg("graph"), py::arg("text"));

    m.def("is_connected", &is_connected);
    m.def("is_two_connected", &is_two_connected);
    m.def("is_locally_connected", &is_locally_connected);
    m.def("is_star_of_david", &is_star_of_david);
    m.def("is_factor_critical", &is_factor_critical);
    m.def("degree6_vertices", &degree6_vertices);
    m.def(
        "find_hamilton", [](const Graph& g, std::size_t budget) { return find_hamilton(g, budget).order; },
        py::arg("graph"), py::arg("budget") = kDefaultHamiltonBudget);

    m.def("legal_moves", &legal_moves);
    m.def("slide", &slide, py::arg("graph"), py::arg("placement"), py::arg("move"));
    m.def(
        "verify",
        [](const Graph& g, const Placement& start, const std::vector<SlideMove>& moves, const Placement& target) {
            return verify_sequence(g, {start, moves}, target).ok();
        },
        py::arg("graph"), py::arg("start"), py::arg("moves"), py::arg("target"));

    m.def("plan", &plan, py::arg("graph"), py::arg("start"), py::arg("target"), py::arg("strategy") = "auto",
          py::arg("search_budget") = kDefaultHamiltonBudget);

    m.def(
        "distance", [](const Graph& g, const Placement& p, const Placement& q, std::size_t budget) { return distance(g, p, q, budget); },
        py::arg("graph"), py::arg("start"), py::arg("target"), py::arg("budget_states") = kDefaultStateBudget);
    m.def(
        "component_count", [](const Graph& g, std::size_t budget) { return component_count(g, budget); },
        py::arg("graph"), py::arg("budget_states") = kDefaultStateBudget);
    m.def(
        "is_reconfigurable", [](const Graph& g, std::size_t budget) { return is_reconfigurable_bruteforce(g, budget); },
        py::arg("graph"), py::arg("budget_states") = kDefaultStateBudget);
}
