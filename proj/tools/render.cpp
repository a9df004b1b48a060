#include "render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

namespace trigrid {

namespace {

constexpr double kScale = 60;
constexpr double kMargin = 40;

const char* piece_colour(int label) {
    static const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
    return palette[label % 10];
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::vector<std::array<double, 2>> layout(const Graph& g) {
    std::vector<std::array<double, 2>> pos(g.order());
    for (VertexId v = 0; v < g.order(); ++v) {
        if (g.is_lattice()) {
            auto c = cartesian(g.points()[v]);
            pos[v] = {c[0] * kScale, -c[1] * kScale};
        } else {
            double t = 2 * std::numbers::pi * v / g.order();
            double r = kScale * std::max(1.5, g.order() / 3.0);
            pos[v] = {r * std::cos(t), -r * std::sin(t)};
        }
    }
    double minx = 0, miny = 0;
    if (!pos.empty()) {
        minx = pos[0][0], miny = pos[0][1];
        for (auto& p : pos) minx = std::min(minx, p[0]), miny = std::min(miny, p[1]);
    }
    for (auto& p : pos) p = {p[0] - minx + kMargin, p[1] - miny + kMargin};
    return pos;
}

} // namespace

std::string render_svg(const Graph& g, const std::optional<Placement>& p, const std::string& caption) {
    auto pos = layout(g);
    double w = 2 * kMargin, h = 2 * kMargin;
    for (auto& q : pos) w = std::max(w, q[0] + kMargin), h = std::max(h, q[1] + kMargin);
    if (!caption.empty()) h += 24;
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" + num(h) +
                      "\" viewBox=\"0 0 " + num(w) + ' ' + num(h) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    auto line = [&](Edge e, const std::string& style) {
        out += "<line x1=\"" + num(pos[e.u][0]) + "\" y1=\"" + num(pos[e.u][1]) + "\" x2=\"" + num(pos[e.v][0]) +
               "\" y2=\"" + num(pos[e.v][1]) + "\" " + style + "/>\n";
    };
    for (const Edge& e : g.edges()) line(e, "stroke=\"#bbbbbb\" stroke-width=\"2\"");
    if (p) {
        for (int i = 0; i < p->n(); ++i) {
            line(p->piece(i), std::string("stroke=\"") + piece_colour(i) +
                                  "\" stroke-width=\"12\" stroke-linecap=\"round\" data-label=\"" +
                                  std::to_string(i + 1) + "\"");
        }
    }
    for (VertexId v = 0; v < g.order(); ++v) {
        const bool exposed = p && p->exposed() == v;
        out += "<circle cx=\"" + num(pos[v][0]) + "\" cy=\"" + num(pos[v][1]) + "\" r=\"" + (exposed ? "11" : "7") +
               "\" fill=\"" + (exposed ? "white" : "black") + "\" stroke=\"" + (exposed ? "#d62728" : "black") +
               "\" stroke-width=\"3\"/>\n";
    }
    for (VertexId v = 0; v < g.order(); ++v) {
        out += "<text x=\"" + num(pos[v][0] + 9) + "\" y=\"" + num(pos[v][1] - 9) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" + std::to_string(v + 1) + "</text>\n";
    }
    if (!caption.empty()) {
        out += "<text x=\"" + num(kMargin) + "\" y=\"" + num(h - 12) + "\" font-family=\"sans-serif\" font-size=\"14\">" +
               caption + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace trigrid
