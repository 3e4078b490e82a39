#include "freeknot/render.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>

namespace freeknot {

namespace {

constexpr double kRadius = 80.0;
constexpr double kSpacing = 220.0;
constexpr double kLabelRadius = 96.0;

struct Point {
    double x = 0;
    double y = 0;
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
    return buf;
}

Point on_circle(std::size_t component, std::size_t position, std::size_t length, double radius) {
    const double cx = kSpacing / 2 + kSpacing * static_cast<double>(component);
    const double cy = kSpacing / 2;
    const double angle = -std::numbers::pi / 2 +
                         2 * std::numbers::pi * static_cast<double>(position) / static_cast<double>(length);
    return {cx + radius * std::cos(angle), cy + radius * std::sin(angle)};
}

}  // namespace

std::string render_svg(const FramedDiagram& diagram) {
    const std::size_t k = diagram.component_count();
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                      num(kSpacing * static_cast<double>(k)) + "\" height=\"" + num(kSpacing) +
                      "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    for (std::size_t c = 0; c < k; ++c) {
        out += "  <circle cx=\"" + num(kSpacing / 2 + kSpacing * static_cast<double>(c)) + "\" cy=\"" +
               num(kSpacing / 2) + "\" r=\"" + num(kRadius) +
               "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
    }
    for (Label chord : diagram.chords()) {
        const auto [o1, o2] = diagram.occurrences(chord);
        const Point a = on_circle(o1.component, o1.position, diagram.component(o1.component).size(), kRadius);
        const Point b = on_circle(o2.component, o2.position, diagram.component(o2.component).size(), kRadius);
        out += "  <line x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" + num(b.x) + "\" y2=\"" +
               num(b.y) + "\" stroke=\"steelblue\" stroke-width=\"1.5\"/>\n";
    }
    for (std::size_t c = 0; c < k; ++c) {
        const auto& w = diagram.component(c);
        for (std::size_t p = 0; p < w.size(); ++p) {
            const Point t = on_circle(c, p, w.size(), kLabelRadius);
            out += "  <text x=\"" + num(t.x) + "\" y=\"" + num(t.y) +
                   "\" text-anchor=\"middle\" dominant-baseline=\"middle\">" + std::to_string(w[p]) +
                   "</text>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

std::string render_dot(const FramedDiagram& diagram) {
    std::string out = "graph framed {\n  node [shape=circle];\n";
    for (Label chord : diagram.chords()) {
        out += "  v" + std::to_string(chord) + " [label=\"" + std::to_string(chord) + "\"];\n";
    }
    // occurrence -> 0 for the first occurrence of its chord, 1 for the second
    std::map<Occurrence, int> rank;
    for (Label chord : diagram.chords()) {
        const auto [o1, o2] = diagram.occurrences(chord);
        rank[o1] = 0;
        rank[o2] = 1;
    }
    auto in_port = [&](const Occurrence& o) { return rank.at(o) == 0 ? "w" : "s"; };
    auto out_port = [&](const Occurrence& o) { return rank.at(o) == 0 ? "e" : "n"; };
    for (std::size_t c = 0; c < diagram.component_count(); ++c) {
        const auto& w = diagram.component(c);
        const std::string comp = std::to_string(c);
        if (w.empty()) {
            out += "  loop" + comp + " [shape=point];\n";
            out += "  loop" + comp + " -- loop" + comp + " [component=" + comp + "];\n";
            continue;
        }
        for (std::size_t p = 0; p < w.size(); ++p) {
            const Occurrence from{c, p};
            const Occurrence to{c, (p + 1) % w.size()};
            out += "  v" + std::to_string(w[p]) + ":" + out_port(from) + " -- v" +
                   std::to_string(w[to.position]) + ":" + in_port(to) + " [component=" + comp + "];\n";
        }
    }
    out += "}\n";
    return out;
}

}  // namespace freeknot
