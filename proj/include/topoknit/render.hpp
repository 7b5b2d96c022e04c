#pragma once

#include <sstream>
#include <string>

#include "topoknit/topology_graph.hpp"

namespace topoknit {

struct RenderStyle {
    int spacing = 40;
    int disk_radius = 7;
    int square_side = 10;
    bool arrowheads = true;
    std::string knit_fill = "#9e9e9e";
    std::string purl_fill = "#43a047";
    std::string pcn_fill = "#ffffff";
    std::string outline = "#333333";
    std::string marker_stroke = "#808080";
    std::string even_yarn = "#ff00ff";
    std::string odd_yarn = "#008080";

    void check() const {
        if (spacing <= 0 || disk_radius <= 0 || square_side <= 0)
            throw DegenerateStyle("spacing, disk radius and square side must be positive");
    }
    const std::string& yarn_color(int row) const { return row % 2 == 0 ? even_yarn : odd_yarn; }
    int margin() const { return spacing; }
    int x(int i) const { return i * spacing + margin(); }
    int y(int j, int height) const { return (height - 1 - j) * spacing + margin(); }
};

namespace detail {

inline void svg_loop(std::ostringstream& out, const GraphEdge& e, const RenderStyle& st, int height) {
    const int x1 = st.x(e.from.i), y1 = st.y(e.from.j, height);
    const int x2 = st.x(e.to.i), y2 = st.y(e.to.j, height);
    const int off = st.spacing / 2;
    const int xo = e.dir == CarryDirection::LeftToRight ? std::max(x1, x2) + off : std::min(x1, x2) - off;
    const std::string& c1 = st.yarn_color(e.row);
    const std::string& c2 = st.yarn_color(e.row + 1);
    const char* m1 = e.row % 2 == 0 ? "url(#arrow-even)" : "url(#arrow-odd)";
    const char* m2 = e.row % 2 == 0 ? "url(#arrow-odd)" : "url(#arrow-even)";
    const int ym = (y1 + y2) / 2;
    auto arc = [&](int ax, int ay, int cx, int cy, int bx, int by, const std::string& color, const char* marker) {
        out << "  <path class=\"loop\" data-row=\"" << e.row << "\" d=\"M " << ax << ' ' << ay << " Q " << cx << ' ' << cy
            << ' ' << bx << ' ' << by << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\"";
        if (st.arrowheads) out << " marker-end=\"" << marker << '"';
        out << "/>\n";
    };
    arc(x1, y1, xo, y1, xo, ym, c1, m1);
    arc(xo, ym, xo, ym, xo, y2 + (ym - y2) / 2, c1, m1);
    arc(xo, y2 + (ym - y2) / 2, xo, y2, x2, y2, c2, m2);
}

}  // namespace detail

inline std::string render_svg(const TopologyGraph& tg, const RenderStyle& st = {}) {
    st.check();
    const int w = std::max(tg.width - 1, 0) * st.spacing + 2 * st.margin();
    const int h = std::max(tg.height - 1, 0) * st.spacing + 2 * st.margin();
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
    if (st.arrowheads) {
        out << "  <defs>\n";
        for (int parity = 0; parity < 2; ++parity) {
            out << "    <marker id=\"arrow-" << (parity ? "odd" : "even") << "\" viewBox=\"0 0 10 10\" refX=\""
                << 10 + st.disk_radius << "\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\">"
                << "<path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"" << st.yarn_color(parity) << "\"/></marker>\n";
        }
        out << "  </defs>\n";
    }
    for (const auto& e : tg.edges) {
        if (e.kind == EdgeKind::BorderLoop) {
            detail::svg_loop(out, e, st, tg.height);
            continue;
        }
        out << "  <line class=\"segment\" data-row=\"" << e.row << "\" x1=\"" << st.x(e.from.i) << "\" y1=\""
            << st.y(e.from.j, tg.height) << "\" x2=\"" << st.x(e.to.i) << "\" y2=\"" << st.y(e.to.j, tg.height)
            << "\" stroke=\"" << st.yarn_color(e.row) << "\" stroke-width=\"2\"";
        if (st.arrowheads) out << " marker-end=\"url(#arrow-" << (e.row % 2 == 0 ? "even" : "odd") << ")\"";
        out << "/>\n";
    }
    for (const auto& n : tg.nodes) {
        const int x = st.x(n.loc.i), y = st.y(n.loc.j, tg.height);
        const std::string data =
            "data-i=\"" + std::to_string(n.loc.i) + "\" data-j=\"" + std::to_string(n.loc.j) + "\"";
        if (n.kind == NodeKind::UACNMarker) {
            const int half = st.square_side / 2;
            out << "  <rect class=\"UACNMarker\" " << data << " x=\"" << x - half << "\" y=\"" << y - half
                << "\" width=\"" << st.square_side << "\" height=\"" << st.square_side
                << "\" fill=\"none\" stroke=\"" << st.marker_stroke << "\" stroke-width=\"2\"/>\n";
            continue;
        }
        const std::string& fill = n.kind == NodeKind::KnitACN   ? st.knit_fill
                                  : n.kind == NodeKind::PurlACN ? st.purl_fill
                                                                : st.pcn_fill;
        out << "  <circle class=\"" << to_string(n.kind) << "\" " << data << " cx=\"" << x << "\" cy=\"" << y
            << "\" r=\"" << st.disk_radius << "\" fill=\"" << fill << "\" stroke=\"" << st.outline
            << "\" stroke-width=\"1\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

inline std::string render_dot(const TopologyGraph& tg) {
    auto id = [](const GraphNode& n) {
        return std::string(n.kind == NodeKind::UACNMarker ? "u" : "n") + "_" + std::to_string(n.loc.i) + "_" +
               std::to_string(n.loc.j);
    };
    RenderStyle st;
    std::ostringstream out;
    out << "digraph topology {\n";
    for (const auto& n : tg.nodes) {
        out << "  " << id(n) << " [kind=\"" << to_string(n.kind) << "\", i=" << n.loc.i << ", j=" << n.loc.j
            << ", shape=" << (n.kind == NodeKind::UACNMarker ? "square" : "circle") << "];\n";
    }
    for (const auto& e : tg.edges) {
        out << "  n_" << e.from.i << '_' << e.from.j << " -> n_" << e.to.i << '_' << e.to.j << " [row=" << e.row
            << ", yarn_dir=\"" << to_string(e.dir) << "\", kind=\"" << to_string(e.kind) << "\", color=\""
            << st.yarn_color(e.row) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace topoknit
