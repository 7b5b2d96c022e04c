#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include <json.hpp>

#include "topoknit/evaluator.hpp"

namespace topoknit {

enum class NodeKind : std::uint8_t { KnitACN, PurlACN, PCN, UACNMarker };
enum class EdgeKind : std::uint8_t { Segment, BorderLoop };

struct GraphNode {
    Loc loc;
    NodeKind kind = NodeKind::KnitACN;
    std::vector<Loc> cns;

    friend bool operator==(const GraphNode&, const GraphNode&) = default;
};

struct GraphEdge {
    Loc from;
    Loc to;
    int row = 0;
    CarryDirection dir = CarryDirection::LeftToRight;
    EdgeKind kind = EdgeKind::Segment;

    friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

struct TopologyGraph {
    int width = 0;
    int height = 0;
    std::vector<GraphNode> nodes;
    std::vector<GraphEdge> edges;
    std::string digest;

    const GraphNode* find(Loc l, NodeKind kind) const {
        for (const auto& n : nodes)
            if (n.loc == l && n.kind == kind) return &n;
        return nullptr;
    }
    bool has_marker(Loc l) const { return find(l, NodeKind::UACNMarker) != nullptr; }

    friend bool operator==(const TopologyGraph&, const TopologyGraph&) = default;
};

inline const char* to_string(NodeKind k) {
    switch (k) {
        case NodeKind::KnitACN: return "KnitACN";
        case NodeKind::PurlACN: return "PurlACN";
        case NodeKind::PCN: return "PCN";
        case NodeKind::UACNMarker: return "UACNMarker";
    }
    return "?";
}

inline const char* to_string(EdgeKind k) { return k == EdgeKind::Segment ? "Segment" : "BorderLoop"; }

inline const char* to_string(CarryDirection d) {
    return d == CarryDirection::LeftToRight ? "LeftToRight" : "RightToLeft";
}

/// CNs whose final location is `l` and which are actualized or potential.
inline std::vector<Loc> resident_cns(const CnGrid& g, Loc l) {
    std::vector<Loc> out;
    for (int jj = l.j - kMaxHeldRows; jj <= l.j; ++jj) {
        for (int ii = l.i - kMaxShiftColumns; ii <= l.i + kMaxShiftColumns; ++ii) {
            if (!g.in_grid(ii, jj)) continue;
            const CnCell& c = g.at(ii, jj);
            if (c.av != Actualization::ACN && c.av != Actualization::PCN) continue;
            if (!may_end_in_column(c, ii, l.i)) continue;
            if (final_location(g, ii, jj) == l) out.push_back({ii, jj});
        }
    }
    return out;
}

/// A K/P mark wins over the AV: a cell whose own CN moved away may still
/// be where other CNs are knitted. Loops still held at the end of knitting
/// sit in the last row.
inline NodeKind node_kind_at(const CnGrid& g, Loc l) {
    const CnCell& c = g.at(l);
    if (c.st == StitchMark::K) return NodeKind::KnitACN;
    if (c.st == StitchMark::P) return NodeKind::PurlACN;
    if (c.av == Actualization::PCN || l.j == g.last_row()) return NodeKind::PCN;
    throw InconsistentPath(l.i, l.j);
}

inline TopologyGraph build_graph(const CnGrid& g, const YarnPath& path) {
    TopologyGraph tg;
    tg.width = g.width();
    tg.height = g.height();
    tg.digest = pattern_digest(g.pattern());

    const auto cells = static_cast<std::size_t>(g.width()) * g.height();
    std::vector<char> seen(cells, 0), marked(cells, 0);
    tg.nodes.reserve(cells);
    tg.edges.reserve(path.size());
    auto slot = [&](Loc l) { return static_cast<std::size_t>(l.j) * g.width() + l.i; };
    auto add_node = [&](Loc l) {
        if (seen[slot(l)]) return;
        seen[slot(l)] = 1;
        auto cns = resident_cns(g, l);
        if (cns.empty() && g.at(l).av == Actualization::E) throw InconsistentPath(l.i, l.j);
        tg.nodes.push_back({l, node_kind_at(g, l), std::move(cns)});
    };

    for (std::size_t k = 0; k < path.size(); ++k) {
        const Loc cur{path[k].i, path[k].j};
        add_node(cur);
        if (k + 1 == path.size()) break;
        const YarnPathEntry& next = path[k + 1];
        const Loc nxt{next.i, next.j};

        GraphEdge e;
        e.from = cur;
        e.to = nxt;
        e.row = path[k].stitch_row;
        e.dir = carry_direction_of(e.row);
        e.kind = next.stitch_row != path[k].stitch_row ? EdgeKind::BorderLoop : EdgeKind::Segment;
        tg.edges.push_back(e);

        if (cur.j == nxt.j) {
            for (int i = std::min(cur.i, nxt.i); i <= std::max(cur.i, nxt.i); ++i) {
                const Loc l{i, cur.j};
                if (g.at(l).av != Actualization::UACN || marked[slot(l)]) continue;
                marked[slot(l)] = 1;
                tg.nodes.push_back({l, NodeKind::UACNMarker, {}});
            }
        }
    }
    return tg;
}

inline TopologyGraph evaluate_graph(const StitchPattern& p) {
    Evaluation ev = evaluate(p);
    return build_graph(ev.grid, ev.path);
}

/// Graphs of the first r stitch rows for r = 1..up_to.
inline std::vector<TopologyGraph> row_snapshots(const StitchPattern& p, int up_to) {
    if (up_to < 1 || up_to > p.rows()) throw IndexOutOfRange("snapshot row count out of range");
    std::vector<TopologyGraph> out;
    for (int r = 1; r <= up_to; ++r) out.push_back(evaluate_graph(truncate_rows(p, r)));
    return out;
}

inline nlohmann::json to_json(const TopologyGraph& tg) {
    using nlohmann::json;
    json nodes = json::array();
    for (const auto& n : tg.nodes) {
        json cns = json::array();
        for (const auto& c : n.cns) cns.push_back({c.i, c.j});
        nodes.push_back({{"i", n.loc.i}, {"j", n.loc.j}, {"kind", to_string(n.kind)}, {"cns", cns}});
    }
    json edges = json::array();
    for (const auto& e : tg.edges) {
        edges.push_back({{"from", {e.from.i, e.from.j}},
                         {"to", {e.to.i, e.to.j}},
                         {"row", e.row},
                         {"dir", to_string(e.dir)},
                         {"kind", to_string(e.kind)}});
    }
    return {{"dims", {{"w", tg.width}, {"h", tg.height}}}, {"nodes", nodes}, {"edges", edges}, {"digest", tg.digest}};
}

}  // namespace topoknit
