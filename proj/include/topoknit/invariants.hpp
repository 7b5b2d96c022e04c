#pragma once

#include <string>
#include <vector>

#include "topoknit/topology_graph.hpp"

namespace topoknit {

struct InvariantReport {
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
};

/// Heads that were PCN after population and sit below the last row must end
/// up ACN once the yarn has been traced.
inline std::vector<Loc> unactualized_heads(const CnGrid& before, const CnGrid& after) {
    std::vector<Loc> out;
    for (int j = 1; j < before.last_row(); ++j)
        for (int i = 0; i < before.width(); ++i)
            if (before.at(i, j).av == Actualization::PCN && after.at(i, j).av != Actualization::ACN)
                out.push_back({i, j});
    return out;
}

/// Checks the evaluation of `p` against the properties every valid pattern
/// must satisfy. `before` is the grid straight after population.
inline InvariantReport check_invariants(const CnGrid& before, const Evaluation& ev, const TopologyGraph& tg) {
    InvariantReport r;
    auto fail = [&](std::string s) { r.problems.push_back(std::move(s)); };
    auto at = [](Loc l) { return "(" + std::to_string(l.i) + "," + std::to_string(l.j) + ")"; };
    const CnGrid& g = ev.grid;
    const StitchPattern& p = g.pattern();

    if (g.width() != 2 * p.cols() || g.height() != p.rows() + 1) fail("grid dimensions are not 2M x (N+1)");

    for (const Loc& l : unactualized_heads(before, g)) fail("head " + at(l) + " never actualized");

    for (const auto& v : stretch_violations(g)) fail("CN " + at(v.cn) + " stretched to " + at(v.final_loc));

    for (int j = 0; j < g.height(); ++j) {
        for (int i = 0; i < g.width(); ++i) {
            const Actualization a = before.at(i, j).av;
            const Actualization b = g.at(i, j).av;
            if (a == b) continue;
            const bool promoted = a == Actualization::UACN &&
                                  (b == Actualization::ACN || (b == Actualization::PCN && j == g.last_row()));
            if (!promoted) fail("CN " + at({i, j}) + " changed state outside UACN promotion");
        }
    }

    for (const auto& e : ev.path) {
        const Loc l{e.i, e.j};
        const bool last_row_pcn = l.j == g.last_row();
        if (!last_row_pcn && acns_at(g, l.i, l.j).empty()) fail("yarn entry " + at(l) + " has no ACN");
    }

    if (tg.edges.size() + 1 != ev.path.size() && !ev.path.empty()) fail("edge count does not match the yarn path");
    for (std::size_t k = 0; k < tg.edges.size(); ++k) {
        const Loc from{ev.path[k].i, ev.path[k].j};
        const Loc to{ev.path[k + 1].i, ev.path[k + 1].j};
        if (tg.edges[k].from != from || tg.edges[k].to != to) fail("edge " + std::to_string(k) + " does not replay the path");
    }
    return r;
}

inline InvariantReport check_invariants(const StitchPattern& p) {
    CnGrid before = build_grid(p);
    Evaluation ev{before, {}};
    ev.path = follow_the_yarn(ev.grid);
    const TopologyGraph tg = build_graph(ev.grid, ev.path);
    return check_invariants(before, ev, tg);
}

}  // namespace topoknit
