#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "topoknit/evaluator.hpp"
#include "topoknit/oracle.hpp"

namespace topoknit {

struct CompareReport {
    bool exact_order = false;
    bool row_multisets = false;
    bool location_sets = false;
    bool cn_states = false;
    bool conservation = false;
    std::vector<std::string> mismatches;

    /// Order agreement may fall back to per-row multisets.
    bool ok() const { return (exact_order || row_multisets) && location_sets && cn_states && conservation; }
};

namespace detail {

inline std::string pt(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

inline const char* oracle_token(Actualization a) {
    switch (a) {
        case Actualization::PCN: return "PCN";
        case Actualization::ACN: return "ACN";
        case Actualization::UACN: return "UACN";
        case Actualization::E: break;
    }
    return "E";
}

}  // namespace detail

/// Checks an evaluated grid and its yarn path against an oracle trace of the
/// same pattern.
inline CompareReport compare(const oracle::ContactTrace& t, const YarnPath& path, const CnGrid& g) {
    using detail::pt;
    CompareReport r;

    using Key = std::tuple<int, int, int, bool>;
    std::vector<Key> ev, orc;
    for (const auto& e : path) ev.emplace_back(e.stitch_row, e.i, e.j, e.leg);
    for (const auto& p : t.points) orc.emplace_back(p.stitch_row, p.loc.first, p.loc.second, p.leg);
    r.exact_order = ev == orc;
    {
        auto a = ev, b = orc;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        r.row_multisets = a == b;
    }
    if (!r.exact_order) {
        std::size_t k = 0;
        while (k < ev.size() && k < orc.size() && ev[k] == orc[k]) ++k;
        r.mismatches.push_back("yarn order diverges at entry " + std::to_string(k) + " (evaluator " +
                               std::to_string(ev.size()) + " entries, oracle " + std::to_string(orc.size()) + ")");
    }

    std::set<std::pair<int, int>> ev_locs, or_locs;
    for (int j = 0; j < g.height(); ++j)
        for (int i = 0; i < g.width(); ++i)
            if (g.at(i, j).av == Actualization::ACN) {
                const Loc f = final_location(g, i, j);
                ev_locs.insert({f.i, f.j});
            }
    for (const auto& [p, h] : t.heads)
        if (h.state == oracle::HeadState::Actualized) or_locs.insert(h.final_loc);
    r.location_sets = ev_locs == or_locs;
    if (!r.location_sets) r.mismatches.push_back("ACN location sets differ");

    r.cn_states = true;
    for (int j = 0; j < g.height(); ++j) {
        for (int i = 0; i < g.width(); ++i) {
            const CnCell& c = g.at(i, j);
            auto it = t.heads.find({i, j});
            const bool grid_has = c.av != Actualization::E;
            if (grid_has != (it != t.heads.end())) {
                r.cn_states = false;
                r.mismatches.push_back("CN " + pt(i, j) + " exists on only one side");
                continue;
            }
            if (!grid_has) continue;
            const std::string want = oracle::to_string(it->second.state);
            if (want != detail::oracle_token(c.av)) {
                r.cn_states = false;
                r.mismatches.push_back("CN " + pt(i, j) + ": grid " + detail::oracle_token(c.av) + ", oracle " + want);
            }
            const Loc f = final_location(g, i, j);
            if (std::pair{f.i, f.j} != it->second.final_loc) {
                r.cn_states = false;
                r.mismatches.push_back("CN " + pt(i, j) + " ends at " + pt(f.i, f.j) + " in the grid, " +
                                       pt(it->second.final_loc.first, it->second.final_loc.second) + " in the oracle");
            }
        }
    }

    r.conservation = static_cast<int>(t.contacts.size()) == t.expected_contacts;
    if (!r.conservation) r.mismatches.push_back("raw contact count is not twice the held-loop total");
    return r;
}

inline CompareReport compare_with_oracle(const StitchPattern& p) {
    Evaluation ev = evaluate(p);
    return compare(oracle::simulate(p), ev.path, ev.grid);
}

}  // namespace topoknit
