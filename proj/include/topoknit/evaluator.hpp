#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "topoknit/cn_grid.hpp"

namespace topoknit {

struct YarnPathEntry {
    int i = 0;
    int j = 0;
    int stitch_row = 0;
    bool leg = false;
    /// Legs and heads whose CN ended up ACN can anchor a later UACN.
    bool anchors = false;

    friend bool operator==(const YarnPathEntry&, const YarnPathEntry&) = default;
};

using YarnPath = std::vector<YarnPathEntry>;

struct WaveCursor {
    int i = 0;
    int j = 0;
    bool leg = true;
    int stitch_row = 0;

    friend bool operator==(const WaveCursor&, const WaveCursor&) = default;
};

// ---------------------------------------------------------------------------
// Queries
// ---------------------------------------------------------------------------

/// Where the CN created at (i,j) ends up. Unwritten cells map to themselves.
inline Loc final_location(const CnGrid& g, int i, int j) {
    const ChainEnd end = trace_chain(g, i, j);
    if (end.status == ChainStatus::Unresolved) throw EvaluationDiverged(i, j);
    return end.loc;
}

/// Calls `f` for each ACN whose final location is (i,j) until it returns true.
template <class F>
bool visit_acns_at(const CnGrid& g, int i, int j, F&& f) {
    for (int jj = j - kMaxHeldRows; jj <= j; ++jj) {
        for (int ii = i - kMaxShiftColumns; ii <= i + kMaxShiftColumns; ++ii) {
            if (!g.in_grid(ii, jj)) continue;
            const CnCell& c = g.at(ii, jj);
            if (c.av != Actualization::ACN || !may_end_in_column(c, ii, i)) continue;
            if (final_location(g, ii, jj) == Loc{i, j} && f(Loc{ii, jj})) return true;
        }
    }
    return false;
}

inline std::vector<Loc> acns_at(const CnGrid& g, int i, int j) {
    std::vector<Loc> out;
    visit_acns_at(g, i, j, [&](Loc l) {
        out.push_back(l);
        return false;
    });
    return out;
}

inline bool has_acn_at(const CnGrid& g, int i, int j) {
    return visit_acns_at(g, i, j, [](Loc) { return true; });
}

// ---------------------------------------------------------------------------
// Square wave
// ---------------------------------------------------------------------------

inline bool border_cn(const CnGrid& g, const WaveCursor& c) {
    if (!c.leg) return false;
    return carry_direction_of(c.stitch_row) == CarryDirection::LeftToRight ? c.i == g.width() - 1 : c.i == 0;
}

/// Successor of a non-border cursor position within its stitch row.
/// Left-to-right each stitch is leg(a), head(a), head(a+1), leg(a+1);
/// right-to-left mirrors it.
inline Loc square_wave(const WaveCursor& c) {
    const bool ltr = carry_direction_of(c.stitch_row) == CarryDirection::LeftToRight;
    const int step = ltr ? 1 : -1;
    const bool leading = ltr ? (c.i % 2 == 0) : (c.i % 2 == 1);
    const int r = c.stitch_row;
    if (c.leg) return leading ? Loc{c.i, r + 1} : Loc{c.i + step, r};
    return leading ? Loc{c.i + step, r + 1} : Loc{c.i, r};
}

inline WaveCursor next_cn(const CnGrid& g, const WaveCursor& c) {
    if (border_cn(g, c)) return {c.i, c.j + 1, true, c.stitch_row + 1};
    const Loc n = square_wave(c);
    return {n.i, n.j, n.j == c.stitch_row, c.stitch_row};
}

/// Every cursor position visited by the wave, 4MN entries in total.
inline std::vector<WaveCursor> wave_positions(const CnGrid& g) {
    std::vector<WaveCursor> out;
    for (WaveCursor c; c.stitch_row < g.pattern().rows(); c = next_cn(g, c)) out.push_back(c);
    return out;
}

// ---------------------------------------------------------------------------
// Yarn tracing
// ---------------------------------------------------------------------------

namespace detail {

/// The first head of a stitch in carry order looks backward.
inline bool looks_backward(int i, int j) { return (i % 2 == 0) == (j % 2 == 1); }

inline std::optional<int> last_anchor_row(const YarnPath& path) {
    for (auto it = path.rbegin(); it != path.rend(); ++it)
        if (it->anchors) return it->j;
    return std::nullopt;
}

/// Row of the next entry that would anchor, found without touching the grid.
/// Forward-looking UACNs met on the way are skipped; backward-looking ones
/// count when they would anchor below the last row.
inline std::optional<int> lookahead_anchor_row(const CnGrid& g, WaveCursor c, const YarnPath& path) {
    const int rows = g.pattern().rows();
    for (c = next_cn(g, c); c.stitch_row < rows; c = next_cn(g, c)) {
        if (c.leg) {
            if (has_acn_at(g, c.i, c.j)) return c.j;
            continue;
        }
        const CnCell& cell = g.at(c.i, c.j);
        if (cell.av == Actualization::ACN) return final_location(g, c.i, c.j).j;
        if (cell.av != Actualization::UACN || !looks_backward(c.i, c.j)) continue;
        const auto back = last_anchor_row(path);
        const int fj = final_location(g, c.i, c.j).j;
        if (back && *back < fj && fj < g.last_row()) return fj;
    }
    return std::nullopt;
}

}  // namespace detail

/// Decides whether the cursor position joins the yarn path. A UACN head that
/// is anchored by a neighbouring contact is promoted in place: to ACN, or to
/// PCN in the last row where nothing is knitted through it.
inline bool add_to_list(CnGrid& g, const WaveCursor& c, const YarnPath& path) {
    if (c.leg) return has_acn_at(g, c.i, c.j);
    CnCell& cell = g.at(c.i, c.j);
    switch (cell.av) {
        case Actualization::E: return false;
        case Actualization::PCN:
        case Actualization::ACN: return true;
        case Actualization::UACN: break;
    }
    const auto n = detail::looks_backward(c.i, c.j) ? detail::last_anchor_row(path)
                                                     : detail::lookahead_anchor_row(g, c, path);
    if (!n) return false;
    if (*n < final_location(g, c.i, c.j).j) {
        cell.av = c.j == g.last_row() ? Actualization::PCN : Actualization::ACN;
        return true;
    }
    return false;
}

inline YarnPath follow_the_yarn(CnGrid& g) {
    YarnPath path;
    path.reserve(static_cast<std::size_t>(g.width()) * 2 * g.pattern().rows());
    const int rows = g.pattern().rows();
    for (WaveCursor c; c.stitch_row < rows; c = next_cn(g, c)) {
        if (!add_to_list(g, c, path)) continue;
        if (c.leg) {
            path.push_back({c.i, c.j, c.stitch_row, true, true});
        } else {
            const Loc f = final_location(g, c.i, c.j);
            path.push_back({f.i, f.j, c.stitch_row, false, g.at(c.i, c.j).av == Actualization::ACN});
        }
    }
    return path;
}

struct Evaluation {
    CnGrid grid;
    YarnPath path;
};

inline Evaluation evaluate(const StitchPattern& p) {
    CnGrid g = build_grid(p);
    YarnPath path = follow_the_yarn(g);
    return {std::move(g), std::move(path)};
}

// ---------------------------------------------------------------------------
// Stretch bound and serialization
// ---------------------------------------------------------------------------

struct StretchViolation {
    Loc cn;
    Loc final_loc;
};

/// CNs that move further than three needles sideways or three rows up.
inline std::vector<StretchViolation> stretch_violations(const CnGrid& g) {
    std::vector<StretchViolation> out;
    for (int j = 0; j < g.height(); ++j) {
        for (int i = 0; i < g.width(); ++i) {
            const CnCell& c = g.at(i, j);
            if (c.av == Actualization::E || !c.moved) continue;
            const ChainEnd end = trace_chain(g, i, j);
            if (end.status != ChainStatus::Resolved) continue;
            const int di = end.loc.i - i;
            const int dj = end.loc.j - j;
            if (di < -kMaxShiftColumns || di > kMaxShiftColumns || dj < 0 || dj > kMaxHeldRows)
                out.push_back({{i, j}, end.loc});
        }
    }
    return out;
}

inline nlohmann::json path_to_json(const YarnPath& path) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : path) arr.push_back({{"i", e.i}, {"j", e.j}, {"stitchRow", e.stitch_row}});
    return arr;
}

}  // namespace topoknit
