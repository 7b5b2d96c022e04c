#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "topoknit/error.hpp"
#include "topoknit/pattern.hpp"
#include "topoknit/validate.hpp"

namespace topoknit {

/// Location-based stitch type written by Knit, Purl and Transfer.
enum class StitchMark : std::uint8_t { None, K, P };

/// Actualization value of the CN created at a cell.
enum class Actualization : std::uint8_t { PCN, ACN, UACN, E };

struct Loc {
    int i = 0;
    int j = 0;
    friend auto operator<=>(const Loc&, const Loc&) = default;
};

/// Horizontal reach of a moved CN in CN columns (three needles).
inline constexpr int kMaxShiftColumns = 2 * kMaxHeldRows;

/// One (ST, AV, MV) element. `moved` is false while the movement vector is
/// still null, which only happens for cells nothing has written to.
struct CnCell {
    StitchMark st = StitchMark::None;
    Actualization av = Actualization::E;
    std::int8_t di = 0;
    std::int8_t dj = 0;
    bool moved = false;

    friend bool operator==(const CnCell&, const CnCell&) = default;
};

/// The 2M x (N+1) Contact-Neighborhood grid built from an M x N pattern.
/// Stitch (m,n) owns cells (2m,n), (2m+1,n), (2m,n+1) and (2m+1,n+1).
class CnGrid {
public:
    explicit CnGrid(StitchPattern pattern)
        : pattern_(std::move(pattern)),
          width_(2 * pattern_.cols()),
          height_(pattern_.rows() + 1),
          cells_(static_cast<std::size_t>(width_) * height_) {}

    int width() const { return width_; }
    int height() const { return height_; }
    int last_row() const { return height_ - 1; }
    const StitchPattern& pattern() const { return pattern_; }

    bool in_grid(int i, int j) const { return i >= 0 && i < width_ && j >= 0 && j < height_; }

    const CnCell& at(int i, int j) const { return cells_[index(i, j)]; }
    CnCell& at(int i, int j) { return cells_[index(i, j)]; }
    const CnCell& at(Loc l) const { return at(l.i, l.j); }
    CnCell& at(Loc l) { return at(l.i, l.j); }

    const std::vector<CnCell>& cells() const { return cells_; }

    friend bool operator==(const CnGrid& a, const CnGrid& b) {
        return a.width_ == b.width_ && a.height_ == b.height_ && a.cells_ == b.cells_;
    }

private:
    std::size_t index(int i, int j) const {
        if (!in_grid(i, j))
            throw IndexOutOfRange("CN (" + std::to_string(i) + "," + std::to_string(j) + ") outside grid");
        return static_cast<std::size_t>(j) * width_ + i;
    }

    StitchPattern pattern_;
    int width_;
    int height_;
    std::vector<CnCell> cells_;
};

/// Fresh grid: row 0 holds cast-on PCNs, everything else is untouched Empty.
inline CnGrid allocate(const StitchPattern& p) {
    CnGrid g(p);
    for (int i = 0; i < g.width(); ++i) g.at(i, 0) = {StitchMark::None, Actualization::PCN, 0, 0, true};
    return g;
}

// ---------------------------------------------------------------------------
// Movement chains
// ---------------------------------------------------------------------------

enum class ChainStatus : std::uint8_t { Resolved, NotInstantiated, Unresolved };

struct ChainEnd {
    Loc loc;
    ChainStatus status = ChainStatus::Resolved;
};

/// Follows a CN's movement vector: at most one horizontal hop, then vertical
/// hops until a K/P cell or the last row. Unresolved when the chain leaves
/// the grid, reaches an unwritten cell, or would loop.
inline ChainEnd trace_chain(const CnGrid& g, int i, int j) {
    const CnCell& start = g.at(i, j);
    if (!start.moved) return {{i, j}, ChainStatus::NotInstantiated};
    if (j == g.last_row()) return {{i, j}, ChainStatus::Resolved};
    if (start.di != 0)
        i += start.di;
    else
        j += start.dj;

    const int limit = 2 * g.height() + 2;
    for (int step = 0; step < limit; ++step) {
        if (!g.in_grid(i, j)) return {{i, j}, ChainStatus::Unresolved};
        if (j == g.last_row()) return {{i, j}, ChainStatus::Resolved};
        const CnCell& c = g.at(i, j);
        if (c.st != StitchMark::None) return {{i, j}, ChainStatus::Resolved};
        if (!c.moved || c.dj == 0) return {{i, j}, ChainStatus::Unresolved};
        j += c.dj;
    }
    return {{i, j}, ChainStatus::Unresolved};
}

/// A chain makes at most one horizontal hop, so the CN created in column
/// `from` can only end in column `to` if its Δi bridges the gap.
inline bool may_end_in_column(const CnCell& c, int from, int to) { return c.di == to - from; }

// ---------------------------------------------------------------------------
// Stitch writers
// ---------------------------------------------------------------------------

inline bool anchored_locally(const CnGrid& g, int i, int j) {
    for (int di : {-1, 1}) {
        if (g.in_grid(i + di, j - 1) && g.at(i + di, j - 1).av == Actualization::ACN) return true;
    }
    return false;
}

/// True if a CN other than the one created at (i,j) finishes its movement at (i,j).
inline bool has_arrival(const CnGrid& g, int i, int j) {
    for (int jj = std::max(0, j - kMaxHeldRows); jj <= j; ++jj) {
        for (int ii = std::max(0, i - kMaxShiftColumns); ii <= std::min(g.width() - 1, i + kMaxShiftColumns); ++ii) {
            if (ii == i && jj == j) continue;
            const CnCell& c = g.at(ii, jj);
            if (c.av == Actualization::E || !c.moved || !may_end_in_column(c, ii, i)) continue;
            const ChainEnd end = trace_chain(g, ii, jj);
            if (end.status == ChainStatus::Resolved && end.loc == Loc{i, j}) return true;
        }
    }
    return false;
}

namespace detail {

inline void write_loop_through_lower(CnGrid& g, int i, int j, StitchMark mark) {
    CnCell& c = g.at(i, j);
    switch (c.av) {
        case Actualization::PCN:
            if (c.dj != 0) throw PopulationConflict(i, j, "PCN already pulled up");
            c.st = mark;
            if (c.di == 0) c.av = Actualization::ACN;
            break;
        case Actualization::UACN:
            if (c.dj != 0) throw PopulationConflict(i, j, "UACN already pulled up");
            c.st = mark;
            if (c.di == 0 && anchored_locally(g, i, j)) c.av = Actualization::ACN;
            break;
        case Actualization::E:
            c.st = mark;
            if (!c.moved) {
                c.moved = true;
                c.di = 0;
                c.dj = 0;
            }
            break;
        case Actualization::ACN:
            throw PopulationConflict(i, j, "lower cell already actualized");
    }
}

inline void write_upper(CnGrid& g, int i, int j, CnCell value) {
    if (!g.in_grid(i, j + 1)) throw PopulationConflict(i, j + 1, "upper cell outside grid");
    CnCell& up = g.at(i, j + 1);
    if (up.moved) throw PopulationConflict(i, j + 1, "upper cell written twice");
    up = value;
}

}  // namespace detail

/// Scans down column i below (i,j) for the first pulled-up cell and pulls it
/// up one more row.
inline void propagate_miss_column(CnGrid& g, int i, int j) {
    for (int k = j - 1; k >= 0; --k) {
        CnCell& c = g.at(i, k);
        if (c.moved && c.dj >= 1) {
            ++c.dj;
            return;
        }
    }
    throw NoPositiveDeltaJBelow(i, j);
}

namespace detail {

inline void write_hold_lower(CnGrid& g, int i, int j) {
    CnCell& c = g.at(i, j);
    if ((c.av == Actualization::PCN || c.av == Actualization::UACN) && c.dj == 0) {
        c.dj = 1;
    } else if (c.av == Actualization::E && c.moved && c.dj == -1) {
        propagate_miss_column(g, i, j);
    } else {
        throw PopulationConflict(i, j, "no Tuck/Miss rule for this cell state");
    }
}

inline CnCell upper_for_loop(const CnGrid& g, int i, int j, int di) {
    const CnCell& low = g.at(i, j);
    const bool held = (low.av == Actualization::ACN && low.di == 0) || has_arrival(g, i, j);
    return {StitchMark::None, held ? Actualization::PCN : Actualization::UACN, static_cast<std::int8_t>(di), 0,
            true};
}

}  // namespace detail

inline void write_knit_purl(CnGrid& g, int i, int j, StitchMark mark) {
    detail::write_loop_through_lower(g, i, j, mark);
    detail::write_upper(g, i, j, detail::upper_for_loop(g, i, j, 0));
}

/// `di` is the CN-column shift: twice the signed needle count.
inline void write_transfer(CnGrid& g, int i, int j, StitchMark mark, int di) {
    if (di == 0 || di % 2 != 0 || di < -kMaxShiftColumns || di > kMaxShiftColumns)
        throw PopulationConflict(i, j, "transfer shift must be +-2, +-4 or +-6");
    if (i + di < 0 || i + di >= g.width()) throw TransferOutOfBounds(i, j);
    detail::write_loop_through_lower(g, i, j, mark);
    if (g.in_grid(i, j + 1) && g.at(i, j + 1).di != 0)
        throw PopulationConflict(i, j + 1, "horizontal shifts do not compose");
    detail::write_upper(g, i, j, detail::upper_for_loop(g, i, j, di));
}

inline void write_tuck(CnGrid& g, int i, int j) {
    detail::write_hold_lower(g, i, j);
    detail::write_upper(g, i, j, {StitchMark::None, Actualization::UACN, 0, 0, true});
}

inline void write_miss(CnGrid& g, int i, int j) {
    detail::write_hold_lower(g, i, j);
    detail::write_upper(g, i, j, {StitchMark::None, Actualization::E, 0, -1, true});
}

/// An Empty needle in the first row is never cast on. Later, a loop still
/// sitting on an Empty needle is simply held, exactly as under a Miss.
inline void write_empty(CnGrid& g, int i, int j) {
    CnCell& c = g.at(i, j);
    if (j == 0) {
        c = CnCell{};
        return;
    }
    const bool live = (c.av == Actualization::PCN || c.av == Actualization::UACN) && c.di == 0 && c.dj == 0;
    const bool floated = c.av == Actualization::E && c.moved && c.dj == -1;
    if (live || floated) write_miss(g, i, j);
}

/// Writes the four cells owned by stitch (m,n).
inline void write_stitch(CnGrid& g, int m, int n) {
    const StitchInstruction& s = g.pattern().at(m, n);
    for (int i = 2 * m; i <= 2 * m + 1; ++i) {
        switch (s.kind) {
            case StitchKind::Knit: write_knit_purl(g, i, n, StitchMark::K); break;
            case StitchKind::Purl: write_knit_purl(g, i, n, StitchMark::P); break;
            case StitchKind::Transfer: write_transfer(g, i, n, StitchMark::K, 2 * s.needle_shift()); break;
            case StitchKind::Tuck: write_tuck(g, i, n); break;
            case StitchKind::Miss: write_miss(g, i, n); break;
            case StitchKind::Empty: write_empty(g, i, n); break;
        }
    }
}

/// PCNs moved by transfers or held by Tuck/Miss become ACNs once a K/P
/// stitch in row n knits them. Runs after the whole row so the local
/// anchoring checks of row n only see rows below it.
inline void actualize_arrivals(CnGrid& g, int n) {
    for (int j = std::max(0, n - kMaxHeldRows); j <= n; ++j) {
        for (int i = 0; i < g.width(); ++i) {
            CnCell& c = g.at(i, j);
            if (c.av != Actualization::PCN || !c.moved) continue;
            const ChainEnd end = trace_chain(g, i, j);
            if (end.status != ChainStatus::Resolved || end.loc.j != n || end.loc == Loc{i, j}) continue;
            if (g.at(end.loc).st != StitchMark::None) c.av = Actualization::ACN;
        }
    }
}

/// Writes every stitch in knitting order: rows bottom-up, each row in its
/// yarn carry direction.
inline void populate(CnGrid& g) {
    const StitchPattern& p = g.pattern();
    for (int n = 0; n < p.rows(); ++n) {
        const bool ltr = carry_direction_of(n) == CarryDirection::LeftToRight;
        for (int k = 0; k < p.cols(); ++k) write_stitch(g, ltr ? k : p.cols() - 1 - k, n);
        actualize_arrivals(g, n);
    }
}

inline CnGrid build_grid(const StitchPattern& p) {
    CnGrid g = allocate(p);
    populate(g);
    return g;
}

// ---------------------------------------------------------------------------
// Text dump
// ---------------------------------------------------------------------------

inline const char* to_string(StitchMark s) {
    switch (s) {
        case StitchMark::K: return "K";
        case StitchMark::P: return "P";
        case StitchMark::None: break;
    }
    return "null";
}

inline const char* to_string(Actualization a) {
    switch (a) {
        case Actualization::PCN: return "PCN";
        case Actualization::ACN: return "ACN";
        case Actualization::UACN: return "UACN";
        case Actualization::E: break;
    }
    return "E";
}

inline std::string format_cell(const CnCell& c) {
    std::string mv = c.moved ? "[" + std::to_string(c.di) + "," + std::to_string(c.dj) + "]" : "[null,null]";
    return std::string("(") + to_string(c.st) + "," + to_string(c.av) + "," + mv + ")";
}

/// One line per CN row, top row first, cells separated by " | ".
inline std::string dump_grid(const CnGrid& g) {
    std::string out;
    for (int j = g.last_row(); j >= 0; --j) {
        for (int i = 0; i < g.width(); ++i) {
            if (i) out += " | ";
            out += format_cell(g.at(i, j));
        }
        out += '\n';
    }
    return out;
}

}  // namespace topoknit
