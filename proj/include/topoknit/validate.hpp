#pragma once

#include <string>
#include <vector>

#include "topoknit/pattern.hpp"

namespace topoknit {

/// Rule identifiers:
///  R1  boundary stitches are Knit/Purl, or a boundary Transfer forming an
///      increase (pointing at an Empty neighbour) or a decrease (pointing
///      inward with an Empty stitch above it)
///  R2  Empty stitches lie outside the fabric: never between non-Empty
///      stitches in a row or a column, and no row is entirely Empty
///  R3  a Transfer lands inside the pattern and not on an Empty stitch
///  R4  a needle holds a loop for at most three Tuck/Miss rows
struct Violation {
    std::string rule;
    int m = 0;
    int n = 0;
    std::string message;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

inline constexpr int kMaxHeldRows = 3;

namespace detail {

inline bool is_empty_at(const StitchPattern& p, int m, int n) {
    return p.contains(m, n) && p.at(m, n).kind == StitchKind::Empty;
}

inline bool non_empty_at(const StitchPattern& p, int m, int n) {
    return p.contains(m, n) && p.at(m, n).kind != StitchKind::Empty;
}

inline bool boundary_transfer_idiom(const StitchPattern& p, int m, int n, bool left_edge, bool right_edge) {
    const auto& s = p.at(m, n);
    if (!s.is_transfer() || n == 0 || n == p.rows() - 1) return false;
    const int outward = left_edge ? -1 : 1;
    if (left_edge && right_edge) return false;
    const int dir = s.needle_shift() < 0 ? -1 : 1;
    if (dir == outward) return is_empty_at(p, m + outward, n);  // increase
    return is_empty_at(p, m, n + 1);                            // decrease
}

}  // namespace detail

inline ValidationReport validate(const StitchPattern& p) {
    using detail::is_empty_at;
    using detail::non_empty_at;
    ValidationReport report;
    auto flag = [&](const char* rule, int m, int n, std::string msg) {
        report.violations.push_back({rule, m, n, std::move(msg)});
    };

    const int M = p.cols();
    const int N = p.rows();

    for (int n = 0; n < N; ++n) {
        int first = -1, last = -1;
        for (int m = 0; m < M; ++m) {
            if (p.at(m, n).kind != StitchKind::Empty) {
                if (first < 0) first = m;
                last = m;
            }
        }
        if (first < 0) {
            flag("R2", 0, n, "row contains only Empty stitches");
            continue;
        }
        for (int m = 0; m < M; ++m) {
            const auto& s = p.at(m, n);
            if (s.kind == StitchKind::Empty) continue;
            const bool side = (m == first || m == last);
            const bool edge_row = (n == 0 || n == N - 1);
            if (!(side || edge_row) || s.is_knit_or_purl()) continue;
            if (side && !edge_row && detail::boundary_transfer_idiom(p, m, n, m == first, m == last)) continue;
            flag("R1", m, n, "boundary stitch " + to_token(s) + " must be Knit or Purl");
        }
    }

    for (int n = 0; n < N; ++n) {
        for (int m = 0; m < M; ++m) {
            if (p.at(m, n).kind != StitchKind::Empty) continue;
            bool left = false, right = false, below = false, above = false;
            for (int k = 0; k < m; ++k) left = left || non_empty_at(p, k, n);
            for (int k = m + 1; k < M; ++k) right = right || non_empty_at(p, k, n);
            for (int k = 0; k < n; ++k) below = below || non_empty_at(p, m, k);
            for (int k = n + 1; k < N; ++k) above = above || non_empty_at(p, m, k);
            if ((left && right) || (below && above))
                flag("R2", m, n, "Empty stitch enclosed by non-Empty stitches");
        }
    }

    for (int n = 0; n < N; ++n) {
        for (int m = 0; m < M; ++m) {
            const auto& s = p.at(m, n);
            if (!s.is_transfer()) continue;
            const int dest = m + s.needle_shift();
            if (dest < 0 || dest >= M)
                flag("R3", m, n, "transfer " + to_token(s) + " leaves the pattern");
            else if (n + 1 < N && is_empty_at(p, dest, n + 1))
                flag("R3", m, n, "transfer " + to_token(s) + " lands on an Empty stitch");
        }
    }

    for (int m = 0; m < M; ++m) {
        int run = 0;
        for (int n = 0; n < N; ++n) {
            const auto k = p.at(m, n).kind;
            run = (k == StitchKind::Tuck || k == StitchKind::Miss) ? run + 1 : 0;
            if (run == kMaxHeldRows + 1)
                flag("R4", m, n, "loop held for more than three Tuck/Miss rows");
        }
    }

    return report;
}

}  // namespace topoknit
