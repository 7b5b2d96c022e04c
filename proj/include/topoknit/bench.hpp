#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <vector>

#if defined(__GLIBC__)
#include <malloc.h>
#endif

#include "topoknit/topology_graph.hpp"

namespace topoknit {

struct BenchRow {
    int size = 0;
    long stitches = 0;
    double seconds = 0.0;
    int repeats = 0;
};

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    std::optional<LinearFit> fit;

    std::optional<double> seconds_at(int size) const {
        for (const auto& r : rows)
            if (r.size == size) return r.seconds;
        return std::nullopt;
    }
    std::optional<double> ratio(int big, int small) const {
        auto b = seconds_at(big), s = seconds_at(small);
        if (!b || !s || *s <= 0.0) return std::nullopt;
        return *b / *s;
    }
};

/// Least squares y = slope*x + intercept; needs at least two distinct x.
inline std::optional<LinearFit> fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    if (n < 2 || y.size() != n) return std::nullopt;
    double mx = 0, my = 0;
    for (std::size_t k = 0; k < n; ++k) {
        mx += x[k];
        my += y[k];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t k = 0; k < n; ++k) {
        sxx += (x[k] - mx) * (x[k] - mx);
        sxy += (x[k] - mx) * (y[k] - my);
        syy += (y[k] - my) * (y[k] - my);
    }
    if (sxx == 0.0) return std::nullopt;
    LinearFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    f.r2 = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
    return f;
}

/// One pass of allocate + populate + trace + graph; returns the node count
/// so the work cannot be optimised away.
inline std::size_t run_pipeline_once(const StitchPattern& p) {
    CnGrid g = allocate(p);
    populate(g);
    const YarnPath path = follow_the_yarn(g);
    return build_graph(g, path).nodes.size();
}

inline double time_once(const StitchPattern& p, volatile std::size_t& sink) {
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    sink = sink + run_pipeline_once(p);
    return std::chrono::duration<double>(clock::now() - t0).count();
}

/// glibc serves blocks above 128 KiB with fresh mmap pages and trims the heap
/// on free, so only the large sizes would pay page faults on every run. Keeping
/// freed memory in the heap makes all sizes reuse warm pages.
inline void keep_freed_memory() {
#if defined(__GLIBC__)
    mallopt(M_MMAP_THRESHOLD, 1 << 30);
    mallopt(M_TRIM_THRESHOLD, 1 << 30);
#endif
}

/// Timing noise on a shared machine only ever adds time, so each size keeps
/// its fastest run. Every round times every size once, which gives all sizes
/// the same number of samples taken in the same time windows. Rounds stop
/// after `max_repeats`, or after `min_repeats` once `budget` seconds are spent.
inline BenchReport run_bench(const StitchPattern& block, const std::vector<int>& sizes, double budget = 2.0,
                             int min_repeats = 40, int max_repeats = 400) {
    keep_freed_memory();
    std::vector<StitchPattern> patterns;
    for (int s : sizes) patterns.push_back(tile(block, s, s));

    BenchReport rep;
    for (const auto& p : patterns)
        rep.rows.push_back({p.cols(), static_cast<long>(p.cols()) * p.rows(), 0.0, 0});
    volatile std::size_t sink = 0;
    double spent = 0.0;
    for (int round = 0; round < max_repeats && (round < min_repeats || spent < budget); ++round) {
        for (std::size_t k = 0; k < patterns.size(); ++k) {
            const double t = time_once(patterns[k], sink);
            BenchRow& row = rep.rows[k];
            row.seconds = row.repeats == 0 ? t : std::min(row.seconds, t);
            ++row.repeats;
            spent += t;
        }
    }

    std::vector<double> x, y;
    for (const auto& r : rep.rows) {
        x.push_back(static_cast<double>(r.stitches));
        y.push_back(r.seconds);
    }
    rep.fit = fit_line(x, y);
    return rep;
}

inline const std::vector<int>& default_bench_sizes() {
    static const std::vector<int> sizes{10, 30, 40, 50, 75, 100, 125, 150};
    return sizes;
}

}  // namespace topoknit
