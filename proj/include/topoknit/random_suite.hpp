#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "topoknit/invariants.hpp"
#include "topoknit/oracle_compare.hpp"
#include "topoknit/validate.hpp"

namespace topoknit {

enum class SuiteTemplate : std::uint8_t { Teal, Magenta };

inline constexpr int kRegionSize = 5;
inline constexpr int kSuitePatternSize = kRegionSize + 2;

/// Whether region cell (m,n), 0-based inside the 5x5 region, is randomized.
/// Magenta randomizes the whole region, teal only a diamond around its centre.
inline bool template_cell(SuiteTemplate t, int m, int n) {
    if (t == SuiteTemplate::Magenta) return true;
    const int c = kRegionSize / 2;
    return std::abs(m - c) + std::abs(n - c) <= 2;
}

/// A 7x7 pattern: Knit border around a 5x5 region whose template cells are
/// drawn from {Knit, Transfer right, Transfer left, Tuck, Miss}.
inline StitchPattern random_pattern(std::mt19937_64& rng, SuiteTemplate t) {
    static const StitchInstruction choices[] = {
        StitchInstruction::knit(), StitchInstruction::transfer(Side::Right, 1),
        StitchInstruction::transfer(Side::Left, 1), StitchInstruction::tuck(), StitchInstruction::miss()};
    StitchPattern p(kSuitePatternSize, kSuitePatternSize);
    for (int n = 0; n < kRegionSize; ++n)
        for (int m = 0; m < kRegionSize; ++m)
            if (template_cell(t, m, n)) p.at(m + 1, n + 1) = choices[rng() % 5];
    return p;
}

struct SuiteCase {
    std::string digest;
    std::vector<std::string> problems;
};

struct SuiteSummary {
    int requested = 0;
    int passed = 0;
    int resampled = 0;
    std::vector<SuiteCase> failures;

    bool ok() const { return passed == requested; }
};

/// Runs the full pipeline, the invariant checks and the oracle comparison on
/// one pattern; returns the list of problems found.
inline std::vector<std::string> audit_pattern(const StitchPattern& p) {
    std::vector<std::string> problems;
    try {
        CnGrid before = build_grid(p);
        Evaluation ev{before, {}};
        ev.path = follow_the_yarn(ev.grid);
        const TopologyGraph tg = build_graph(ev.grid, ev.path);
        for (auto& s : check_invariants(before, ev, tg).problems) problems.push_back(std::move(s));
        const CompareReport cmp = compare(oracle::simulate(p), ev.path, ev.grid);
        if (!cmp.ok())
            for (const auto& s : cmp.mismatches) problems.push_back("oracle: " + s);
    } catch (const Error& e) {
        problems.push_back(e.what());
    }
    return problems;
}

/// Patterns failing validation are redrawn, so every counted case is valid.
inline SuiteSummary run_random_suite(int count, std::uint64_t seed, SuiteTemplate t) {
    SuiteSummary s;
    s.requested = count;
    std::mt19937_64 rng(seed);
    for (int k = 0; k < count; ++k) {
        StitchPattern p = random_pattern(rng, t);
        while (!validate(p).ok()) {
            ++s.resampled;
            p = random_pattern(rng, t);
        }
        auto problems = audit_pattern(p);
        if (problems.empty())
            ++s.passed;
        else
            s.failures.push_back({pattern_digest(p), std::move(problems)});
    }
    return s;
}

}  // namespace topoknit
