#pragma once

#include <string>
#include <vector>

#include "topoknit/topoknit.hpp"

namespace topoknit::testing {

inline StitchPattern pat(const std::string& text) { return parse_pattern(text); }

inline std::string fixture_path(const std::string& name) {
    return std::string(TOPOKNIT_PATTERN_DIR) + "/" + name + ".txt";
}

inline StitchPattern fixture(const std::string& name) { return load_pattern(fixture_path(name)); }

/// Every fixture that passes validation.
inline const std::vector<std::string>& valid_fixtures() {
    static const std::vector<std::string> names{
        "all_knit_3x3",      "single_knit",        "single_purl",     "tuck_pair",
        "miss_column",       "miss_column_triple", "transfer_block",  "hole_ladder",
        "knit_tuck_transfer", "knit_miss_transfer", "increase",       "decrease",
        "tuck_three_level",  "miss_tuck_three_level", "transfer_double_tuck"};
    return names;
}

inline std::string cell(const CnGrid& g, int i, int j) { return format_cell(g.at(i, j)); }

}  // namespace topoknit::testing
