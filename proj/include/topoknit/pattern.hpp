#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "topoknit/error.hpp"
#include "topoknit/stitch.hpp"

namespace topoknit {

enum class CarryDirection : std::uint8_t { LeftToRight, RightToLeft };

/// Yarn is carried left-to-right on even stitch rows.
constexpr CarryDirection carry_direction_of(int row) {
    return row % 2 == 0 ? CarryDirection::LeftToRight : CarryDirection::RightToLeft;
}

/// An M x N grid of stitch instructions. Column m is the needle, row n the
/// pass of the yarn; row 0 is knitted first.
class StitchPattern {
public:
    StitchPattern() = default;

    StitchPattern(int cols, int rows, StitchInstruction fill = StitchInstruction::knit())
        : cols_(cols), rows_(rows) {
        if (cols < 1 || rows < 1) throw Error("pattern dimensions must be positive");
        cells_.assign(static_cast<std::size_t>(cols) * rows, fill);
    }

    /// Rows given top-down, i.e. rows.front() is the last-knitted row.
    static StitchPattern from_rows_top_down(const std::vector<std::vector<StitchInstruction>>& rows) {
        if (rows.empty() || rows.front().empty()) throw EmptyFile();
        StitchPattern p(static_cast<int>(rows.front().size()), static_cast<int>(rows.size()));
        for (int k = 0; k < p.rows_; ++k) {
            const auto& row = rows[static_cast<std::size_t>(k)];
            if (static_cast<int>(row.size()) != p.cols_)
                throw RaggedRows(p.cols_, static_cast<int>(row.size()), k + 1);
            for (int m = 0; m < p.cols_; ++m) p.at(m, p.rows_ - 1 - k) = row[static_cast<std::size_t>(m)];
        }
        return p;
    }

    int cols() const { return cols_; }
    int rows() const { return rows_; }

    bool contains(int m, int n) const { return m >= 0 && m < cols_ && n >= 0 && n < rows_; }

    const StitchInstruction& at(int m, int n) const { return cells_[index(m, n)]; }
    StitchInstruction& at(int m, int n) { return cells_[index(m, n)]; }

    CarryDirection carry_direction(int n) const {
        if (n < 0 || n >= rows_) throw IndexOutOfRange("stitch row " + std::to_string(n) + " out of range");
        return carry_direction_of(n);
    }

    const std::vector<StitchInstruction>& cells() const { return cells_; }

    friend bool operator==(const StitchPattern&, const StitchPattern&) = default;

private:
    std::size_t index(int m, int n) const {
        if (!contains(m, n))
            throw IndexOutOfRange("stitch (" + std::to_string(m) + "," + std::to_string(n) + ") out of range");
        return static_cast<std::size_t>(n) * cols_ + m;
    }

    int cols_ = 0;
    int rows_ = 0;
    std::vector<StitchInstruction> cells_;
};

/// Parses the whitespace-separated token format. The first stitch line is the
/// top (last-knitted) row; `#` starts a comment.
inline StitchPattern parse_pattern(std::string_view text) {
    std::vector<std::vector<StitchInstruction>> rows;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        std::vector<StitchInstruction> row;
        std::istringstream in{std::string(line)};
        std::string tok;
        int col = 0;
        while (in >> tok) {
            ++col;
            auto st = stitch_from_token(tok);
            if (!st) throw UnknownToken(tok, line_no, col);
            row.push_back(*st);
        }
        if (row.empty()) continue;
        if (!rows.empty() && row.size() != rows.front().size())
            throw RaggedRows(static_cast<int>(rows.front().size()), static_cast<int>(row.size()), line_no);
        rows.push_back(std::move(row));
        if (eol == text.size()) break;
    }
    if (rows.empty()) throw EmptyFile();
    return StitchPattern::from_rows_top_down(rows);
}

inline std::string serialize_pattern(const StitchPattern& p) {
    std::string out;
    for (int n = p.rows() - 1; n >= 0; --n) {
        for (int m = 0; m < p.cols(); ++m) {
            if (m) out += ' ';
            out += to_token(p.at(m, n));
        }
        out += '\n';
    }
    return out;
}

inline StitchPattern load_pattern(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read pattern file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_pattern(ss.str());
}

/// The first `rows` stitch rows of `p`.
inline StitchPattern truncate_rows(const StitchPattern& p, int rows) {
    if (rows < 1 || rows > p.rows()) throw IndexOutOfRange("cannot truncate to " + std::to_string(rows) + " rows");
    StitchPattern out(p.cols(), rows);
    for (int n = 0; n < rows; ++n)
        for (int m = 0; m < p.cols(); ++m) out.at(m, n) = p.at(m, n);
    return out;
}

/// Repeats `block` to fill a cols x rows pattern; both must be multiples of
/// the block dimensions.
inline StitchPattern tile(const StitchPattern& block, int cols, int rows) {
    if (cols % block.cols() != 0 || rows % block.rows() != 0)
        throw Error("block " + std::to_string(block.cols()) + "x" + std::to_string(block.rows()) +
                    " does not tile " + std::to_string(cols) + "x" + std::to_string(rows));
    StitchPattern out(cols, rows);
    for (int n = 0; n < rows; ++n)
        for (int m = 0; m < cols; ++m) out.at(m, n) = block.at(m % block.cols(), n % block.rows());
    return out;
}

/// FNV-1a over the serialized pattern, as 16 hex digits.
inline std::string pattern_digest(const StitchPattern& p) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : serialize_pattern(p)) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace topoknit
