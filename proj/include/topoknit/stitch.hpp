#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace topoknit {

enum class StitchKind : std::uint8_t { Knit, Purl, Tuck, Miss, Empty, Transfer };

enum class Side : std::uint8_t { Left, Right };

/// One cell of a stitch pattern. Transfers carry a direction and a needle
/// count in {1,2,3}; every other kind leaves both at their defaults.
struct StitchInstruction {
    StitchKind kind = StitchKind::Knit;
    Side direction = Side::Left;
    int magnitude = 0;

    static constexpr StitchInstruction knit() { return {StitchKind::Knit}; }
    static constexpr StitchInstruction purl() { return {StitchKind::Purl}; }
    static constexpr StitchInstruction tuck() { return {StitchKind::Tuck}; }
    static constexpr StitchInstruction miss() { return {StitchKind::Miss}; }
    static constexpr StitchInstruction empty() { return {StitchKind::Empty}; }
    static constexpr StitchInstruction transfer(Side dir, int needles) {
        return {StitchKind::Transfer, dir, needles};
    }

    bool is_transfer() const { return kind == StitchKind::Transfer; }

    /// Knit, Purl and Transfer all pull a new loop through the held loops.
    bool forms_loop_through() const {
        return kind == StitchKind::Knit || kind == StitchKind::Purl || kind == StitchKind::Transfer;
    }

    bool is_knit_or_purl() const { return kind == StitchKind::Knit || kind == StitchKind::Purl; }

    /// Signed needle shift of a transfer (negative is left); 0 otherwise.
    int needle_shift() const {
        if (!is_transfer()) return 0;
        return direction == Side::Left ? -magnitude : magnitude;
    }

    friend bool operator==(const StitchInstruction& a, const StitchInstruction& b) {
        if (a.kind != b.kind) return false;
        if (a.kind != StitchKind::Transfer) return true;
        return a.direction == b.direction && a.magnitude == b.magnitude;
    }
};

inline std::optional<StitchInstruction> stitch_from_token(std::string_view tok) {
    if (tok == "K") return StitchInstruction::knit();
    if (tok == "P") return StitchInstruction::purl();
    if (tok == "T") return StitchInstruction::tuck();
    if (tok == "M") return StitchInstruction::miss();
    if (tok == "E") return StitchInstruction::empty();
    if (tok.size() == 3 && tok[0] == 'T' && (tok[1] == 'L' || tok[1] == 'R') && tok[2] >= '1' &&
        tok[2] <= '3') {
        return StitchInstruction::transfer(tok[1] == 'L' ? Side::Left : Side::Right, tok[2] - '0');
    }
    return std::nullopt;
}

inline std::string to_token(const StitchInstruction& s) {
    switch (s.kind) {
        case StitchKind::Knit: return "K";
        case StitchKind::Purl: return "P";
        case StitchKind::Tuck: return "T";
        case StitchKind::Miss: return "M";
        case StitchKind::Empty: return "E";
        case StitchKind::Transfer:
            return std::string("T") + (s.direction == Side::Left ? 'L' : 'R') +
                   static_cast<char>('0' + s.magnitude);
    }
    return "?";
}

}  // namespace topoknit
