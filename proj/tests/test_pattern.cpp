#include <gtest/gtest.h>

#include "common.hpp"

using namespace topoknit;
using topoknit::testing::fixture;
using topoknit::testing::fixture_path;
using topoknit::testing::pat;

TEST(StitchTokens, RoundTripEveryKind) {
    for (const char* tok : {"K", "P", "T", "M", "E", "TL1", "TL2", "TL3", "TR1", "TR2", "TR3"}) {
        const auto s = stitch_from_token(tok);
        ASSERT_TRUE(s.has_value()) << tok;
        EXPECT_EQ(to_token(*s), tok);
    }
}

TEST(StitchTokens, RejectsUnknown) {
    for (const char* tok : {"X", "k", "TL0", "TR4", "TX1", "TL", ""}) EXPECT_FALSE(stitch_from_token(tok)) << tok;
}

TEST(StitchTokens, NeedleShiftSign) {
    EXPECT_EQ(StitchInstruction::transfer(Side::Left, 2).needle_shift(), -2);
    EXPECT_EQ(StitchInstruction::transfer(Side::Right, 3).needle_shift(), 3);
    EXPECT_EQ(StitchInstruction::knit().needle_shift(), 0);
}

TEST(PatternParse, FirstLineIsTopRow) {
    const StitchPattern p = pat("P K\nK T\n");
    EXPECT_EQ(p.cols(), 2);
    EXPECT_EQ(p.rows(), 2);
    EXPECT_EQ(p.at(0, 1), StitchInstruction::purl());
    EXPECT_EQ(p.at(1, 0), StitchInstruction::tuck());
}

TEST(PatternParse, CommentsAndBlankLinesIgnored) {
    const StitchPattern p = pat("# header\n\nK K  # trailing\n   \nK M\n");
    EXPECT_EQ(p.rows(), 2);
    EXPECT_EQ(p.at(1, 0), StitchInstruction::miss());
}

TEST(PatternParse, UnknownTokenReportsLineAndColumn) {
    try {
        pat("K K K\nK X K\n");
        FAIL() << "expected UnknownToken";
    } catch (const UnknownToken& e) {
        EXPECT_EQ(e.token(), "X");
        EXPECT_EQ(e.line(), 2);
        EXPECT_EQ(e.col(), 2);
    }
}

TEST(PatternParse, RaggedRowsRejected) {
    try {
        pat("K K K\nK K\n");
        FAIL() << "expected RaggedRows";
    } catch (const RaggedRows& e) {
        EXPECT_EQ(e.expected(), 3);
        EXPECT_EQ(e.got(), 2);
    }
}

TEST(PatternParse, EmptyTextRejected) {
    EXPECT_THROW(pat(""), EmptyFile);
    EXPECT_THROW(pat("# only a comment\n"), EmptyFile);
}

TEST(PatternParse, FixtureErrorsAreParseErrors) {
    EXPECT_THROW(fixture("bad_token"), ParseError);
    EXPECT_THROW(fixture("ragged"), ParseError);
    EXPECT_THROW(load_pattern(fixture_path("does_not_exist")), Error);
}

TEST(PatternParse, SerializeRoundTrip) {
    for (const auto& name : topoknit::testing::valid_fixtures()) {
        const StitchPattern p = fixture(name);
        EXPECT_EQ(parse_pattern(serialize_pattern(p)), p) << name;
    }
}

TEST(PatternModel, CarryDirectionAlternates) {
    const StitchPattern p(2, 3);
    EXPECT_EQ(p.carry_direction(0), CarryDirection::LeftToRight);
    EXPECT_EQ(p.carry_direction(1), CarryDirection::RightToLeft);
    EXPECT_EQ(p.carry_direction(2), CarryDirection::LeftToRight);
    EXPECT_THROW(p.carry_direction(3), IndexOutOfRange);
}

TEST(PatternModel, OutOfRangeAccessThrows) {
    const StitchPattern p(2, 2);
    EXPECT_THROW(p.at(2, 0), IndexOutOfRange);
    EXPECT_THROW(p.at(0, -1), IndexOutOfRange);
    EXPECT_THROW(StitchPattern(0, 3), Error);
}

TEST(PatternModel, TileRepeatsBlock) {
    const StitchPattern block = pat("K T\nP M\n");
    const StitchPattern t = tile(block, 4, 6);
    EXPECT_EQ(t.cols(), 4);
    EXPECT_EQ(t.rows(), 6);
    for (int n = 0; n < 6; ++n)
        for (int m = 0; m < 4; ++m) EXPECT_EQ(t.at(m, n), block.at(m % 2, n % 2));
    EXPECT_THROW(tile(block, 3, 4), Error);
}

TEST(PatternModel, TruncateKeepsBottomRows) {
    const StitchPattern p = pat("P P\nT T\nK K\n");
    const StitchPattern t = truncate_rows(p, 2);
    EXPECT_EQ(t, pat("T T\nK K\n"));
    EXPECT_THROW(truncate_rows(p, 0), IndexOutOfRange);
    EXPECT_THROW(truncate_rows(p, 4), IndexOutOfRange);
}

TEST(PatternModel, DigestIsStableHex) {
    const std::string d = pattern_digest(pat("K K\nK K\n"));
    EXPECT_EQ(d.size(), 16u);
    EXPECT_EQ(d.find_first_not_of("0123456789abcdef"), std::string::npos);
    EXPECT_EQ(d, pattern_digest(pat("K   K\n\nK K # same\n")));
    EXPECT_NE(d, pattern_digest(pat("K K\nK P\n")));
}

namespace {

std::vector<std::string> rules(const ValidationReport& r) {
    std::vector<std::string> out;
    for (const auto& v : r.violations) out.push_back(v.rule);
    return out;
}

}  // namespace

TEST(Validation, AllFixturesValid) {
    for (const auto& name : topoknit::testing::valid_fixtures())
        EXPECT_TRUE(validate(fixture(name)).ok()) << name;
}

TEST(Validation, BoundaryTuckFlagsR1) {
    const ValidationReport r = validate(fixture("boundary_tuck"));
    ASSERT_EQ(r.violations.size(), 1u);
    EXPECT_EQ(r.violations[0].rule, "R1");
    EXPECT_EQ(r.violations[0].m, 0);
    EXPECT_EQ(r.violations[0].n, 1);
}

TEST(Validation, R1CoversFirstAndLastRows) {
    EXPECT_EQ(rules(validate(pat("K K K\nK K K\nK M K\n"))), std::vector<std::string>{"R1"});
    EXPECT_EQ(rules(validate(pat("K T K\nK K K\nK K K\n"))), std::vector<std::string>{"R1"});
}

TEST(Validation, R1AllowsEdgeIncreaseAndDecrease) {
    EXPECT_TRUE(validate(fixture("increase")).ok());
    EXPECT_TRUE(validate(fixture("decrease")).ok());
    // A boundary transfer pointing inward without an Empty above is not a decrease.
    EXPECT_EQ(rules(validate(pat("K K K K\nK K K TL1\nK K K K\n"))), std::vector<std::string>{"R1"});
}

TEST(Validation, R2EnclosedEmpty) {
    EXPECT_EQ(rules(validate(pat("K K K\nK E K\nK K K\n"))), (std::vector<std::string>{"R2"}));
    EXPECT_EQ(rules(validate(pat("K K\nE E\nK K\n"))), (std::vector<std::string>{"R2", "R2", "R2"}));
}

TEST(Validation, R3TransferDestination) {
    const ValidationReport off = validate(pat("K K K\nK TR1 K\nK K TR1\nK K K\n"));
    EXPECT_EQ(rules(off), (std::vector<std::string>{"R1", "R3"}));
    EXPECT_EQ(rules(validate(pat("K K E\nK TR1 E\nK K K\n"))), (std::vector<std::string>{"R3"}));
}

TEST(Validation, R4HoldLimit) {
    EXPECT_TRUE(validate(fixture("tuck_three_level")).ok());
    const ValidationReport r = validate(pat("K K K\nK T K\nK M K\nK T K\nK T K\nK K K\n"));
    ASSERT_EQ(rules(r), std::vector<std::string>{"R4"});
    EXPECT_EQ(r.violations[0].m, 1);
    EXPECT_EQ(r.violations[0].n, 4);
}
