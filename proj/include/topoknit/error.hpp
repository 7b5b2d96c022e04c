#pragma once

#include <stdexcept>
#include <string>

namespace topoknit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Pattern text could not be turned into a StitchPattern.
class ParseError : public Error {
public:
    using Error::Error;
};

class UnknownToken : public ParseError {
public:
    UnknownToken(std::string token, int line, int col)
        : ParseError("unknown token '" + token + "' at line " + std::to_string(line) +
                     ", column " + std::to_string(col)),
          token_(std::move(token)), line_(line), col_(col) {}

    const std::string& token() const noexcept { return token_; }
    int line() const noexcept { return line_; }
    int col() const noexcept { return col_; }

private:
    std::string token_;
    int line_;
    int col_;
};

class RaggedRows : public ParseError {
public:
    RaggedRows(int expected, int got, int line)
        : ParseError("ragged rows: expected " + std::to_string(expected) + " stitches, got " +
                     std::to_string(got) + " at line " + std::to_string(line)),
          expected_(expected), got_(got) {}

    int expected() const noexcept { return expected_; }
    int got() const noexcept { return got_; }

private:
    int expected_;
    int got_;
};

class EmptyFile : public ParseError {
public:
    EmptyFile() : ParseError("pattern file contains no stitch rows") {}
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

/// A (i,j)-located failure raised while populating or evaluating a CN grid.
class LocatedError : public Error {
public:
    LocatedError(const std::string& what, int i, int j)
        : Error(what + " at (" + std::to_string(i) + "," + std::to_string(j) + ")"), i_(i), j_(j) {}

    int i() const noexcept { return i_; }
    int j() const noexcept { return j_; }

private:
    int i_;
    int j_;
};

class PopulationConflict : public LocatedError {
public:
    PopulationConflict(int i, int j, const std::string& detail = {})
        : LocatedError("population conflict" + (detail.empty() ? "" : " (" + detail + ")"), i, j) {}
};

class TransferOutOfBounds : public LocatedError {
public:
    TransferOutOfBounds(int i, int j) : LocatedError("transfer leaves the grid", i, j) {}
};

class NoPositiveDeltaJBelow : public LocatedError {
public:
    NoPositiveDeltaJBelow(int i, int j)
        : LocatedError("no pulled-up cell below Miss column", i, j) {}
};

class EvaluationDiverged : public LocatedError {
public:
    EvaluationDiverged(int i, int j) : LocatedError("movement chain diverged", i, j) {}
};

class InconsistentPath : public LocatedError {
public:
    InconsistentPath(int i, int j) : LocatedError("yarn path entry has no resident CN", i, j) {}
};

class DegenerateStyle : public Error {
public:
    using Error::Error;
};

}  // namespace topoknit
