#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "intsep/core.hpp"

namespace intsep {

struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& what_) : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// Instance files: one "left right" pair per line, tokens are exact decimals
// or p/q rationals, '#' starts a comment, blank lines ignored.
Instance parse_instance(std::istream& in);
std::string render_instance(const Instance& inst); // original input order

struct SolutionRow {
    int id;
    Scalar new_left;
    Scalar displacement;
};

struct SolutionFile {
    Scalar delta;
    std::vector<SolutionRow> rows; // original input order
};

SolutionFile parse_solution(std::istream& in);
std::string render_solution(const Instance& inst, const Solution& sol);

struct VerifyResult {
    bool ok = true;
    std::string message; // first violation
};

VerifyResult verify_solution(const Instance& inst, const SolutionFile& sol, Direction dir);

} // namespace intsep
