#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ncp/freealg.hpp"

namespace ncp {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg), line_(line), col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_, col_;
};

// Names allowed as scalar parameters. A null pointer accepts any identifier
// that is used as a factor (followed by '*' or '^').
using ParamNames = std::set<std::string>;

// Term syntax: [scalar "*"] body, joined by + and -. Scalars are rationals
// p/q, parameter names, powers name^k, and parenthesized sums/products.
Scalar parse_scalar(std::string_view text, const ParamNames* params = nullptr);
NCPoly parse_poly(const AlphabetPtr& al, std::string_view text, const ParamNames* params = nullptr);
// Necklace products "[x][xy]", "1" for the unit, "[]" for the empty necklace.
SymElem parse_sym(const Alphabet& al, std::string_view text, const ParamNames* params = nullptr);
// "w#w" optionally followed by ".[..][..]".
SweedlerElem parse_sweedler(const Alphabet& al, std::string_view text, const ParamNames* params = nullptr);
TripleElem parse_triple(const Alphabet& al, std::string_view text, const ParamNames* params = nullptr);
// One-line "[2,1]" / "perm[2,1]", or cycles "(12)" with explicit size.
Permutation parse_perm(std::string_view text, int size_hint = 0);

}  // namespace ncp
