#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncp/parse.hpp"
#include "ncp/prelie.hpp"
#include "ncp/ybe.hpp"

namespace ncp {

// Contents of a .ncp problem file. Bracket tables hold the upper entries
// (i <= j) as written; parameter values are applied only when a pair or
// matrix is requested.
struct ProblemFile {
  std::vector<std::string> generators;
  std::vector<std::pair<std::string, std::optional<Scalar>>> params;
  std::map<Part, std::map<std::pair<int, int>, SweedlerElem>> brackets;  // key present iff the block exists
  std::optional<RMatrix> R, r;
  std::optional<std::string> catalog;
  std::map<std::string, Scalar> catalog_values;
  std::optional<BilinearStruct> pplie;
  std::vector<std::vector<std::string>> runs;

  AlphabetPtr alphabet() const;
  std::map<std::string, Scalar> param_values() const;
  // Bracket blocks first, then a catalog pair, then rmatrix R + r, then the
  // linear pair of a pplie block. Throws std::invalid_argument if none.
  CoupledPair pair() const;
  bool has_pair() const;
  std::optional<RMatrix> R_value() const;
  std::optional<RMatrix> r_value() const;

  friend bool operator==(const ProblemFile&, const ProblemFile&);
};

// Throws ParseError (line/column) for syntax errors, undeclared names,
// non-skew diagonal entries and contradictory duplicate entries.
ProblemFile parse_problem(std::string_view text);
std::string render(const ProblemFile& p);
ProblemFile read_problem_file(const std::string& path);

// Generators, parameters, displayed tables and matrices of a catalog entry.
ProblemFile problem_from_catalog(const CatalogEntry& e);

}  // namespace ncp
