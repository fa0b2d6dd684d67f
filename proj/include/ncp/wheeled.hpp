#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ncp/brackets.hpp"
#include "ncp/parse.hpp"

namespace ncp {

// Basis element (a_1 (x) ... (x) a_n) (x) f (x) u of O(A)_n.
struct OKey {
  std::vector<Word> words;
  SymMonomial sym;
  Permutation perm;

  int degree() const { return static_cast<int>(words.size()); }
  friend bool operator==(const OKey&, const OKey&) = default;
  friend std::strong_ordering operator<=>(const OKey& a, const OKey& b);
};

using OElem = Linear<OKey>;

OElem o_unit();
OElem o_word(const Word& w, const SymMonomial& f = {});
OElem o_poly(const NCPoly& p);  // p (x) 1 (x) id_1
OElem o_sym(const SymElem& f);  // degree 0
// Degree of a homogeneous element; -1 for zero. Throws if mixed.
int o_degree(const OElem& a);

OElem o_mul(const OElem& a, const OElem& b);
inline OElem operator*(const OElem& a, const OElem& b) { return o_mul(a, b); }
// u . a . v
OElem act(const Permutation& u, const OElem& a, const Permutation& v);
OElem ad(const Permutation& u, const OElem& a);
OElem pi(const OElem& a);

OElem dt_bracket(const CoupledPair& pair, const OElem& a, const OElem& b);
OElem dt_jacobiator(const CoupledPair& pair, const OElem& a, const OElem& b, const OElem& c);
// Sum over tau in S(3) of jac_tau(a,b,c) (x) tau.
OElem jac_decomposition(const CoupledPair& pair, const NCPoly& a, const NCPoly& b, const NCPoly& c);
bool lemma2_check(const CoupledPair& pair, const NCPoly& a, const NCPoly& b, const NCPoly& c);

// Tables read back from dt_bracket on generator pairs.
CoupledPair extract_pair(const CoupledPair& pair);

struct AxiomReport {
  size_t samples = 0;
  size_t checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Random homogeneous element: up to max_terms terms, words of length <= 2,
// symmetric parts of <= 2 necklaces.
OElem random_oelem(std::mt19937_64& rng, int generators, int degree, int max_terms = 2);

// Skew, both Leibniz rules, pi-equivariance (both arguments) and the
// bimodule property on seeded random samples of degree <= 2.
AxiomReport dt_axiom_check(const CoupledPair& pair, size_t samples, std::uint64_t seed, int jobs = 0);

std::string render(const Alphabet& al, const OElem& a);

// Input syntax: terms "[c*]w1#...#wn[.[..]..][@[u1,..,un]]"; a term of
// necklaces alone, or a bare scalar, has degree 0. "x" is x (x) 1 (x) id_1.
OElem parse_oelem(const Alphabet& al, std::string_view text, const ParamNames* params = nullptr);

}  // namespace ncp
