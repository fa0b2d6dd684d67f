#pragma once

#include <string>
#include <vector>

#include "ncp/brackets.hpp"

namespace ncp {

// Vector in V = k^m: basis index (1-based) -> coefficient.
using Vec = Linear<int>;
inline Vec basis(int i) { return Vec(i); }

// Product mu and bracket br by structure constants; mu(e_i, e_j) is
// mu_table[(i-1)*m + (j-1)].
struct BilinearStruct {
  int dim = 0;
  std::vector<Vec> mu_table, br_table;

  explicit BilinearStruct(int m = 0) : dim(m), mu_table(m * m), br_table(m * m) {}
  Vec& mu_at(int i, int j) { return mu_table[(i - 1) * dim + (j - 1)]; }
  Vec& br_at(int i, int j) { return br_table[(i - 1) * dim + (j - 1)]; }
  const Vec& mu_at(int i, int j) const { return mu_table[(i - 1) * dim + (j - 1)]; }
  const Vec& br_at(int i, int j) const { return br_table[(i - 1) * dim + (j - 1)]; }
  friend bool operator==(const BilinearStruct&, const BilinearStruct&) = default;
};

enum class Op { mu, br };

Vec apply(const BilinearStruct& s, Op op, const Vec& a, const Vec& b);
// op(op(a,b),c) - op(a,op(b,c))
Vec assoc_residual(const BilinearStruct& s, Op op, const Vec& a, const Vec& b, const Vec& c);
// Assoc_br(a,b,c) - Assoc_br(b,a,c)
Vec prelie_residual(const BilinearStruct& s, const Vec& a, const Vec& b, const Vec& c);

struct PplieReport {
  size_t checked = 0;
  std::vector<std::string> failures;  // e.g. "assoc (1,2,3)"
  bool ok() const { return failures.empty(); }
};

// Associativity of mu, left pre-Lie of br, {ab,c} = {ba,c} and
// {a,bc} = {a,b}c + b{a,c} on all basis triples.
PplieReport pplie_residuals(const BilinearStruct& s);

// {{a,b}}_id = 1#{a,b} - {b,a}#1, {{a,b}}_(12) = 1#ab - ba#1 on generators
// named as in standard_alphabet.
CoupledPair linear_pair(const BilinearStruct& s, AlphabetPtr al = nullptr);
// 1#op(a,b) - op(b,a)#1 as a bracket of the given kind.
BracketSpec linear_bracket(const BilinearStruct& s, Op op, BracketKind kind, AlphabetPtr al = nullptr);
// Reads mu and br back from a linear pair; throws if a table entry is not of
// the linear form.
BilinearStruct structure_of(const CoupledPair& pair);

struct LinearEquiv {
  bool coupled = false;
  bool pplie = false;
  bool agree() const { return coupled == pplie; }
};
LinearEquiv thm_linear_equiv(const BilinearStruct& s, int jobs = 0);

// vdb_jacobiator of the linear double bracket of mu against
// 1#1#Assoc(b,a,c) + 1#Assoc(a,c,b)#1 + Assoc(c,b,a)#1#1 on all basis
// triples; returns the number of mismatching triples.
size_t rem3_mismatches(const BilinearStruct& s);

// Strictly upper triangular n x n matrices with {a,b} = a(xb - bx); x is
// given by its coefficients on E_{i,i+n-3}.
BilinearStruct example_upper_triangular(int n, const std::vector<Scalar>& x);
// Basis index of E_{ij} (i < j) in example_upper_triangular(n).
int upper_index(int n, int i, int j);
// mu = br = m for an associative m with all triple products zero.
BilinearStruct example_triple_zero(const BilinearStruct& m);
// e1 e2 = e3, e2 e1 = -e3 (the 3-dim Heisenberg Lie algebra).
BilinearStruct heisenberg();

std::string render(const BilinearStruct& s);

}  // namespace ncp
