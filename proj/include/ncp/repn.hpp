#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ncp/wheeled.hpp"

namespace ncp {

// Matrix entry x_{ij} of generator `gen` (all 1-based, N <= 255).
struct EntryVar {
  int gen = 1, i = 1, j = 1;
  std::uint32_t code() const { return (static_cast<std::uint32_t>(gen) << 16) | (i << 8) | j; }
  static EntryVar decode(std::uint32_t c) { return {static_cast<int>(c >> 16), static_cast<int>((c >> 8) & 0xff), static_cast<int>(c & 0xff)}; }
};

// Sorted multiset of entry codes.
using CommMonomial = std::vector<std::uint32_t>;
using CommPoly = Linear<CommMonomial>;

CommPoly entry(const EntryVar& v);
CommPoly comm_constant(const Scalar& c);
CommPoly comm_mul(const CommPoly& a, const CommPoly& b);

// (w)_{ij} expanded by index contraction; the empty word gives delta_ij.
CommPoly rep_poly(const Word& w, int i, int j, int N);
// Product of traces; the empty necklace contributes N.
CommPoly trace_poly(const SymMonomial& f, int N);
// alpha_{IJ} = prod_t (a_t)_{I[u^{-1}(t)], J[t]} * tr(f).
CommPoly o_entry(const OKey& k, const std::vector<int>& I, const std::vector<int>& J, int N);
CommPoly o_entry(const OElem& a, const std::vector<int>& I, const std::vector<int>& J, int N);

// Poisson bracket on O(Rep_N(A)) induced by a coupled pair, extended from
// generator entries as a biderivation. Entry brackets are precomputed.
class InducedBracket {
 public:
  InducedBracket(const CoupledPair& pair, int N);
  int N() const { return N_; }
  int generators() const { return g_; }
  int variables() const { return g_ * N_ * N_; }
  EntryVar var(int index) const;  // 0-based enumeration
  int index(const EntryVar& v) const;
  const CommPoly& on_entries(const EntryVar& a, const EntryVar& b) const { return cache_[index(a) * variables() + index(b)]; }
  CommPoly operator()(const CommPoly& p, const CommPoly& q) const;

 private:
  int g_, N_;
  std::vector<CommPoly> cache_;
};

CommPoly induced_bracket(const CoupledPair& pair, int N, const CommPoly& p, const CommPoly& q);
// {alpha_{IJ}, beta_{KL}}_N = {alpha, beta}_{I+K, J+L}
CommPoly dt_induced(const CoupledPair& pair, const OElem& a, const OElem& b, const std::vector<int>& I,
                    const std::vector<int>& J, const std::vector<int>& K, const std::vector<int>& L, int N);

struct OracleReport {
  size_t checked = 0;
  size_t nonzero = 0;
  std::string worst;  // label of the residual with most terms
  size_t worst_terms = 0;
  size_t total_terms = 0;
  bool ok() const { return nonzero == 0; }
};

// Jacobiator over all strictly increasing triples of generator entries
// (it is totally antisymmetric), plus `samples` random triples of products
// of up to `degree` entries.
OracleReport jacobi_oracle(const CoupledPair& pair, int N, int degree = 2, size_t samples = 20,
                           std::uint64_t seed = 1, int jobs = 0);

using RatMatrix = std::vector<std::vector<Rational>>;

struct MatrixPoint {
  int N = 0;
  std::vector<RatMatrix> mats;  // one per generator
};

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
RatMatrix mat_identity(int N);
// Throws std::domain_error on a singular matrix.
RatMatrix mat_inverse(const RatMatrix& a);
RatMatrix random_invertible(std::mt19937_64& rng, int N, int range = 3);
MatrixPoint random_point(std::mt19937_64& rng, int generators, int N, int range = 3);

// Throws std::domain_error if a coefficient still has parameters.
Rational eval_at_point(const CommPoly& p, const MatrixPoint& pt);
// Substitution x_{ij} -> (g X g^{-1})_{ij} for every generator.
CommPoly gl_substitute(const CommPoly& p, const RatMatrix& g);

std::string render(const Alphabet& al, const CommPoly& p);

}  // namespace ncp
