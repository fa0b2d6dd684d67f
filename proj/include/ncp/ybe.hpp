#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncp/brackets.hpp"

namespace ncp {

// Linear combination of matrix units E_{ab}.
using MatKey = std::array<std::uint8_t, 2>;
using Mat = Linear<MatKey>;
Mat E(int a, int b);
Mat mat_one(int m);

// Operator on V (x) V: key (a,b,c,d) is E_{ab} (x) E_{cd}, acting by
// E_{ab} e_j = delta_{bj} e_a on each leg.
using RKey = std::array<std::uint8_t, 4>;
struct RMatrix {
  int dim = 0;
  Linear<RKey> terms;

  RMatrix() = default;
  RMatrix(int m, Linear<RKey> t = {}) : dim(m), terms(std::move(t)) {}
  bool is_zero() const { return terms.is_zero(); }
  RMatrix& operator+=(const RMatrix& o);
  RMatrix& operator-=(const RMatrix& o);
  friend RMatrix operator+(RMatrix a, const RMatrix& b) { return a += b; }
  friend RMatrix operator-(RMatrix a, const RMatrix& b) { return a -= b; }
  friend RMatrix operator*(const Scalar& c, RMatrix a) {
    a.terms *= c;
    return a;
  }
  RMatrix operator-() const { return RMatrix(dim, -terms); }
  friend bool operator==(const RMatrix& a, const RMatrix& b) { return a.dim == b.dim && a.terms == b.terms; }
};

RMatrix tensor(int m, const Mat& A, const Mat& B);
// A (x) B - B (x) A
RMatrix wedge(int m, const Mat& A, const Mat& B);
// (12) R (12)
RMatrix flip(const RMatrix& R);
bool is_skew(const RMatrix& R);
// T (x) T with T(E_ab) = E_ba
RMatrix transpose_dual(const RMatrix& R);
RMatrix substitute(const RMatrix& R, const std::map<std::string, Scalar>& values);

// Operator on V^{(x)3}: key (a1,b1,a2,b2,a3,b3).
using Key3 = std::array<std::uint8_t, 6>;
using Op3 = Linear<Key3>;

// R acting on legs (p, q) of V^{(x)3} with the identity on the third leg;
// p > q places the first tensor factor of R on leg p.
Op3 embed(const RMatrix& R, int p, int q);
Op3 op_mul(const Op3& A, const Op3& B);
Op3 commutator(const Op3& A, const Op3& B);
Op3 one_leg(int m, const Mat& X, int leg);

Op3 aybe_residual(const RMatrix& R);
Op3 cybe_residual(const RMatrix& r);
Op3 compat_residual(const RMatrix& R, const RMatrix& r);

// T(e_i (x) e_j (x) e_k) as a TripleElem over generators 1..m.
TripleElem apply3(const Op3& T, int i, int j, int k);

// Generators x, y, z for m <= 3, else x1..xm.
AlphabetPtr standard_alphabet(int m);
// {{e_i, e_j}}_id = r(e_i, e_j), {{e_i, e_j}}_(12) = R(e_i, e_j).
// Throws std::invalid_argument unless both are skew.
CoupledPair spec_from_r(const RMatrix& R, const RMatrix& r, AlphabetPtr al = nullptr);

struct IdentityReport {
  size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// The four triple-bracket / r-matrix composition equalities on every
// generator triple.
IdentityReport prop5_identities(const RMatrix& R, const RMatrix& r);

// Catalog.
struct DisplayedEntry {
  Part part;
  int i, j;
  std::string text;  // SweedlerElem in the parser syntax
};

struct CatalogEntry {
  std::string name;
  int dim = 0;
  std::optional<RMatrix> R;
  std::optional<RMatrix> r;
  std::vector<std::string> params;       // formal parameter names used
  std::vector<DisplayedEntry> displayed;  // printed nonzero table values (pairs only)
  bool is_pair() const { return R && r; }
};

// Names: dim2.I dim2.II dim2.RI dim2.RII dim2.r, dim3.R1..dim3.R16,
// A.1..A.6 B C E, D.1..D.4 (R alone), D.r1 D.r2 (r alone), D.<k>.r<j>
// (pairs), family (needs lambdas). Pairs: dim2.*, A.*, B, C, D.<k>.r<j>, E.
CatalogEntry catalog(const std::string& name, const std::map<std::string, Scalar>& values = {});
std::vector<std::string> catalog_names();
// The printed tables of a pair entry as a CoupledPair (undisplayed entries
// are zero, lower entries follow by skew).
CoupledPair displayed_pair(const CatalogEntry& e);
std::vector<std::string> catalog_pair_names();

struct FamilyData {
  std::vector<Rational> lambda;
  std::vector<std::vector<Rational>> b;  // b[i][k], X e_i = sum_k b_ik e_k
  RMatrix R, r;
  Mat X;  // operator matrix, X[k][i] = b_ik
};
// Throws std::invalid_argument unless the lambdas are pairwise distinct.
FamilyData family(const std::vector<Rational>& lambda);

std::string render(const Mat& A);
std::string render(const RMatrix& R);
std::string render(const Op3& T);

}  // namespace ncp
