#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ncp/freealg.hpp"

namespace ncp {

// Double: outer Leibniz in the second argument ({{-,-}}_(12)).
// RightDouble: right Leibniz in the second argument ({{-,-}}_id).
enum class BracketKind { Double, RightDouble };
enum class Part { id, twelve };
enum class Variant { left, right, aux };

std::string to_string(Part p);

class BracketSpec {
 public:
  BracketSpec(BracketKind kind, AlphabetPtr al);  // zero bracket
  // Entries keyed by 1-based (i, j) with i <= j; the rest is the skew
  // completion. Throws on i > j or a non-skew diagonal entry.
  static BracketSpec from_upper(BracketKind kind, AlphabetPtr al, const std::map<std::pair<int, int>, SweedlerElem>& entries);
  // Every ordered pair supplied; throws naming the first non-skew pair.
  static BracketSpec from_full(BracketKind kind, AlphabetPtr al, const std::function<SweedlerElem(int, int)>& entry);

  BracketKind kind() const { return kind_; }
  const AlphabetPtr& alphabet() const { return al_; }
  int generators() const { return static_cast<int>(al_->size()); }
  const SweedlerElem& table(int i, int j) const { return table_[(i - 1) * al_->size() + (j - 1)]; }
  // Copy with the (i, j) entry (i <= j) replaced; (j, i) follows by skew.
  BracketSpec with_entry(int i, int j, const SweedlerElem& v) const;
  bool is_zero() const;
  bool has_sym_parts() const;

  friend bool operator==(const BracketSpec& a, const BracketSpec& b) {
    return a.kind_ == b.kind_ && *a.al_ == *b.al_ && a.table_ == b.table_;
  }

 private:
  void set_upper(int i, int j, const SweedlerElem& v);
  BracketKind kind_;
  AlphabetPtr al_;
  std::vector<SweedlerElem> table_;
};

struct CoupledPair {
  BracketSpec id;      // right double
  BracketSpec twelve;  // double
  CoupledPair(BracketSpec id_part, BracketSpec twelve_part);
  static CoupledPair zero(AlphabetPtr al);
  const AlphabetPtr& alphabet() const { return id.alphabet(); }
  const BracketSpec& part(Part p) const { return p == Part::id ? id : twelve; }
  friend bool operator==(const CoupledPair&, const CoupledPair&) = default;
};

// {{u, w}} on words, scaled by c, appended to acc.
void add_word_bracket(const BracketSpec& s, const Word& u, const Word& w, const Scalar& c, Accumulator<SweedlerKey>& acc);
SweedlerElem word_bracket(const BracketSpec& s, const Word& u, const Word& w);
SweedlerElem eval_bracket(const BracketSpec& s, const NCPoly& a, const NCPoly& b);

// {a, F} : A (x) S(A_nat) -> A (x) S(A_nat)
WordSymElem reduced_A_Anat(const BracketSpec& s, const NCPoly& a, const SymElem& f);
// {F, G} : S(A_nat) (x) S(A_nat) -> S(A_nat)
SymElem reduced_Anat_Anat(const BracketSpec& s, const SymElem& f, const SymElem& g);

TripleElem triple_bracket(const CoupledPair& pair, Part x, Part y, Variant v, const NCPoly& a, const NCPoly& b, const NCPoly& c);
// k in {1,2,3}; identity 2 includes the (23)-right summand as an addend.
TripleElem coupled_identity(const CoupledPair& pair, int k, const NCPoly& a, const NCPoly& b, const NCPoly& c);
TripleElem jac_tau(const CoupledPair& pair, const Permutation& tau, const NCPoly& a, const NCPoly& b, const NCPoly& c);
TripleElem vdb_jacobiator(const BracketSpec& s, const NCPoly& a, const NCPoly& b, const NCPoly& c);
// Jacobi residual of a right double bracket alone: the id-only part of
// Jac^{id_3} (left, right and aux terms with x = y = id).
TripleElem right_double_jacobiator(const BracketSpec& s, const NCPoly& a, const NCPoly& b, const NCPoly& c);

struct Residual {
  std::string label;  // e.g. "k=2 (x,y,z)"
  TripleElem value;
};

struct CoupledReport {
  std::vector<Residual> nonzero;
  size_t checked = 0;
  bool ok() const { return nonzero.empty(); }
};

CoupledReport is_coupled(const CoupledPair& pair, int jobs = 0);

}  // namespace ncp
