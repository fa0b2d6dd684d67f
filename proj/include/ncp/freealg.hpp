#pragma once

#include <array>
#include <string>
#include <vector>

#include "ncp/linear.hpp"
#include "ncp/permutation.hpp"
#include "ncp/scalar.hpp"
#include "ncp/word.hpp"

namespace ncp {

using SymElem = Linear<SymMonomial>;

// Element of the free algebra over a fixed alphabet.
class NCPoly {
 public:
  NCPoly() = default;
  explicit NCPoly(AlphabetPtr al, Linear<Word> terms = {}) : al_(std::move(al)), terms_(std::move(terms)) {}
  static NCPoly generator(AlphabetPtr al, int gen) { return NCPoly(al, Linear<Word>(Word::letter(gen))); }
  static NCPoly word(AlphabetPtr al, Word w, Scalar c = 1) { return NCPoly(std::move(al), Linear<Word>(std::move(w), std::move(c))); }
  static NCPoly one(AlphabetPtr al) { return word(std::move(al), Word{}); }

  const AlphabetPtr& alphabet() const { return al_; }
  const Linear<Word>& terms() const { return terms_; }
  bool is_zero() const { return terms_.is_zero(); }

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const Scalar& c, NCPoly p) {
    p.terms_ *= c;
    return p;
  }
  NCPoly operator-() const { return NCPoly(al_, -terms_); }
  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  AlphabetPtr al_;
  Linear<Word> terms_;
};

NCPoly nc_mul(const NCPoly& p, const NCPoly& q);
inline NCPoly operator*(const NCPoly& p, const NCPoly& q) { return nc_mul(p, q); }
void check_same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

SymElem sym_mul(const SymElem& f, const SymElem& g);

// k-fold tensors of words.
using TensorKey = std::vector<Word>;
using Tensor = Linear<TensorKey>;
Tensor permute(const Permutation& s, const Tensor& t);
TensorKey permute_key(const Permutation& s, const TensorKey& k);

// A (x) A (x) S(A_nat): the value type of brackets.
struct SweedlerKey {
  Word left, right;
  SymMonomial sym;
  friend bool operator==(const SweedlerKey&, const SweedlerKey&) = default;
  friend std::strong_ordering operator<=>(const SweedlerKey&, const SweedlerKey&) = default;
};
using SweedlerElem = Linear<SweedlerKey>;
SweedlerElem flip12(const SweedlerElem& e);

// A^{(x)3} (x) S(A_nat).
struct TripleKey {
  std::array<Word, 3> w;
  SymMonomial sym;
  friend bool operator==(const TripleKey&, const TripleKey&) = default;
  friend std::strong_ordering operator<=>(const TripleKey&, const TripleKey&) = default;
};
using TripleElem = Linear<TripleKey>;
TripleElem permute(const Permutation& s, const TripleElem& t);

// A (x) S(A_nat).
struct WordSymKey {
  Word word;
  SymMonomial sym;
  friend bool operator==(const WordSymKey&, const WordSymKey&) = default;
  friend std::strong_ordering operator<=>(const WordSymKey&, const WordSymKey&) = default;
};
using WordSymElem = Linear<WordSymKey>;

// Renderings: scalar-prefixed terms joined by " + " / " - ".
std::string render_terms(const std::vector<std::pair<std::string, Scalar>>& terms);
std::string render(const Alphabet& al, const Linear<Word>& p);
std::string render(const Alphabet& al, const SymElem& f);
std::string render(const Alphabet& al, const Tensor& t);
std::string render(const Alphabet& al, const SweedlerElem& e);
std::string render(const Alphabet& al, const TripleElem& e);
std::string render(const Alphabet& al, const WordSymElem& e);
std::string render_key(const Alphabet& al, const SweedlerKey& k);
std::string render_key(const Alphabet& al, const TripleKey& k);

}  // namespace ncp
