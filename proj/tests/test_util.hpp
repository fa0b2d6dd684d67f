#pragma once

#include <random>
#include <string>

#include "ncp/brackets.hpp"
#include "ncp/parse.hpp"

namespace ncp::testing {

inline SweedlerElem sw(const Alphabet& al, const std::string& text) { return parse_sweedler(al, text); }
inline NCPoly poly(const AlphabetPtr& al, const std::string& text) { return parse_poly(al, text); }
inline SymElem sym(const Alphabet& al, const std::string& text) { return parse_sym(al, text); }

inline Word random_word(std::mt19937_64& rng, int gens, int maxlen) {
  int len = std::uniform_int_distribution<int>(0, maxlen)(rng);
  std::vector<int> idx;
  for (int i = 0; i < len; ++i) idx.push_back(std::uniform_int_distribution<int>(1, gens)(rng));
  return Word::from_indices(idx);
}

inline NCPoly random_poly(std::mt19937_64& rng, const AlphabetPtr& al, int maxlen) {
  NCPoly p(al);
  int terms = std::uniform_int_distribution<int>(1, 3)(rng);
  for (int t = 0; t < terms; ++t) {
    int c = std::uniform_int_distribution<int>(-3, 3)(rng);
    if (c == 0) c = 1;
    p += NCPoly::word(al, random_word(rng, static_cast<int>(al->size()), maxlen), Scalar(c));
  }
  return p;
}

inline SymMonomial random_sym(std::mt19937_64& rng, int gens) {
  int n = std::uniform_int_distribution<int>(0, 1)(rng);
  std::vector<Necklace> out;
  for (int i = 0; i < n; ++i) {
    Word w = random_word(rng, gens, 2);
    if (w.empty()) w = Word::letter(1);
    out.emplace_back(w);
  }
  return SymMonomial(std::move(out));
}

// Random skew table with small integer coefficients.
inline BracketSpec random_spec(std::mt19937_64& rng, const AlphabetPtr& al, BracketKind kind, bool with_sym) {
  int g = static_cast<int>(al->size());
  std::map<std::pair<int, int>, SweedlerElem> entries;
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int i = 1; i <= g; ++i)
    for (int j = i; j <= g; ++j) {
      Accumulator<SweedlerKey> acc;
      int terms = std::uniform_int_distribution<int>(0, 2)(rng);
      for (int t = 0; t < terms; ++t) {
        int c = coef(rng);
        if (c == 0) continue;
        SweedlerKey k{random_word(rng, g, 2), random_word(rng, g, 2), with_sym ? random_sym(rng, g) : SymMonomial{}};
        acc.add(k, Scalar(c));
        if (i == j) acc.add(SweedlerKey{k.right, k.left, k.sym}, Scalar(-c));
      }
      entries[{i, j}] = acc.finish();
    }
  return BracketSpec::from_upper(kind, al, entries);
}

}  // namespace ncp::testing
