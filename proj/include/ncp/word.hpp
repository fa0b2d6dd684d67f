#pragma once

#include <compare>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace ncp {

// Monomial of the free algebra: letters are 1-based generator indices, stored
// as chars so short words stay in the small-string buffer.
class Word {
 public:
  Word() = default;
  static Word letter(int gen);
  static Word from_indices(const std::vector<int>& gens);

  size_t size() const { return s_.size(); }
  bool empty() const { return s_.empty(); }
  int operator[](size_t i) const { return static_cast<unsigned char>(s_[i]); }
  Word slice(size_t pos, size_t len = std::string::npos) const;
  Word rotated(size_t r) const;
  Word operator+(const Word& o) const;
  Word& operator+=(const Word& o);
  const std::string& raw() const { return s_; }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) { return a.s_.compare(b.s_) <=> 0; }

 private:
  std::string s_;
};

// Declared generator names.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);
  static std::shared_ptr<const Alphabet> make(std::vector<std::string> names);

  size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int gen) const { return names_.at(gen - 1); }
  // 1-based index, 0 if unknown.
  int index(std::string_view name) const;
  std::string render(const Word& w) const;  // "1" for the empty word
  // Greedy longest-match split of juxtaposed names; "1" is the empty word.
  Word parse_word(std::string_view text) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

// Cyclic class of a word, stored as its least rotation.
class Necklace {
 public:
  Necklace() = default;  // empty necklace, class of 1
  explicit Necklace(const Word& w);
  const Word& word() const { return w_; }
  bool empty() const { return w_.empty(); }
  friend bool operator==(const Necklace&, const Necklace&) = default;
  friend auto operator<=>(const Necklace& a, const Necklace& b) { return a.w_ <=> b.w_; }

 private:
  Word w_;
};

Necklace cyclic_canon(const Word& w);
size_t least_rotation(const Word& w);

// Multiset of necklaces (sorted); empty = unit of S(A_nat).
class SymMonomial {
 public:
  SymMonomial() = default;
  explicit SymMonomial(std::vector<Necklace> factors);
  static SymMonomial of(const Necklace& n) { return SymMonomial({n}); }

  const std::vector<Necklace>& factors() const { return f_; }
  size_t size() const { return f_.size(); }
  bool empty() const { return f_.empty(); }
  SymMonomial operator*(const SymMonomial& o) const;
  SymMonomial without(size_t i) const;

  friend bool operator==(const SymMonomial&, const SymMonomial&) = default;
  friend std::strong_ordering operator<=>(const SymMonomial& a, const SymMonomial& b);

 private:
  std::vector<Necklace> f_;
};

std::string render(const Alphabet& al, const Necklace& n);
std::string render(const Alphabet& al, const SymMonomial& m);  // "" for the unit

}  // namespace ncp
