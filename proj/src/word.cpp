#include "ncp/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncp {

Word Word::letter(int gen) {
  if (gen < 1 || gen > 255) throw std::out_of_range("generator index out of range");
  Word w;
  w.s_.push_back(static_cast<char>(gen));
  return w;
}

Word Word::from_indices(const std::vector<int>& gens) {
  Word w;
  for (int g : gens) w += letter(g);
  return w;
}

Word Word::slice(size_t pos, size_t len) const {
  Word w;
  w.s_ = s_.substr(pos, len);
  return w;
}

Word Word::rotated(size_t r) const {
  if (s_.empty()) return *this;
  r %= s_.size();
  Word w;
  w.s_ = s_.substr(r) + s_.substr(0, r);
  return w;
}

Word Word::operator+(const Word& o) const {
  Word w;
  w.s_.reserve(s_.size() + o.s_.size());
  w.s_ = s_;
  w.s_ += o.s_;
  return w;
}

Word& Word::operator+=(const Word& o) {
  s_ += o.s_;
  return *this;
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > 255) throw std::invalid_argument("too many generators");
  for (size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty() || names_[i] == "1") throw std::invalid_argument("bad generator name '" + names_[i] + "'");
    for (size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw std::invalid_argument("duplicate generator '" + names_[i] + "'");
  }
}

std::shared_ptr<const Alphabet> Alphabet::make(std::vector<std::string> names) {
  return std::make_shared<const Alphabet>(std::move(names));
}

int Alphabet::index(std::string_view name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i + 1);
  return 0;
}

std::string Alphabet::render(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) out += name(w[i]);
  return out;
}

Word Alphabet::parse_word(std::string_view text) const {
  if (text == "1") return {};
  Word w;
  size_t pos = 0;
  while (pos < text.size()) {
    int best = 0;
    size_t best_len = 0;
    for (size_t i = 0; i < names_.size(); ++i) {
      auto& n = names_[i];
      if (n.size() > best_len && text.compare(pos, n.size(), n) == 0) {
        best = static_cast<int>(i + 1);
        best_len = n.size();
      }
    }
    if (!best) throw std::invalid_argument("undeclared generator in '" + std::string(text) + "' at offset " + std::to_string(pos));
    w += Word::letter(best);
    pos += best_len;
  }
  return w;
}

// Booth-style least rotation.
size_t least_rotation(const Word& w) {
  const std::string& s = w.raw();
  size_t n = s.size();
  if (n < 2) return 0;
  size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    unsigned char a = s[(i + k) % n], b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b)
      i += k + 1;
    else
      j += k + 1;
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

Necklace::Necklace(const Word& w) : w_(w.rotated(least_rotation(w))) {}

Necklace cyclic_canon(const Word& w) { return Necklace(w); }

SymMonomial::SymMonomial(std::vector<Necklace> factors) : f_(std::move(factors)) { std::sort(f_.begin(), f_.end()); }

SymMonomial SymMonomial::operator*(const SymMonomial& o) const {
  if (o.f_.empty()) return *this;
  if (f_.empty()) return o;
  SymMonomial r;
  r.f_.reserve(f_.size() + o.f_.size());
  std::merge(f_.begin(), f_.end(), o.f_.begin(), o.f_.end(), std::back_inserter(r.f_));
  return r;
}

SymMonomial SymMonomial::without(size_t i) const {
  SymMonomial r = *this;
  r.f_.erase(r.f_.begin() + static_cast<long>(i));
  return r;
}

std::strong_ordering operator<=>(const SymMonomial& a, const SymMonomial& b) {
  if (auto c = a.f_.size() <=> b.f_.size(); c != 0) return c;
  for (size_t i = 0; i < a.f_.size(); ++i)
    if (auto c = a.f_[i] <=> b.f_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string render(const Alphabet& al, const Necklace& n) {
  if (n.empty()) return "[]";
  return "[" + al.render(n.word()) + "]";
}

std::string render(const Alphabet& al, const SymMonomial& m) {
  std::string out;
  for (auto& n : m.factors()) out += render(al, n);
  return out;
}

}  // namespace ncp
