#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "ncp/scalar.hpp"

namespace ncp {

// Finite linear combination of keys. Terms are kept sorted by key with no
// zero coefficients, so == is structural.
template <class Key>
class Linear {
 public:
  using Term = std::pair<Key, Scalar>;

  Linear() = default;
  explicit Linear(Key k, Scalar c = Scalar(1)) {
    if (!c.is_zero()) terms_.emplace_back(std::move(k), std::move(c));
  }

  static Linear from_terms(std::vector<Term> t) {
    std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    Linear out;
    out.terms_.reserve(t.size());
    for (auto& term : t) {
      if (!out.terms_.empty() && out.terms_.back().first == term.first) {
        out.terms_.back().second += term.second;
      } else {
        if (!out.terms_.empty() && out.terms_.back().second.is_zero()) out.terms_.pop_back();
        out.terms_.push_back(std::move(term));
      }
    }
    if (!out.terms_.empty() && out.terms_.back().second.is_zero()) out.terms_.pop_back();
    return out;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Scalar coefficient(const Key& k) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                               [](const Term& t, const Key& key) { return t.first < key; });
    if (it != terms_.end() && it->first == k) return it->second;
    return {};
  }

  Linear& operator+=(const Linear& o) { return merge(o, false); }
  Linear& operator-=(const Linear& o) { return merge(o, true); }
  Linear& operator*=(const Scalar& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) t.second = t.second * c;
    // no zero divisors in Q[params]
    return *this;
  }
  Linear operator-() const {
    Linear r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }
  friend Linear operator+(Linear a, const Linear& b) { return a += b; }
  friend Linear operator-(Linear a, const Linear& b) { return a -= b; }
  friend Linear operator*(const Scalar& c, Linear a) { return a *= c; }
  friend Linear operator*(Linear a, const Scalar& c) { return a *= c; }
  friend bool operator==(const Linear& a, const Linear& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].first == b.terms_[i].first) || !(a.terms_[i].second == b.terms_[i].second)) return false;
    return true;
  }

  // Apply a key map; the result is re-normalized.
  template <class F>
  auto map_keys(F f) const {
    using K2 = std::decay_t<decltype(f(std::declval<const Key&>()))>;
    std::vector<typename Linear<K2>::Term> t;
    t.reserve(terms_.size());
    for (auto& [k, c] : terms_) t.emplace_back(f(k), c);
    return Linear<K2>::from_terms(std::move(t));
  }

  // Keep terms satisfying a key predicate.
  template <class P>
  Linear filter(P pred) const {
    Linear r;
    for (auto& t : terms_)
      if (pred(t.first)) r.terms_.push_back(t);
    return r;
  }

  Linear map_coefficients(const auto& f) const {
    std::vector<Term> t;
    for (auto& [k, c] : terms_) t.emplace_back(k, f(c));
    return from_terms(std::move(t));
  }

 private:
  Linear& merge(const Linear& o, bool negate) {
    if (o.terms_.empty()) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
        out.push_back(std::move(terms_[i++]));
      } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
        out.emplace_back(o.terms_[j].first, negate ? -o.terms_[j].second : o.terms_[j].second);
        ++j;
      } else {
        Scalar c = negate ? terms_[i].second - o.terms_[j].second : terms_[i].second + o.terms_[j].second;
        if (!c.is_zero()) out.emplace_back(std::move(terms_[i].first), std::move(c));
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
    return *this;
  }

  std::vector<Term> terms_;
};

// Unsorted term buffer; finish() normalizes.
template <class Key>
class Accumulator {
 public:
  void add(Key k, Scalar c) {
    if (!c.is_zero()) buf_.emplace_back(std::move(k), std::move(c));
  }
  void add(const Linear<Key>& l, const Scalar& c = Scalar(1)) {
    for (auto& [k, v] : l) add(k, v * c);
  }
  Linear<Key> finish() { return Linear<Key>::from_terms(std::move(buf_)); }
  size_t pending() const { return buf_.size(); }

 private:
  std::vector<typename Linear<Key>::Term> buf_;
};

}  // namespace ncp
