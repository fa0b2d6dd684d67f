#include "ncp/scalar.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace ncp {

std::string rational_to_string(const Rational& q) { return q.get_str(); }

namespace {

struct Interner {
  std::mutex mu;
  std::unordered_map<std::string, std::uint32_t> ids;
  std::deque<std::string> names;  // stable references
};

Interner& interner() {
  static Interner in;
  return in;
}

}  // namespace

std::uint32_t ParamTable::intern(std::string_view name) {
  auto& in = interner();
  std::lock_guard lock(in.mu);
  auto it = in.ids.find(std::string(name));
  if (it != in.ids.end()) return it->second;
  auto id = static_cast<std::uint32_t>(in.names.size());
  in.names.emplace_back(name);
  in.ids.emplace(std::string(name), id);
  return id;
}

const std::string& ParamTable::name(std::uint32_t id) {
  auto& in = interner();
  std::lock_guard lock(in.mu);
  return in.names.at(id);
}

unsigned ParamMonomial::degree() const {
  unsigned d = 0;
  for (auto& f : factors) d += f.second;
  return d;
}

ParamMonomial ParamMonomial::operator*(const ParamMonomial& o) const {
  ParamMonomial r;
  r.factors.reserve(factors.size() + o.factors.size());
  size_t i = 0, j = 0;
  while (i < factors.size() || j < o.factors.size()) {
    if (j == o.factors.size() || (i < factors.size() && factors[i].first < o.factors[j].first)) {
      r.factors.push_back(factors[i++]);
    } else if (i == factors.size() || o.factors[j].first < factors[i].first) {
      r.factors.push_back(o.factors[j++]);
    } else {
      r.factors.emplace_back(factors[i].first, factors[i].second + o.factors[j].second);
      ++i;
      ++j;
    }
  }
  return r;
}

std::string ParamMonomial::to_string() const {
  std::vector<std::pair<std::string, std::uint32_t>> named;
  for (auto& [id, e] : factors) named.emplace_back(ParamTable::name(id), e);
  std::sort(named.begin(), named.end());
  std::string out;
  for (auto& [n, e] : named) {
    if (!out.empty()) out += '*';
    out += n;
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

bool operator==(const ParamMonomial& a, const ParamMonomial& b) { return a.factors == b.factors; }

std::strong_ordering operator<=>(const ParamMonomial& a, const ParamMonomial& b) {
  if (auto c = a.factors.size() <=> b.factors.size(); c != 0) return c;
  for (size_t i = 0; i < a.factors.size(); ++i) {
    if (auto c = a.factors[i].first <=> b.factors[i].first; c != 0) return c;
    if (auto c = a.factors[i].second <=> b.factors[i].second; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Scalar::Scalar(const Rational& q) {
  if (q != 0) terms_.emplace_back(ParamMonomial{}, q);
}

Scalar::Scalar(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  if (q != 0) terms_.emplace_back(ParamMonomial{}, q);
}

Scalar Scalar::parameter(std::string_view name) {
  Scalar s;
  ParamMonomial m;
  m.factors.emplace_back(ParamTable::intern(name), 1);
  s.terms_.emplace_back(std::move(m), Rational(1));
  return s;
}

bool Scalar::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.empty()); }

bool Scalar::is_one() const { return terms_.size() == 1 && terms_[0].first.empty() && terms_[0].second == 1; }

Rational Scalar::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::domain_error("scalar has uninstantiated parameters: " + to_string());
  return terms_[0].second;
}

std::vector<std::string> Scalar::parameter_names() const {
  std::vector<std::string> out;
  for (auto& t : terms_)
    for (auto& f : t.first.factors) out.push_back(ParamTable::name(f.first));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Scalar Scalar::from_terms(std::vector<Term> t) {
  std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  Scalar s;
  for (auto& term : t) {
    if (!s.terms_.empty() && s.terms_.back().first == term.first) {
      s.terms_.back().second += term.second;
      if (s.terms_.back().second == 0) s.terms_.pop_back();
    } else if (term.second != 0) {
      s.terms_.push_back(std::move(term));
    }
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  if (terms_.size() == 1 && o.terms_.size() == 1 && terms_[0].first == o.terms_[0].first) {
    terms_[0].second += o.terms_[0].second;
    if (terms_[0].second == 0) terms_.clear();
    return *this;
  }
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      merged.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      merged.push_back(o.terms_[j++]);
    } else {
      Rational c = terms_[i].second + o.terms_[j].second;
      if (c != 0) merged.emplace_back(std::move(terms_[i].first), c);
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar Scalar::operator-() const {
  Scalar s = *this;
  for (auto& t : s.terms_) t.second = -t.second;
  return s;
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    Scalar s;
    s.terms_.emplace_back(a.terms_[0].first * b.terms_[0].first, a.terms_[0].second * b.terms_[0].second);
    return s;
  }
  std::vector<Scalar::Term> t;
  t.reserve(a.terms_.size() * b.terms_.size());
  for (auto& x : a.terms_)
    for (auto& y : b.terms_) t.emplace_back(x.first * y.first, x.second * y.second);
  return Scalar::from_terms(std::move(t));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].first != b.terms_[i].first || a.terms_[i].second != b.terms_[i].second) return false;
  return true;
}

Scalar Scalar::substitute(const std::map<std::string, Scalar>& values) const {
  Scalar out;
  for (auto& [mono, coef] : terms_) {
    Scalar t(coef);
    ParamMonomial rest;
    for (auto& [id, e] : mono.factors) {
      auto it = values.find(ParamTable::name(id));
      if (it == values.end()) {
        rest.factors.emplace_back(id, e);
        continue;
      }
      for (std::uint32_t k = 0; k < e; ++k) t *= it->second;
    }
    Scalar r;
    r.terms_.emplace_back(std::move(rest), Rational(1));
    out += t * r;
  }
  return out;
}

std::string Scalar::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::tuple<unsigned, std::string, const Rational*>> shown;
  for (auto& [m, c] : terms_) shown.emplace_back(m.degree(), m.to_string(), &c);
  std::sort(shown.begin(), shown.end(),
            [](auto& a, auto& b) { return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b)); });
  std::string out;
  bool first = true;
  for (auto& [deg, mono, cp] : shown) {
    Rational c = *cp;
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    Rational mag = abs(c);
    if (mono.empty()) {
      out += rational_to_string(mag);
    } else {
      if (mag != 1) out += rational_to_string(mag) + '*';
      out += mono;
    }
  }
  return out;
}

}  // namespace ncp
