#include "ncp/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ncp {

Permutation::Permutation(std::vector<int> one_line) : img_(std::move(one_line)) {
  std::vector<bool> seen(img_.size() + 1, false);
  for (int v : img_) {
    if (v < 1 || v > static_cast<int>(img_.size()) || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::transposition(int n, int i, int j) {
  auto p = identity(n);
  std::swap(p.img_.at(i - 1), p.img_.at(j - 1));
  return p;
}

Permutation Permutation::from_cycles(std::string_view text, int n) {
  auto p = identity(n);
  if (text == "id" || text.empty()) return p;
  size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("bad cycle notation '" + std::string(text) + "'");
    size_t close = text.find(')', pos);
    if (close == std::string_view::npos) throw std::invalid_argument("unclosed cycle in '" + std::string(text) + "'");
    std::string_view body = text.substr(pos + 1, close - pos - 1);
    std::vector<int> cyc;
    if (body.find(',') != std::string_view::npos) {
      size_t s = 0;
      while (s <= body.size()) {
        size_t e = body.find(',', s);
        if (e == std::string_view::npos) e = body.size();
        cyc.push_back(std::stoi(std::string(body.substr(s, e - s))));
        s = e + 1;
      }
    } else {
      for (char c : body) {
        if (c < '1' || c > '9') throw std::invalid_argument("bad cycle entry in '" + std::string(text) + "'");
        cyc.push_back(c - '0');
      }
    }
    for (int v : cyc)
      if (v < 1 || v > n) throw std::invalid_argument("cycle entry out of range in '" + std::string(text) + "'");
    // apply this cycle after the ones to its right: p = p * c
    std::vector<int> c(n);
    std::iota(c.begin(), c.end(), 1);
    for (size_t k = 0; k < cyc.size(); ++k) c[cyc[k] - 1] = cyc[(k + 1) % cyc.size()];
    p = p * Permutation(c);
    pos = close + 1;
  }
  return p;
}

std::vector<Permutation> Permutation::all(int n) {
  std::vector<Permutation> out;
  auto p = identity(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.img_.begin(), p.img_.end()));
  return out;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.img_.resize(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) r.img_[img_[i] - 1] = static_cast<int>(i + 1);
  return r;
}

int Permutation::sign() const {
  int s = 1;
  std::vector<bool> seen(img_.size(), false);
  for (size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    size_t len = 0;
    for (size_t j = i; !seen[j]; j = img_[j] - 1) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i + 1)) return false;
  return true;
}

Permutation operator*(const Permutation& s, const Permutation& t) {
  if (s.size() != t.size()) throw std::invalid_argument("permutation size mismatch");
  Permutation r;
  r.img_.resize(t.img_.size());
  for (size_t i = 0; i < t.img_.size(); ++i) r.img_[i] = s.img_[t.img_[i] - 1];
  return r;
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
  if (auto c = a.img_.size() <=> b.img_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.img_.begin(), a.img_.end(), b.img_.begin(), b.img_.end());
}

std::string Permutation::to_string() const {
  std::string out = "[";
  for (size_t i = 0; i < img_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(img_[i]);
  }
  return out + "]";
}

std::string Permutation::cycles() const {
  std::string out;
  std::vector<bool> seen(img_.size(), false);
  bool wide = img_.size() > 9;
  for (size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == static_cast<int>(i + 1)) continue;
    out += '(';
    bool first = true;
    for (size_t j = i; !seen[j]; j = img_[j] - 1) {
      seen[j] = true;
      if (wide && !first) out += ',';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "id" : out;
}

Permutation perm_cross(const Permutation& u, const Permutation& v) {
  std::vector<int> img = u.one_line();
  for (int x : v.one_line()) img.push_back(x + u.size());
  return Permutation(std::move(img));
}

Permutation perm_block(const Permutation& tau, const std::vector<int>& sizes) {
  if (static_cast<int>(sizes.size()) != tau.size()) throw std::invalid_argument("perm_block: length mismatch");
  int n = tau.size();
  auto inv = tau.inverse();
  std::vector<int> offset(n + 1, 0);  // offset of target slot j
  for (int j = 1; j <= n; ++j) offset[j] = (j > 1 ? offset[j - 1] + sizes[inv(j - 1) - 1] : 0);
  std::vector<int> img;
  for (int i = 1; i <= n; ++i)
    for (int t = 0; t < sizes[i - 1]; ++t) img.push_back(offset[tau(i)] + t + 1);
  return Permutation(std::move(img));
}

}  // namespace ncp
