#include "ncp/freealg.hpp"

#include <stdexcept>

namespace ncp {

void check_same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw std::invalid_argument("generator-list mismatch");
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  if (!al_) al_ = o.al_;
  if (o.al_) check_same_alphabet(al_, o.al_);
  terms_ += o.terms_;
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  if (!al_) al_ = o.al_;
  if (o.al_) check_same_alphabet(al_, o.al_);
  terms_ -= o.terms_;
  return *this;
}

std::string NCPoly::to_string() const {
  if (!al_) return terms_.is_zero() ? "0" : "<no alphabet>";
  return render(*al_, terms_);
}

NCPoly nc_mul(const NCPoly& p, const NCPoly& q) {
  check_same_alphabet(p.alphabet(), q.alphabet());
  Accumulator<Word> acc;
  for (auto& [u, a] : p.terms())
    for (auto& [v, b] : q.terms()) acc.add(u + v, a * b);
  return NCPoly(p.alphabet(), acc.finish());
}

SymElem sym_mul(const SymElem& f, const SymElem& g) {
  Accumulator<SymMonomial> acc;
  for (auto& [m, a] : f)
    for (auto& [n, b] : g) acc.add(m * n, a * b);
  return acc.finish();
}

TensorKey permute_key(const Permutation& s, const TensorKey& k) {
  if (s.size() != static_cast<int>(k.size())) throw std::invalid_argument("permute: size mismatch");
  TensorKey out(k.size());
  for (int i = 1; i <= s.size(); ++i) out[s(i) - 1] = k[i - 1];
  return out;
}

Tensor permute(const Permutation& s, const Tensor& t) {
  return t.map_keys([&](const TensorKey& k) { return permute_key(s, k); });
}

SweedlerElem flip12(const SweedlerElem& e) {
  return e.map_keys([](const SweedlerKey& k) { return SweedlerKey{k.right, k.left, k.sym}; });
}

TripleElem permute(const Permutation& s, const TripleElem& t) {
  if (s.size() != 3) throw std::invalid_argument("permute: size mismatch");
  if (s.is_identity()) return t;
  return t.map_keys([&](const TripleKey& k) {
    TripleKey o;
    o.sym = k.sym;
    for (int i = 1; i <= 3; ++i) o.w[s(i) - 1] = k.w[i - 1];
    return o;
  });
}

std::string render_terms(const std::vector<std::pair<std::string, Scalar>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto& [key, c] : terms) {
    std::string body;
    bool neg = false;
    if (c.is_monomial()) {
      auto& [mono, q] = c.terms()[0];
      neg = q < 0;
      Rational mag = abs(q);
      if (mag != 1) body = rational_to_string(mag);
      if (!mono.empty()) body += (body.empty() ? "" : "*") + mono.to_string();
    } else {
      body = "(" + c.to_string() + ")";
    }
    if (!key.empty()) body += (body.empty() ? "" : "*") + key;
    if (body.empty()) body = "1";
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    out += body;
    first = false;
  }
  return out;
}

std::string render(const Alphabet& al, const Linear<Word>& p) {
  std::vector<std::pair<std::string, Scalar>> t;
  for (auto& [w, c] : p) t.emplace_back(w.empty() ? "" : al.render(w), c);
  return render_terms(t);
}

std::string render(const Alphabet& al, const SymElem& f) {
  std::vector<std::pair<std::string, Scalar>> t;
  for (auto& [m, c] : f) t.emplace_back(render(al, m), c);
  return render_terms(t);
}

std::string render(const Alphabet& al, const Tensor& tensor) {
  std::vector<std::pair<std::string, Scalar>> t;
  for (auto& [k, c] : tensor) {
    std::string s;
    for (size_t i = 0; i < k.size(); ++i) s += (i ? "#" : "") + al.render(k[i]);
    t.emplace_back(s, c);
  }
  return render_terms(t);
}

std::string render_key(const Alphabet& al, const SweedlerKey& k) {
  std::string s = al.render(k.left) + "#" + al.render(k.right);
  if (!k.sym.empty()) s += "." + render(al, k.sym);
  return s;
}

std::string render_key(const Alphabet& al, const TripleKey& k) {
  std::string s = al.render(k.w[0]) + "#" + al.render(k.w[1]) + "#" + al.render(k.w[2]);
  if (!k.sym.empty()) s += "." + render(al, k.sym);
  return s;
}

std::string render(const Alphabet& al, const SweedlerElem& e) {
  std::vector<std::pair<std::string, Scalar>> t;
  for (auto& [k, c] : e) t.emplace_back(render_key(al, k), c);
  return render_terms(t);
}

std::string render(const Alphabet& al, const TripleElem& e) {
  std::vector<std::pair<std::string, Scalar>> t;
  for (auto& [k, c] : e) t.emplace_back(render_key(al, k), c);
  return render_terms(t);
}

std::string render(const Alphabet& al, const WordSymElem& e) {
  std::vector<std::pair<std::string, Scalar>> t;
  for (auto& [k, c] : e) {
    std::string s = al.render(k.word);
    if (!k.sym.empty()) s += "." + render(al, k.sym);
    t.emplace_back(s, c);
  }
  return render_terms(t);
}

}  // namespace ncp
