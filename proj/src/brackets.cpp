#include "ncp/brackets.hpp"

#include <stdexcept>

#include "ncp/parallel.hpp"

namespace ncp {

std::string to_string(Part p) { return p == Part::id ? "id" : "(12)"; }

BracketSpec::BracketSpec(BracketKind kind, AlphabetPtr al) : kind_(kind), al_(std::move(al)) {
  if (!al_) throw std::invalid_argument("bracket spec needs a generator list");
  table_.resize(al_->size() * al_->size());
}

void BracketSpec::set_upper(int i, int j, const SweedlerElem& v) {
  int g = generators();
  if (i < 1 || j < 1 || i > g || j > g) throw std::out_of_range("bracket entry index out of range");
  if (i > j) throw std::invalid_argument("bracket entries are stored for i <= j only");
  auto flipped = -flip12(v);
  if (i == j && !(flipped == v))
    throw std::invalid_argument("non-skew table entry {" + al_->name(i) + "," + al_->name(j) + "}");
  table_[(i - 1) * g + (j - 1)] = v;
  table_[(j - 1) * g + (i - 1)] = flipped;
}

BracketSpec BracketSpec::from_upper(BracketKind kind, AlphabetPtr al, const std::map<std::pair<int, int>, SweedlerElem>& entries) {
  BracketSpec s(kind, std::move(al));
  for (auto& [ij, v] : entries) s.set_upper(ij.first, ij.second, v);
  return s;
}

BracketSpec BracketSpec::from_full(BracketKind kind, AlphabetPtr al, const std::function<SweedlerElem(int, int)>& entry) {
  BracketSpec s(kind, std::move(al));
  int g = s.generators();
  for (int i = 1; i <= g; ++i)
    for (int j = i; j <= g; ++j) {
      auto v = entry(i, j);
      if (!(entry(j, i) == -flip12(v)))
        throw std::invalid_argument("non-skew table entry {" + s.al_->name(i) + "," + s.al_->name(j) + "}");
      s.set_upper(i, j, v);
    }
  return s;
}

BracketSpec BracketSpec::with_entry(int i, int j, const SweedlerElem& v) const {
  BracketSpec s = *this;
  s.set_upper(i, j, v);
  return s;
}

bool BracketSpec::is_zero() const {
  for (auto& e : table_)
    if (!e.is_zero()) return false;
  return true;
}

bool BracketSpec::has_sym_parts() const {
  for (auto& e : table_)
    for (auto& [k, c] : e)
      if (!k.sym.empty()) return true;
  return false;
}

CoupledPair::CoupledPair(BracketSpec id_part, BracketSpec twelve_part) : id(std::move(id_part)), twelve(std::move(twelve_part)) {
  if (id.kind() != BracketKind::RightDouble || twelve.kind() != BracketKind::Double)
    throw std::invalid_argument("coupled pair needs (right double, double) brackets");
  check_same_alphabet(id.alphabet(), twelve.alphabet());
}

CoupledPair CoupledPair::zero(AlphabetPtr al) {
  return CoupledPair(BracketSpec(BracketKind::RightDouble, al), BracketSpec(BracketKind::Double, al));
}

// Closed forms over letter pairs (p, q) with H = {{u_p, w_q}}:
//   double:       w_{<q} H' u_{>p}  #  u_{<p} H'' w_{>q}
//   right double: u_{<p} H' u_{>p}  #  w_{<q} H'' w_{>q}
void add_word_bracket(const BracketSpec& s, const Word& u, const Word& w, const Scalar& c, Accumulator<SweedlerKey>& acc) {
  if (c.is_zero()) return;
  bool dbl = s.kind() == BracketKind::Double;
  for (size_t p = 0; p < u.size(); ++p) {
    Word u_lo = u.slice(0, p), u_hi = u.slice(p + 1);
    for (size_t q = 0; q < w.size(); ++q) {
      const auto& h = s.table(u[p], w[q]);
      if (h.is_zero()) continue;
      Word w_lo = w.slice(0, q), w_hi = w.slice(q + 1);
      for (auto& [k, coef] : h) {
        if (dbl)
          acc.add(SweedlerKey{w_lo + k.left + u_hi, u_lo + k.right + w_hi, k.sym}, c * coef);
        else
          acc.add(SweedlerKey{u_lo + k.left + u_hi, w_lo + k.right + w_hi, k.sym}, c * coef);
      }
    }
  }
}

SweedlerElem word_bracket(const BracketSpec& s, const Word& u, const Word& w) {
  Accumulator<SweedlerKey> acc;
  add_word_bracket(s, u, w, Scalar(1), acc);
  return acc.finish();
}

SweedlerElem eval_bracket(const BracketSpec& s, const NCPoly& a, const NCPoly& b) {
  if (a.alphabet()) check_same_alphabet(s.alphabet(), a.alphabet());
  if (b.alphabet()) check_same_alphabet(s.alphabet(), b.alphabet());
  Accumulator<SweedlerKey> acc;
  for (auto& [u, ca] : a.terms())
    for (auto& [w, cb] : b.terms()) add_word_bracket(s, u, w, ca * cb, acc);
  return acc.finish();
}

namespace {

// {u, nu} on one word and one necklace; extra multiplies the S-part.
void add_word_necklace(const BracketSpec& s, const Word& u, const Necklace& nu, const SymMonomial& extra, const Scalar& c,
                       Accumulator<WordSymKey>& acc) {
  if (nu.empty() || u.empty()) return;
  Accumulator<SweedlerKey> b;
  add_word_bracket(s, u, nu.word(), c, b);
  for (auto& [k, coef] : b.finish()) {
    if (s.kind() == BracketKind::RightDouble)
      acc.add(WordSymKey{k.left, SymMonomial::of(Necklace(k.right)) * k.sym * extra}, coef);
    else
      acc.add(WordSymKey{k.right + k.left, k.sym * extra}, coef);
  }
}

void add_word_sym(const BracketSpec& s, const Word& u, const SymMonomial& m, const Scalar& c, Accumulator<WordSymKey>& acc) {
  for (size_t i = 0; i < m.size(); ++i) add_word_necklace(s, u, m.factors()[i], m.without(i), c, acc);
}

void add_necklace_necklace(const BracketSpec& s, const Necklace& f, const Necklace& g, const SymMonomial& extra, const Scalar& c,
                           Accumulator<SymMonomial>& acc) {
  if (f.empty() || g.empty()) return;
  Accumulator<SweedlerKey> b;
  add_word_bracket(s, f.word(), g.word(), c, b);
  for (auto& [k, coef] : b.finish()) {
    if (s.kind() == BracketKind::RightDouble)
      acc.add(SymMonomial({Necklace(k.left), Necklace(k.right)}) * k.sym * extra, coef);
    else
      acc.add(SymMonomial::of(Necklace(k.left + k.right)) * k.sym * extra, coef);
  }
}

}  // namespace

WordSymElem reduced_A_Anat(const BracketSpec& s, const NCPoly& a, const SymElem& f) {
  Accumulator<WordSymKey> acc;
  for (auto& [u, ca] : a.terms())
    for (auto& [m, cf] : f) add_word_sym(s, u, m, ca * cf, acc);
  return acc.finish();
}

SymElem reduced_Anat_Anat(const BracketSpec& s, const SymElem& f, const SymElem& g) {
  Accumulator<SymMonomial> acc;
  for (auto& [m, cf] : f)
    for (auto& [n, cg] : g)
      for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < n.size(); ++j)
          add_necklace_necklace(s, m.factors()[i], n.factors()[j], m.without(i) * n.without(j), cf * cg, acc);
  return acc.finish();
}

TripleElem triple_bracket(const CoupledPair& pair, Part x, Part y, Variant v, const NCPoly& a, const NCPoly& b, const NCPoly& c) {
  const BracketSpec& outer = pair.part(y);
  auto inner = eval_bracket(pair.part(x), b, c);
  Accumulator<TripleKey> acc;
  for (auto& [ik, ic] : inner) {
    for (auto& [u, ca] : a.terms()) {
      Scalar coef = ic * ca;
      if (v == Variant::aux) {
        Accumulator<WordSymKey> r;
        add_word_sym(outer, u, ik.sym, coef, r);
        for (auto& [rk, rc] : r.finish()) acc.add(TripleKey{{ik.left, ik.right, rk.word}, rk.sym}, rc);
        continue;
      }
      Accumulator<SweedlerKey> r;
      add_word_bracket(outer, u, v == Variant::left ? ik.left : ik.right, coef, r);
      for (auto& [rk, rc] : r.finish()) {
        if (v == Variant::left)
          acc.add(TripleKey{{rk.left, rk.right, ik.right}, rk.sym * ik.sym}, rc);
        else
          acc.add(TripleKey{{ik.left, rk.left, rk.right}, rk.sym * ik.sym}, rc);
      }
    }
  }
  return acc.finish();
}

namespace {

Permutation P(const char* cyc) { return Permutation::from_cycles(cyc, 3); }

// One summand: perm applied to a triple bracket with rotated arguments.
struct Summand {
  Permutation perm;
  Part x, y;
  Variant v;
  int rot;  // 0: (a,b,c), 1: (b,c,a), 2: (c,a,b)
};

TripleElem sum_of(const CoupledPair& pair, const std::vector<Summand>& terms, const NCPoly& a, const NCPoly& b, const NCPoly& c) {
  const NCPoly* args[3] = {&a, &b, &c};
  TripleElem out;
  for (auto& t : terms) {
    const NCPoly& p = *args[t.rot % 3];
    const NCPoly& q = *args[(t.rot + 1) % 3];
    const NCPoly& r = *args[(t.rot + 2) % 3];
    out += permute(t.perm, triple_bracket(pair, t.x, t.y, t.v, p, q, r));
  }
  return out;
}

constexpr Part I = Part::id;
constexpr Part T = Part::twelve;
constexpr Variant L = Variant::left;
constexpr Variant R = Variant::right;
constexpr Variant X = Variant::aux;

std::vector<Summand> jac_id3_id_terms() {
  return {
      {P("id"), I, I, L, 0},
      {P("(123)"), I, I, L, 1},
      {P("(132)"), I, I, L, 2},
      {P("(12)"), I, I, R, 0},
      {P("(12)") * P("(132)"), I, I, R, 1},
      {P("(12)") * P("(123)"), I, I, R, 2},
      {P("(123)"), I, I, X, 0},
      {P("(123)") * P("(123)"), I, I, X, 1},
      {P("(123)") * P("(132)"), I, I, X, 2},
  };
}

std::vector<Summand> summands(const Permutation& tau) {
  const std::string c = tau.cycles();
  if (c == "id") {
    auto t = jac_id3_id_terms();
    t.push_back({P("(123)"), I, T, X, 0});
    t.push_back({P("(123)") * P("(123)"), I, T, X, 1});
    t.push_back({P("(123)") * P("(132)"), I, T, X, 2});
    return t;
  }
  if (c == "(12)")
    return {
        {P("id"), I, T, L, 0}, {P("(13)"), I, T, R, 1}, {P("(132)"), T, I, L, 2},
        {P("(23)"), T, I, R, 2}, {P("id"), T, I, X, 2}, {P("id"), T, T, X, 2},
    };
  if (c == "(13)")
    return {
        {P("(12)"), I, T, R, 0}, {P("(123)"), T, I, L, 1}, {P("(13)"), T, I, R, 1},
        {P("(132)"), T, I, X, 1}, {P("(132)"), T, T, X, 1}, {P("(132)"), I, T, L, 2},
    };
  if (c == "(23)")
    return {
        {P("id"), T, I, L, 0}, {P("(12)"), T, I, R, 0}, {P("(123)"), T, I, X, 0},
        {P("(123)"), T, T, X, 0}, {P("(123)"), I, T, L, 1}, {P("(23)"), I, T, R, 2},
    };
  if (c == "(123)") return {{P("id"), T, T, L, 0}, {P("(123)"), T, T, L, 1}, {P("(132)"), T, T, L, 2}};
  if (c == "(132)") return {{P("(12)"), T, T, R, 0}, {P("(13)"), T, T, R, 1}, {P("(23)"), T, T, R, 2}};
  throw std::invalid_argument("jac_tau: tau must be a permutation of size 3");
}

}  // namespace

TripleElem jac_tau(const CoupledPair& pair, const Permutation& tau, const NCPoly& a, const NCPoly& b, const NCPoly& c) {
  if (tau.size() != 3) throw std::invalid_argument("jac_tau: tau must be a permutation of size 3");
  return sum_of(pair, summands(tau), a, b, c);
}

TripleElem coupled_identity(const CoupledPair& pair, int k, const NCPoly& a, const NCPoly& b, const NCPoly& c) {
  switch (k) {
    case 1: return jac_tau(pair, Permutation::identity(3), a, b, c);
    case 2: return jac_tau(pair, P("(12)"), a, b, c);
    case 3: return jac_tau(pair, P("(123)"), a, b, c);
  }
  throw std::invalid_argument("coupled identity index must be 1, 2 or 3");
}

TripleElem vdb_jacobiator(const BracketSpec& s, const NCPoly& a, const NCPoly& b, const NCPoly& c) {
  if (s.kind() != BracketKind::Double) throw std::invalid_argument("vdb_jacobiator needs a double bracket");
  CoupledPair pair(BracketSpec(BracketKind::RightDouble, s.alphabet()), s);
  return jac_tau(pair, P("(123)"), a, b, c);
}

TripleElem right_double_jacobiator(const BracketSpec& s, const NCPoly& a, const NCPoly& b, const NCPoly& c) {
  if (s.kind() != BracketKind::RightDouble) throw std::invalid_argument("right_double_jacobiator needs a right double bracket");
  CoupledPair pair(s, BracketSpec(BracketKind::Double, s.alphabet()));
  return sum_of(pair, jac_id3_id_terms(), a, b, c);
}

CoupledReport is_coupled(const CoupledPair& pair, int jobs) {
  const auto& al = pair.alphabet();
  int g = static_cast<int>(al->size());
  size_t n = static_cast<size_t>(g) * g * g;
  std::vector<std::vector<Residual>> slots(n);
  parallel_for(n, jobs, [&](size_t idx) {
    int i = static_cast<int>(idx / (g * g)) + 1, j = static_cast<int>(idx / g % g) + 1, l = static_cast<int>(idx % g) + 1;
    auto a = NCPoly::generator(al, i), b = NCPoly::generator(al, j), c = NCPoly::generator(al, l);
    for (int k = 1; k <= 3; ++k) {
      auto r = coupled_identity(pair, k, a, b, c);
      if (!r.is_zero())
        slots[idx].push_back({"k=" + std::to_string(k) + " (" + al->name(i) + "," + al->name(j) + "," + al->name(l) + ")", r});
    }
  });
  CoupledReport rep;
  rep.checked = 3 * n;
  for (auto& s : slots)
    for (auto& r : s) rep.nonzero.push_back(std::move(r));
  return rep;
}

}  // namespace ncp
