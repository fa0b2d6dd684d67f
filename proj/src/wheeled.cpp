#include "ncp/wheeled.hpp"

#include <stdexcept>

#include "ncp/parallel.hpp"

namespace ncp {

std::strong_ordering operator<=>(const OKey& a, const OKey& b) {
  if (auto c = a.words.size() <=> b.words.size(); c != 0) return c;
  if (auto c = std::lexicographical_compare_three_way(a.words.begin(), a.words.end(), b.words.begin(), b.words.end()); c != 0)
    return c;
  if (auto c = a.sym <=> b.sym; c != 0) return c;
  return a.perm <=> b.perm;
}

OElem o_unit() { return OElem(OKey{{}, {}, Permutation::identity(0)}); }

OElem o_word(const Word& w, const SymMonomial& f) { return OElem(OKey{{w}, f, Permutation::identity(1)}); }

OElem o_poly(const NCPoly& p) {
  return p.terms().map_keys([](const Word& w) { return OKey{{w}, {}, Permutation::identity(1)}; });
}

OElem o_sym(const SymElem& f) {
  return f.map_keys([](const SymMonomial& m) { return OKey{{}, m, Permutation::identity(0)}; });
}

int o_degree(const OElem& a) {
  int d = -1;
  for (auto& [k, c] : a) {
    if (d >= 0 && k.degree() != d) throw std::invalid_argument("element is not homogeneous");
    d = k.degree();
  }
  return d;
}

OElem o_mul(const OElem& a, const OElem& b) {
  Accumulator<OKey> acc;
  for (auto& [ka, ca] : a)
    for (auto& [kb, cb] : b) {
      OKey k;
      k.words = ka.words;
      k.words.insert(k.words.end(), kb.words.begin(), kb.words.end());
      k.sym = ka.sym * kb.sym;
      k.perm = perm_cross(ka.perm, kb.perm);
      acc.add(std::move(k), ca * cb);
    }
  return acc.finish();
}

OElem act(const Permutation& u, const OElem& a, const Permutation& v) {
  return a.map_keys([&](const OKey& k) {
    if (k.degree() != u.size() || k.degree() != v.size()) throw std::invalid_argument("action: degree mismatch");
    return OKey{permute_key(u, k.words), k.sym, u * k.perm * v};
  });
}

OElem ad(const Permutation& u, const OElem& a) { return act(u, a, u.inverse()); }

namespace {

void add_pi(const OKey& k, const Scalar& c, Accumulator<OKey>& acc) {
  int n = k.degree();
  if (n == 0) return;
  const auto& u = k.perm;
  OKey r;
  std::vector<int> img(n - 1);
  if (u(1) == 1) {
    r.words.assign(k.words.begin() + 1, k.words.end());
    r.sym = SymMonomial::of(Necklace(k.words[0])) * k.sym;
    for (int i = 1; i < n; ++i) img[i - 1] = u(i + 1) - 1;
  } else {
    int m = u(1);
    for (int i = 2; i <= n; ++i) r.words.push_back(i == m ? k.words[0] + k.words[m - 1] : k.words[i - 1]);
    r.sym = k.sym;
    for (int i = 2; i <= n; ++i) img[i - 2] = (u(i) != 1 ? u(i) : m) - 1;
  }
  r.perm = Permutation(std::move(img));
  acc.add(std::move(r), c);
}

std::vector<Word> with_replaced(const std::vector<Word>& w, size_t i, const Word& x) {
  auto out = w;
  out[i] = x;
  return out;
}

std::vector<Word> concat(const std::vector<Word>& a, const std::vector<Word>& b) {
  auto out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

void add_dt_key(const CoupledPair& pair, const OKey& ka, const OKey& kb, const Scalar& c, Accumulator<OKey>& acc) {
  int n = ka.degree(), m = kb.degree();
  Permutation base = perm_cross(ka.perm, kb.perm);
  const SymMonomial fg = ka.sym * kb.sym;
  // word against word, both kinds
  for (int l = 0; l < n; ++l) {
    for (int r = 0; r < m; ++r) {
      for (Part part : {Part::id, Part::twelve}) {
        Accumulator<SweedlerKey> h;
        add_word_bracket(pair.part(part), ka.words[l], kb.words[r], c, h);
        auto hv = h.finish();
        if (hv.is_zero()) continue;
        Permutation perm = part == Part::id ? base : Permutation::transposition(n + m, l + 1, n + r + 1) * base;
        for (auto& [hk, hc] : hv)
          acc.add(OKey{concat(with_replaced(ka.words, l, hk.left), with_replaced(kb.words, r, hk.right)), hk.sym * fg, perm}, hc);
      }
    }
  }
  // words of a against g, minus words of b against f
  for (Part part : {Part::id, Part::twelve}) {
    const auto& s = pair.part(part);
    if (!kb.sym.empty())
      for (int l = 0; l < n; ++l) {
        auto r = reduced_A_Anat(s, NCPoly::word(s.alphabet(), ka.words[l], c), SymElem(kb.sym));
        for (auto& [rk, rc] : r) acc.add(OKey{concat(with_replaced(ka.words, l, rk.word), kb.words), rk.sym * ka.sym, base}, rc);
      }
    if (!ka.sym.empty())
      for (int j = 0; j < m; ++j) {
        auto r = reduced_A_Anat(s, NCPoly::word(s.alphabet(), kb.words[j], c), SymElem(ka.sym));
        for (auto& [rk, rc] : r) acc.add(OKey{concat(ka.words, with_replaced(kb.words, j, rk.word)), rk.sym * kb.sym, base}, -rc);
      }
    if (!ka.sym.empty() && !kb.sym.empty()) {
      auto r = reduced_Anat_Anat(s, SymElem(ka.sym, c), SymElem(kb.sym));
      for (auto& [rk, rc] : r) acc.add(OKey{concat(ka.words, kb.words), rk, base}, rc);
    }
  }
}

}  // namespace

OElem pi(const OElem& a) {
  Accumulator<OKey> acc;
  for (auto& [k, c] : a) add_pi(k, c, acc);
  return acc.finish();
}

OElem dt_bracket(const CoupledPair& pair, const OElem& a, const OElem& b) {
  Accumulator<OKey> acc;
  for (auto& [ka, ca] : a)
    for (auto& [kb, cb] : b) add_dt_key(pair, ka, kb, ca * cb, acc);
  return acc.finish();
}

OElem dt_jacobiator(const CoupledPair& pair, const OElem& a, const OElem& b, const OElem& c) {
  int da = o_degree(a), db = o_degree(b), dc = o_degree(c);
  if (da < 0 || db < 0 || dc < 0) return {};
  auto t1 = dt_bracket(pair, a, dt_bracket(pair, b, c));
  auto t2 = ad(perm_block(Permutation::from_cycles("(123)", 3), {db, dc, da}), dt_bracket(pair, b, dt_bracket(pair, c, a)));
  auto t3 = ad(perm_block(Permutation::from_cycles("(132)", 3), {dc, da, db}), dt_bracket(pair, c, dt_bracket(pair, a, b)));
  return t1 + t2 + t3;
}

OElem jac_decomposition(const CoupledPair& pair, const NCPoly& a, const NCPoly& b, const NCPoly& c) {
  OElem out;
  for (auto& tau : Permutation::all(3)) {
    auto j = jac_tau(pair, tau, a, b, c);
    out += j.map_keys([&](const TripleKey& k) { return OKey{{k.w[0], k.w[1], k.w[2]}, k.sym, tau}; });
  }
  return out;
}

bool lemma2_check(const CoupledPair& pair, const NCPoly& a, const NCPoly& b, const NCPoly& c) {
  return dt_jacobiator(pair, o_poly(a), o_poly(b), o_poly(c)) == jac_decomposition(pair, a, b, c);
}

CoupledPair extract_pair(const CoupledPair& pair) {
  const auto& al = pair.alphabet();
  int g = static_cast<int>(al->size());
  auto id2 = Permutation::identity(2);
  std::vector<SweedlerElem> tid(g * g), t12(g * g);
  for (int i = 1; i <= g; ++i)
    for (int j = 1; j <= g; ++j) {
      auto v = dt_bracket(pair, o_word(Word::letter(i)), o_word(Word::letter(j)));
      Accumulator<SweedlerKey> a_id, a_12;
      for (auto& [k, c] : v) {
        if (k.degree() != 2) throw std::logic_error("extract_pair: bracket of generators is not of degree 2");
        (k.perm == id2 ? a_id : a_12).add(SweedlerKey{k.words[0], k.words[1], k.sym}, c);
      }
      tid[(i - 1) * g + j - 1] = a_id.finish();
      t12[(i - 1) * g + j - 1] = a_12.finish();
    }
  auto get = [g](const std::vector<SweedlerElem>& t) { return [&t, g](int i, int j) { return t[(i - 1) * g + j - 1]; }; };
  return CoupledPair(BracketSpec::from_full(BracketKind::RightDouble, al, get(tid)),
                     BracketSpec::from_full(BracketKind::Double, al, get(t12)));
}

OElem random_oelem(std::mt19937_64& rng, int generators, int degree, int max_terms) {
  std::uniform_int_distribution<int> nterms(1, max_terms), coef(-3, 3), gen(1, generators), len(0, 2), nsym(0, 2), nlen(0, 2);
  Accumulator<OKey> acc;
  int t = nterms(rng);
  for (int k = 0; k < t; ++k) {
    OKey key;
    for (int i = 0; i < degree; ++i) {
      Word w;
      for (int l = len(rng); l > 0; --l) w += Word::letter(gen(rng));
      key.words.push_back(w);
    }
    std::vector<Necklace> neck;
    for (int s = nsym(rng); s > 0; --s) {
      Word w;
      for (int l = nlen(rng); l > 0; --l) w += Word::letter(gen(rng));
      neck.emplace_back(w);
    }
    key.sym = SymMonomial(neck);
    auto all = Permutation::all(degree);
    key.perm = all[std::uniform_int_distribution<size_t>(0, all.size() - 1)(rng)];
    int c = 0;
    while (c == 0) c = coef(rng);
    acc.add(std::move(key), Scalar(c));
  }
  return acc.finish();
}

namespace {

Permutation block(const char* cyc, std::vector<int> sizes) {
  return perm_block(Permutation::from_cycles(cyc, static_cast<int>(sizes.size())), sizes);
}

Permutation random_perm(std::mt19937_64& rng, int n) {
  auto all = Permutation::all(n);
  return all[std::uniform_int_distribution<size_t>(0, all.size() - 1)(rng)];
}

}  // namespace

AxiomReport dt_axiom_check(const CoupledPair& pair, size_t samples, std::uint64_t seed, int jobs) {
  int g = static_cast<int>(pair.alphabet()->size());
  std::vector<std::vector<std::string>> fails(samples);
  std::vector<size_t> counts(samples, 0);
  parallel_for(samples, jobs, [&](size_t s) {
    // one stream per sample keeps results independent of scheduling
    std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * (s + 1)));
    std::uniform_int_distribution<int> deg(0, 2);
    int na = deg(rng), nb = deg(rng), nc = deg(rng);
    auto a = random_oelem(rng, g, na), b = random_oelem(rng, g, nb), c = random_oelem(rng, g, nc);
    auto br = [&](const OElem& x, const OElem& y) { return dt_bracket(pair, x, y); };
    auto fail = [&](const std::string& what) {
      fails[s].push_back("sample " + std::to_string(s) + " degrees (" + std::to_string(na) + "," + std::to_string(nb) + "," +
                         std::to_string(nc) + "): " + what);
    };
    auto check = [&](bool ok, const char* what) {
      ++counts[s];
      if (!ok) fail(what);
    };
    auto ab = br(a, b);
    check(br(b, a) == -ad(block("(12)", {na, nb}), ab), "skew");
    check(br(a, b * c) == ab * c + ad(block("(12)", {nb, na, nc}), b * br(a, c)), "Leibniz (second argument)");
    check(br(a * b, c) == ad(block("(23)", {na, nc, nb}), br(a, c) * b) + a * br(b, c), "Leibniz (first argument)");
    if (na > 0) check(br(pi(a), b) == pi(ab), "pi-equivariance (first argument)");
    if (nb > 0) check(br(a, pi(b)) == -ad(block("(12)", {nb - 1, na}), pi(br(b, a))), "pi-equivariance (second argument)");
    auto u1 = random_perm(rng, na), u2 = random_perm(rng, na), v1 = random_perm(rng, nb), v2 = random_perm(rng, nb);
    check(br(act(u1, a, u2), act(v1, b, v2)) == act(perm_cross(u1, v1), ab, perm_cross(u2, v2)), "bimodule morphism");
  });
  AxiomReport rep;
  rep.samples = samples;
  for (size_t s = 0; s < samples; ++s) {
    rep.checks += counts[s];
    for (auto& f : fails[s]) rep.failures.push_back(f);
  }
  return rep;
}

std::string render(const Alphabet& al, const OElem& a) {
  std::vector<std::pair<std::string, Scalar>> t;
  for (auto& [k, c] : a) {
    std::string s = "(";
    for (size_t i = 0; i < k.words.size(); ++i) s += (i ? "," : "") + al.render(k.words[i]);
    s += ")⊗" + (k.sym.empty() ? std::string("1") : render(al, k.sym)) + "⊗perm" + k.perm.to_string();
    t.emplace_back(s, c);
  }
  return render_terms(t);
}

}  // namespace ncp
