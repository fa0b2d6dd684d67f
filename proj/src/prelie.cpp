#include "ncp/prelie.hpp"

#include <stdexcept>

#include "ncp/ybe.hpp"

namespace ncp {

Vec apply(const BilinearStruct& s, Op op, const Vec& a, const Vec& b) {
  const auto& t = op == Op::mu ? s.mu_table : s.br_table;
  Vec out;
  for (auto& [i, ci] : a)
    for (auto& [j, cj] : b) {
      const Vec& v = t[(i - 1) * s.dim + (j - 1)];
      if (!v.is_zero()) out += v * (ci * cj);
    }
  return out;
}

Vec assoc_residual(const BilinearStruct& s, Op op, const Vec& a, const Vec& b, const Vec& c) {
  return apply(s, op, apply(s, op, a, b), c) - apply(s, op, a, apply(s, op, b, c));
}

Vec prelie_residual(const BilinearStruct& s, const Vec& a, const Vec& b, const Vec& c) {
  return assoc_residual(s, Op::br, a, b, c) - assoc_residual(s, Op::br, b, a, c);
}

PplieReport pplie_residuals(const BilinearStruct& s) {
  PplieReport rep;
  auto mu = [&](const Vec& a, const Vec& b) { return apply(s, Op::mu, a, b); };
  auto br = [&](const Vec& a, const Vec& b) { return apply(s, Op::br, a, b); };
  for (int i = 1; i <= s.dim; ++i)
    for (int j = 1; j <= s.dim; ++j)
      for (int k = 1; k <= s.dim; ++k) {
        Vec a = basis(i), b = basis(j), c = basis(k);
        std::string where = " (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
        rep.checked += 4;
        if (!assoc_residual(s, Op::mu, a, b, c).is_zero()) rep.failures.push_back("assoc" + where);
        if (!prelie_residual(s, a, b, c).is_zero()) rep.failures.push_back("prelie" + where);
        if (!(br(mu(a, b), c) == br(mu(b, a), c))) rep.failures.push_back("symmetric {ab,c}" + where);
        if (!(br(a, mu(b, c)) == mu(br(a, b), c) + mu(b, br(a, c)))) rep.failures.push_back("derivation {a,bc}" + where);
      }
  return rep;
}

BracketSpec linear_bracket(const BilinearStruct& s, Op op, BracketKind kind, AlphabetPtr al) {
  if (!al) al = standard_alphabet(s.dim);
  const auto& t = op == Op::mu ? s.mu_table : s.br_table;
  return BracketSpec::from_full(kind, al, [&](int i, int j) {
    Accumulator<SweedlerKey> acc;
    for (auto& [k, c] : t[(i - 1) * s.dim + (j - 1)]) acc.add(SweedlerKey{Word{}, Word::letter(k), {}}, c);
    for (auto& [k, c] : t[(j - 1) * s.dim + (i - 1)]) acc.add(SweedlerKey{Word::letter(k), Word{}, {}}, -c);
    return acc.finish();
  });
}

CoupledPair linear_pair(const BilinearStruct& s, AlphabetPtr al) {
  if (!al) al = standard_alphabet(s.dim);
  return CoupledPair(linear_bracket(s, Op::br, BracketKind::RightDouble, al), linear_bracket(s, Op::mu, BracketKind::Double, al));
}

BilinearStruct structure_of(const CoupledPair& pair) {
  int m = static_cast<int>(pair.alphabet()->size());
  BilinearStruct s(m);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      for (auto [part, table] : {std::pair{Part::id, &s.br_table}, std::pair{Part::twelve, &s.mu_table}}) {
        Accumulator<int> acc;
        for (auto& [k, c] : pair.part(part).table(i, j))
          if (k.left.empty() && k.right.size() == 1 && k.sym.empty()) acc.add(k.right[0], c);
        (*table)[(i - 1) * m + (j - 1)] = acc.finish();
      }
    }
  if (!(linear_pair(s, pair.alphabet()) == pair)) throw std::invalid_argument("pair is not of the linear form");
  return s;
}

LinearEquiv thm_linear_equiv(const BilinearStruct& s, int jobs) {
  LinearEquiv r;
  r.coupled = is_coupled(linear_pair(s), jobs).ok();
  r.pplie = pplie_residuals(s).ok();
  return r;
}

size_t rem3_mismatches(const BilinearStruct& s) {
  auto spec = linear_bracket(s, Op::mu, BracketKind::Double);
  const auto& al = spec.alphabet();
  size_t bad = 0;
  auto place = [](const Vec& v, int slot) {
    Accumulator<TripleKey> acc;
    for (auto& [k, c] : v) {
      TripleKey key;
      key.w[slot] = Word::letter(k);
      acc.add(key, c);
    }
    return acc.finish();
  };
  for (int i = 1; i <= s.dim; ++i)
    for (int j = 1; j <= s.dim; ++j)
      for (int k = 1; k <= s.dim; ++k) {
        Vec a = basis(i), b = basis(j), c = basis(k);
        auto want = place(assoc_residual(s, Op::mu, b, a, c), 2) + place(assoc_residual(s, Op::mu, a, c, b), 1) +
                    place(assoc_residual(s, Op::mu, c, b, a), 0);
        auto got = vdb_jacobiator(spec, NCPoly::generator(al, i), NCPoly::generator(al, j), NCPoly::generator(al, k));
        if (!(got == want)) ++bad;
      }
  return bad;
}

int upper_index(int n, int i, int j) {
  if (i < 1 || j > n || i >= j) throw std::out_of_range("not a strictly upper triangular position");
  int idx = 0;
  for (int r = 1; r < i; ++r) idx += n - r;
  return idx + (j - i);
}

BilinearStruct example_upper_triangular(int n, const std::vector<Scalar>& x) {
  if (n < 4) throw std::invalid_argument("need n >= 4");
  int d = n - 3;
  if (static_cast<int>(x.size()) != n - d) throw std::invalid_argument("x needs one coefficient per E_{i,i+n-3}");
  int m = n * (n - 1) / 2;
  using M = std::vector<std::vector<Scalar>>;
  auto zero = [&] { return M(n, std::vector<Scalar>(n)); };
  auto mul = [&](const M& a, const M& b) {
    M o = zero();
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (!a[i][k].is_zero())
          for (int j = 0; j < n; ++j)
            if (!b[k][j].is_zero()) o[i][j] += a[i][k] * b[k][j];
    return o;
  };
  auto unit = [&](int i, int j) {
    M o = zero();
    o[i - 1][j - 1] = Scalar(1);
    return o;
  };
  auto to_vec = [&](const M& a) {
    Accumulator<int> acc;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (!a[i - 1][j - 1].is_zero()) {
          if (j <= i) throw std::logic_error("product left the upper triangle");
          acc.add(upper_index(n, i, j), a[i - 1][j - 1]);
        }
    return acc.finish();
  };
  M X = zero();
  for (int i = 1; i + d <= n; ++i) X[i - 1][i - 1 + d] = x[i - 1];
  std::vector<std::pair<int, int>> pos;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pos.emplace_back(i, j);
  BilinearStruct s(m);
  for (auto [i, j] : pos)
    for (auto [k, l] : pos) {
      M a = unit(i, j), b = unit(k, l);
      M ab = mul(a, b);
      M xb = mul(X, b), bx = mul(b, X);
      M br = mul(a, xb);
      M t = mul(a, bx);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) br[r][c] -= t[r][c];
      s.mu_at(upper_index(n, i, j), upper_index(n, k, l)) = to_vec(ab);
      s.br_at(upper_index(n, i, j), upper_index(n, k, l)) = to_vec(br);
    }
  return s;
}

BilinearStruct example_triple_zero(const BilinearStruct& m) {
  BilinearStruct s = m;
  s.br_table = m.mu_table;
  return s;
}

BilinearStruct heisenberg() {
  BilinearStruct s(3);
  s.mu_at(1, 2) = basis(3);
  s.mu_at(2, 1) = -basis(3);
  return s;
}

std::string render(const BilinearStruct& s) {
  std::string out = "dim " + std::to_string(s.dim) + "\n";
  auto vec = [](const Vec& v) {
    std::vector<std::pair<std::string, Scalar>> t;
    for (auto& [k, c] : v) t.emplace_back("e" + std::to_string(k), c);
    return render_terms(t);
  };
  for (auto [name, op] : {std::pair{"mu", Op::mu}, std::pair{"br", Op::br}})
    for (int i = 1; i <= s.dim; ++i)
      for (int j = 1; j <= s.dim; ++j) {
        const Vec& v = op == Op::mu ? s.mu_at(i, j) : s.br_at(i, j);
        if (!v.is_zero()) out += std::string(name) + "(" + std::to_string(i) + "," + std::to_string(j) + ") = " + vec(v) + "\n";
      }
  return out;
}

}  // namespace ncp
