#include "ncp/repn.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

#include "ncp/parallel.hpp"

namespace ncp {

namespace {

CommMonomial merge(const CommMonomial& a, const CommMonomial& b) {
  CommMonomial out(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), out.begin());
  return out;
}

void check_index(int i, int N) {
  if (i < 1 || i > N) throw std::out_of_range("matrix index " + std::to_string(i) + " outside 1.." + std::to_string(N));
}

}  // namespace

CommPoly entry(const EntryVar& v) { return CommPoly(CommMonomial{v.code()}); }
CommPoly comm_constant(const Scalar& c) { return CommPoly(CommMonomial{}, c); }

CommPoly comm_mul(const CommPoly& a, const CommPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Accumulator<CommMonomial> acc;
  for (auto& [ma, ca] : a)
    for (auto& [mb, cb] : b) acc.add(merge(ma, mb), ca * cb);
  return acc.finish();
}

CommPoly rep_poly(const Word& w, int i, int j, int N) {
  check_index(i, N);
  check_index(j, N);
  if (w.empty()) return i == j ? comm_constant(1) : CommPoly{};
  // cur[k]: sum over paths from i ending at index k+1
  std::vector<CommPoly> cur(N);
  cur[i - 1] = comm_constant(1);
  for (size_t p = 0; p < w.size(); ++p) {
    int gen = w[p];
    std::vector<CommPoly> next(N);
    bool last = p + 1 == w.size();
    for (int k = 1; k <= N; ++k) {
      if (cur[k - 1].is_zero()) continue;
      for (int k2 = 1; k2 <= N; ++k2) {
        if (last && k2 != j) continue;
        auto x = EntryVar{gen, k, k2}.code();
        next[k2 - 1] += cur[k - 1].map_keys([&](const CommMonomial& m) {
          CommMonomial r = m;
          r.insert(std::upper_bound(r.begin(), r.end(), x), x);
          return r;
        });
      }
    }
    cur = std::move(next);
  }
  return cur[j - 1];
}

CommPoly trace_poly(const SymMonomial& f, int N) {
  CommPoly out = comm_constant(1);
  for (auto& n : f.factors()) {
    CommPoly tr;
    if (n.empty())
      tr = comm_constant(N);
    else
      for (int i = 1; i <= N; ++i) tr += rep_poly(n.word(), i, i, N);
    out = comm_mul(out, tr);
  }
  return out;
}

CommPoly o_entry(const OKey& k, const std::vector<int>& I, const std::vector<int>& J, int N) {
  int n = k.degree();
  if (static_cast<int>(I.size()) != n || static_cast<int>(J.size()) != n)
    throw std::invalid_argument("o_entry: index tuples must have length " + std::to_string(n));
  auto uinv = k.perm.inverse();
  CommPoly out = trace_poly(k.sym, N);
  for (int t = 1; t <= n && !out.is_zero(); ++t) out = comm_mul(out, rep_poly(k.words[t - 1], I[uinv(t) - 1], J[t - 1], N));
  return out;
}

CommPoly o_entry(const OElem& a, const std::vector<int>& I, const std::vector<int>& J, int N) {
  CommPoly out;
  for (auto& [k, c] : a) out += o_entry(k, I, J, N) * c;
  return out;
}

InducedBracket::InducedBracket(const CoupledPair& pair, int N) : g_(static_cast<int>(pair.alphabet()->size())), N_(N) {
  if (N < 1 || N > 255) throw std::invalid_argument("N must be in 1..255");
  int V = variables();
  cache_.resize(static_cast<size_t>(V) * V);
  for (int a = 0; a < V; ++a)
    for (int b = 0; b < V; ++b) {
      EntryVar x = var(a), y = var(b);
      CommPoly v;
      for (auto& [k, c] : pair.id.table(x.gen, y.gen))
        v += comm_mul(comm_mul(rep_poly(k.left, x.i, x.j, N), rep_poly(k.right, y.i, y.j, N)), trace_poly(k.sym, N)) * c;
      for (auto& [k, c] : pair.twelve.table(x.gen, y.gen))
        v += comm_mul(comm_mul(rep_poly(k.left, y.i, x.j, N), rep_poly(k.right, x.i, y.j, N)), trace_poly(k.sym, N)) * c;
      cache_[a * V + b] = std::move(v);
    }
}

EntryVar InducedBracket::var(int index) const {
  int NN = N_ * N_;
  return {index / NN + 1, (index % NN) / N_ + 1, index % N_ + 1};
}

int InducedBracket::index(const EntryVar& v) const {
  if (v.gen < 1 || v.gen > g_) throw std::out_of_range("generator index out of range");
  check_index(v.i, N_);
  check_index(v.j, N_);
  return (v.gen - 1) * N_ * N_ + (v.i - 1) * N_ + (v.j - 1);
}

CommPoly InducedBracket::operator()(const CommPoly& p, const CommPoly& q) const {
  Accumulator<CommMonomial> acc;
  int V = variables();
  for (auto& [m1, c1] : p)
    for (auto& [m2, c2] : q) {
      Scalar c12 = c1 * c2;
      for (size_t s = 0; s < m1.size(); ++s) {
        if (s && m1[s] == m1[s - 1]) continue;
        size_t e1 = s;
        while (e1 < m1.size() && m1[e1] == m1[s]) ++e1;
        CommMonomial r1 = m1;
        r1.erase(r1.begin() + s);
        int ia = index(EntryVar::decode(m1[s]));
        for (size_t t = 0; t < m2.size(); ++t) {
          if (t && m2[t] == m2[t - 1]) continue;
          size_t e2 = t;
          while (e2 < m2.size() && m2[e2] == m2[t]) ++e2;
          const CommPoly& br = cache_[ia * V + index(EntryVar::decode(m2[t]))];
          if (br.is_zero()) continue;
          CommMonomial r2 = m2;
          r2.erase(r2.begin() + t);
          CommMonomial rest = merge(r1, r2);
          Scalar mult = c12 * Scalar(static_cast<long>((e1 - s) * (e2 - t)));
          for (auto& [mb, cb] : br) acc.add(merge(rest, mb), mult * cb);
        }
      }
    }
  return acc.finish();
}

CommPoly induced_bracket(const CoupledPair& pair, int N, const CommPoly& p, const CommPoly& q) {
  return InducedBracket(pair, N)(p, q);
}

CommPoly dt_induced(const CoupledPair& pair, const OElem& a, const OElem& b, const std::vector<int>& I,
                    const std::vector<int>& J, const std::vector<int>& K, const std::vector<int>& L, int N) {
  if (I.size() != J.size() || K.size() != L.size()) throw std::invalid_argument("dt_induced: index tuple mismatch");
  std::vector<int> IK = I, JL = J;
  IK.insert(IK.end(), K.begin(), K.end());
  JL.insert(JL.end(), L.begin(), L.end());
  return o_entry(dt_bracket(pair, a, b), IK, JL, N);
}

namespace {

std::string var_name(const Alphabet& al, const EntryVar& v) {
  if (v.i < 10 && v.j < 10) return al.name(v.gen) + "_" + std::to_string(v.i) + std::to_string(v.j);
  return al.name(v.gen) + "_{" + std::to_string(v.i) + "," + std::to_string(v.j) + "}";
}

}  // namespace

OracleReport jacobi_oracle(const CoupledPair& pair, int N, int degree, size_t samples, std::uint64_t seed, int jobs) {
  InducedBracket br(pair, N);
  const auto& al = *pair.alphabet();
  int V = br.variables();
  std::vector<std::array<int, 3>> triples;
  for (int p = 0; p < V; ++p)
    for (int q = p + 1; q < V; ++q)
      for (int r = q + 1; r < V; ++r) triples.push_back({p, q, r});

  std::vector<std::array<CommPoly, 3>> sampled;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, V - 1), deg(1, std::max(1, degree)), coef(-2, 2);
  for (size_t s = 0; s < samples; ++s) {
    std::array<CommPoly, 3> t;
    for (auto& e : t) {
      int terms = 1 + static_cast<int>(rng() % 2);
      for (int k = 0; k < terms; ++k) {
        CommPoly m = comm_constant(1);
        for (int d = deg(rng); d > 0; --d) m = comm_mul(m, entry(br.var(pick(rng))));
        int c = coef(rng);
        e += m * Scalar(c ? c : 1);
      }
    }
    sampled.push_back(std::move(t));
  }

  size_t total = triples.size() + sampled.size();
  std::vector<size_t> sizes(total);
  parallel_for(total, jobs, [&](size_t n) {
    CommPoly jac;
    if (n < triples.size()) {
      auto [p, q, r] = triples[n];
      auto P = entry(br.var(p)), Q = entry(br.var(q)), R = entry(br.var(r));
      auto bqr = br.on_entries(br.var(q), br.var(r));
      auto brp = br.on_entries(br.var(r), br.var(p));
      auto bpq = br.on_entries(br.var(p), br.var(q));
      jac = br(P, bqr) + br(Q, brp) + br(R, bpq);
    } else {
      auto& [P, Q, R] = sampled[n - triples.size()];
      jac = br(P, br(Q, R)) + br(Q, br(R, P)) + br(R, br(P, Q));
    }
    sizes[n] = jac.size();
  });

  OracleReport rep;
  rep.checked = total;
  for (size_t n = 0; n < total; ++n) {
    if (!sizes[n]) continue;
    ++rep.nonzero;
    rep.total_terms += sizes[n];
    if (sizes[n] > rep.worst_terms) {
      rep.worst_terms = sizes[n];
      if (n < triples.size()) {
        auto [p, q, r] = triples[n];
        rep.worst = "(" + var_name(al, br.var(p)) + "," + var_name(al, br.var(q)) + "," + var_name(al, br.var(r)) + ")";
      } else {
        rep.worst = "sample " + std::to_string(n - triples.size());
      }
    }
  }
  return rep;
}

RatMatrix mat_identity(int N) {
  RatMatrix m(N, std::vector<Rational>(N, Rational(0)));
  for (int i = 0; i < N; ++i) m[i][i] = 1;
  return m;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RatMatrix out(n, std::vector<Rational>(m, Rational(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

RatMatrix mat_inverse(const RatMatrix& a) {
  int N = static_cast<int>(a.size());
  RatMatrix m = a, inv = mat_identity(N);
  for (int col = 0; col < N; ++col) {
    int piv = -1;
    for (int r = col; r < N; ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("matrix is singular");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Rational d = m[col][col];
    for (int j = 0; j < N; ++j) {
      m[col][j] /= d;
      inv[col][j] /= d;
    }
    for (int r = 0; r < N; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (int j = 0; j < N; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

RatMatrix random_invertible(std::mt19937_64& rng, int N, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  while (true) {
    RatMatrix g(N, std::vector<Rational>(N));
    for (auto& row : g)
      for (auto& e : row) e = d(rng);
    try {
      mat_inverse(g);
      return g;
    } catch (const std::domain_error&) {
    }
  }
}

MatrixPoint random_point(std::mt19937_64& rng, int generators, int N, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  MatrixPoint pt{N, {}};
  for (int g = 0; g < generators; ++g) {
    RatMatrix m(N, std::vector<Rational>(N));
    for (auto& row : m)
      for (auto& e : row) e = Rational(d(rng), 1 + static_cast<int>(rng() % 3));
    for (auto& row : m)
      for (auto& e : row) e.canonicalize();
    pt.mats.push_back(std::move(m));
  }
  return pt;
}

Rational eval_at_point(const CommPoly& p, const MatrixPoint& pt) {
  Rational total = 0;
  for (auto& [m, c] : p) {
    Rational v = c.constant_value();
    for (auto code : m) {
      auto e = EntryVar::decode(code);
      if (e.gen < 1 || e.gen > static_cast<int>(pt.mats.size())) throw std::out_of_range("point has no matrix for a generator");
      check_index(e.i, pt.N);
      check_index(e.j, pt.N);
      v *= pt.mats[e.gen - 1][e.i - 1][e.j - 1];
    }
    total += v;
  }
  return total;
}

CommPoly gl_substitute(const CommPoly& p, const RatMatrix& g) {
  int N = static_cast<int>(g.size());
  RatMatrix ginv = mat_inverse(g);
  std::map<std::uint32_t, CommPoly> sub;
  auto image = [&](std::uint32_t code) -> const CommPoly& {
    auto it = sub.find(code);
    if (it != sub.end()) return it->second;
    auto e = EntryVar::decode(code);
    check_index(e.i, N);
    check_index(e.j, N);
    Accumulator<CommMonomial> acc;
    for (int a = 1; a <= N; ++a)
      for (int b = 1; b <= N; ++b) {
        Rational c = g[e.i - 1][a - 1] * ginv[b - 1][e.j - 1];
        if (c != 0) acc.add(CommMonomial{EntryVar{e.gen, a, b}.code()}, Scalar(c));
      }
    return sub.emplace(code, acc.finish()).first->second;
  };
  CommPoly out;
  for (auto& [m, c] : p) {
    CommPoly t = comm_constant(c);
    for (auto code : m) t = comm_mul(t, image(code));
    out += t;
  }
  return out;
}

std::string render(const Alphabet& al, const CommPoly& p) {
  std::vector<std::pair<std::string, Scalar>> t;
  for (auto& [m, c] : p) {
    std::string s;
    for (size_t k = 0; k < m.size(); ++k) s += (k ? "*" : "") + var_name(al, EntryVar::decode(m[k]));
    t.emplace_back(s, c);
  }
  return render_terms(t);
}

}  // namespace ncp
