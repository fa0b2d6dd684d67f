#include "ncp/ybe.hpp"

#include <stdexcept>

#include "ncp/parse.hpp"

namespace ncp {

namespace {

std::uint8_t u8(int v) { return static_cast<std::uint8_t>(v); }

void check_dim(int a, int b) {
  if (a != b) throw std::invalid_argument("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

Mat E(int a, int b) { return Mat(MatKey{u8(a), u8(b)}); }

Mat mat_one(int m) {
  Mat out;
  for (int i = 1; i <= m; ++i) out += E(i, i);
  return out;
}

RMatrix& RMatrix::operator+=(const RMatrix& o) {
  if (dim == 0) dim = o.dim;
  if (o.dim) check_dim(dim, o.dim);
  terms += o.terms;
  return *this;
}

RMatrix& RMatrix::operator-=(const RMatrix& o) { return *this += -o; }

RMatrix tensor(int m, const Mat& A, const Mat& B) {
  Accumulator<RKey> acc;
  for (auto& [ka, ca] : A)
    for (auto& [kb, cb] : B) acc.add(RKey{ka[0], ka[1], kb[0], kb[1]}, ca * cb);
  return RMatrix(m, acc.finish());
}

RMatrix wedge(int m, const Mat& A, const Mat& B) { return tensor(m, A, B) - tensor(m, B, A); }

RMatrix flip(const RMatrix& R) {
  return RMatrix(R.dim, R.terms.map_keys([](const RKey& k) { return RKey{k[2], k[3], k[0], k[1]}; }));
}

bool is_skew(const RMatrix& R) { return flip(R) == -R; }

RMatrix transpose_dual(const RMatrix& R) {
  return RMatrix(R.dim, R.terms.map_keys([](const RKey& k) { return RKey{k[1], k[0], k[3], k[2]}; }));
}

RMatrix substitute(const RMatrix& R, const std::map<std::string, Scalar>& values) {
  if (values.empty()) return R;
  return RMatrix(R.dim, R.terms.map_coefficients([&](const Scalar& c) { return c.substitute(values); }));
}

Op3 embed(const RMatrix& R, int p, int q) {
  if (p == q || p < 1 || p > 3 || q < 1 || q > 3) throw std::invalid_argument("embed: legs must be distinct in 1..3");
  int o = 6 - p - q;
  Accumulator<Key3> acc;
  for (auto& [k, c] : R.terms)
    for (int t = 1; t <= R.dim; ++t) {
      Key3 key{};
      key[2 * (p - 1)] = k[0];
      key[2 * (p - 1) + 1] = k[1];
      key[2 * (q - 1)] = k[2];
      key[2 * (q - 1) + 1] = k[3];
      key[2 * (o - 1)] = u8(t);
      key[2 * (o - 1) + 1] = u8(t);
      acc.add(key, c);
    }
  return acc.finish();
}

Op3 one_leg(int m, const Mat& X, int leg) {
  Accumulator<Key3> acc;
  for (auto& [k, c] : X)
    for (int s = 1; s <= m; ++s)
      for (int t = 1; t <= m; ++t) {
        Key3 key{};
        int idx = 0;
        for (int l = 1; l <= 3; ++l) {
          if (l == leg) {
            key[2 * (l - 1)] = k[0];
            key[2 * (l - 1) + 1] = k[1];
          } else {
            int v = idx++ ? t : s;
            key[2 * (l - 1)] = u8(v);
            key[2 * (l - 1) + 1] = u8(v);
          }
        }
        acc.add(key, c);
      }
  return acc.finish();
}

Op3 op_mul(const Op3& A, const Op3& B) {
  Accumulator<Key3> acc;
  for (auto& [ka, ca] : A)
    for (auto& [kb, cb] : B) {
      if (ka[1] != kb[0] || ka[3] != kb[2] || ka[5] != kb[4]) continue;
      acc.add(Key3{ka[0], kb[1], ka[2], kb[3], ka[4], kb[5]}, ca * cb);
    }
  return acc.finish();
}

Op3 commutator(const Op3& A, const Op3& B) { return op_mul(A, B) - op_mul(B, A); }

Op3 aybe_residual(const RMatrix& R) {
  auto R12 = embed(R, 1, 2), R13 = embed(R, 1, 3), R23 = embed(R, 2, 3);
  return op_mul(R12, R13) - op_mul(R23, R12) + op_mul(R13, R23);
}

Op3 cybe_residual(const RMatrix& r) {
  auto r12 = embed(r, 1, 2), r13 = embed(r, 1, 3), r23 = embed(r, 2, 3);
  return commutator(r12, r13) + commutator(r12, r23) + commutator(r13, r23);
}

Op3 compat_residual(const RMatrix& R, const RMatrix& r) {
  check_dim(R.dim, r.dim);
  return commutator(embed(R, 1, 2), embed(r, 1, 3) + embed(r, 2, 3));
}

TripleElem apply3(const Op3& T, int i, int j, int k) {
  Accumulator<TripleKey> acc;
  for (auto& [key, c] : T)
    if (key[1] == i && key[3] == j && key[5] == k)
      acc.add(TripleKey{{Word::letter(key[0]), Word::letter(key[2]), Word::letter(key[4])}, {}}, c);
  return acc.finish();
}

AlphabetPtr standard_alphabet(int m) {
  if (m <= 3) {
    std::vector<std::string> names = {"x", "y", "z"};
    names.resize(m);
    return Alphabet::make(names);
  }
  std::vector<std::string> names;
  for (int i = 1; i <= m; ++i) names.push_back("x" + std::to_string(i));
  return Alphabet::make(names);
}

namespace {

BracketSpec spec_of(BracketKind kind, const RMatrix& M, const AlphabetPtr& al) {
  return BracketSpec::from_full(kind, al, [&](int i, int j) {
    Accumulator<SweedlerKey> acc;
    for (auto& [k, c] : M.terms)
      if (k[1] == i && k[3] == j) acc.add(SweedlerKey{Word::letter(k[0]), Word::letter(k[2]), {}}, c);
    return acc.finish();
  });
}

}  // namespace

CoupledPair spec_from_r(const RMatrix& R, const RMatrix& r, AlphabetPtr al) {
  int m = std::max(R.dim, r.dim);
  if (R.dim && r.dim) check_dim(R.dim, r.dim);
  if (!is_skew(R)) throw std::invalid_argument("R is not skew-symmetric (R^21 != -R)");
  if (!is_skew(r)) throw std::invalid_argument("r is not skew-symmetric (r^21 != -r)");
  if (!al) al = standard_alphabet(m);
  if (static_cast<int>(al->size()) != m) throw std::invalid_argument("alphabet size does not match the dimension");
  return CoupledPair(spec_of(BracketKind::RightDouble, r, al), spec_of(BracketKind::Double, R, al));
}

IdentityReport prop5_identities(const RMatrix& R, const RMatrix& r) {
  auto pair = spec_from_r(R, r);
  const auto& al = pair.alphabet();
  int m = static_cast<int>(al->size());
  auto R12 = embed(R, 1, 2);
  auto r13 = embed(r, 1, 3), r23 = embed(r, 2, 3);
  std::array<Op3, 4> rhs = {op_mul(R12, r23), op_mul(R12, r13), -op_mul(r13, R12), -op_mul(r23, R12)};
  auto p13 = Permutation::from_cycles("(13)", 3), p132 = Permutation::from_cycles("(132)", 3),
       p23 = Permutation::from_cycles("(23)", 3);
  IdentityReport rep;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      for (int k = 1; k <= m; ++k) {
        auto a = NCPoly::generator(al, i), b = NCPoly::generator(al, j), c = NCPoly::generator(al, k);
        std::array<TripleElem, 4> lhs = {
            triple_bracket(pair, Part::id, Part::twelve, Variant::left, a, b, c),
            permute(p13, triple_bracket(pair, Part::id, Part::twelve, Variant::right, b, c, a)),
            permute(p132, triple_bracket(pair, Part::twelve, Part::id, Variant::left, c, a, b)),
            permute(p23, triple_bracket(pair, Part::twelve, Part::id, Variant::right, c, a, b)),
        };
        for (int t = 0; t < 4; ++t) {
          ++rep.checked;
          if (!(lhs[t] == apply3(rhs[t], i, j, k)))
            rep.failures.push_back("identity " + std::to_string(t + 1) + " at (" + al->name(i) + "," + al->name(j) + "," +
                                   al->name(k) + ")");
        }
      }
  return rep;
}

namespace {

Scalar P(const std::string& n) { return Scalar::parameter(n); }

DisplayedEntry D(Part p, int i, int j, std::string text) { return {p, i, j, std::move(text)}; }

RMatrix sokolov(int k) {
  auto W = [](const Mat& A, const Mat& B) { return wedge(3, A, B); };
  switch (k) {
    case 1: return W(E(3, 2), E(3, 1));
    case 2: return W(E(1, 1), E(1, 2)) + W(E(1, 3), E(1, 2)) + W(E(1, 1), E(2, 3)) + W(E(2, 1), E(1, 3)) + W(E(2, 2), E(2, 3));
    case 3: return W(E(1, 3), E(1, 2)) + W(E(1, 1), E(2, 3)) + W(E(2, 1), E(1, 3)) + W(E(2, 2), E(2, 3));
    case 4: return W(E(2, 2), E(2, 3));
    case 5: return W(E(1, 1), E(2, 3)) + W(E(2, 1), E(1, 3)) + W(E(2, 2), E(2, 3));
    case 6: return W(E(1, 1), E(1, 3)) + W(E(1, 1), E(2, 3)) + W(E(3, 3), E(2, 3));
    case 7: return W(E(1, 3), E(2, 1)) + W(E(3, 3), E(2, 3));
    case 8: return W(E(1, 1), E(2, 3)) + W(E(3, 3), E(2, 3));
    default: break;
  }
  if (k >= 9 && k <= 16) return transpose_dual(sokolov(k - 8));
  throw std::invalid_argument("no Sokolov matrix R" + std::to_string(k));
}

RMatrix r_case_A(int k) {
  auto W = [](const Mat& A, const Mat& B) { return wedge(3, A, B); };
  Mat I = mat_one(3);
  auto a = [](int i) { return P("a" + std::to_string(i)); };
  switch (k) {
    case 1:
      return a(1) * (Scalar(-2) * W(E(1, 1), E(2, 2)) - W(E(1, 1), E(3, 3)) + W(E(2, 2), E(3, 3))) +
             W(I, a(2) * E(1, 2) + a(3) * E(2, 1) + a(4) * E(3, 1) + a(5) * E(3, 2)) + a(6) * W(E(3, 1), E(3, 2));
    case 2: return W(a(7) * I + a(8) * (E(1, 1) - E(2, 2)) + a(9) * E(3, 2) + a(10) * E(2, 1), E(3, 1));
    case 3:
      return W(I, a(11) * E(1, 2) + a(12) * E(3, 2) + a(13) * E(3, 1)) + W(a(14) * E(1, 2) + a(15) * E(3, 1), E(3, 2));
    case 4:
      return a(16) * (W(E(1, 1) - E(2, 2), Scalar(4) * E(1, 2) + E(2, 1)) + Scalar(4) * W(E(1, 2), E(2, 1))) +
             a(17) * W(I, Scalar(-2) * (E(1, 1) - E(2, 2)) - Scalar(4) * E(1, 2) + E(2, 1)) + a(18) * W(E(3, 1), E(3, 2));
    case 5:
      return a(19) * W(I, E(1, 1) - E(2, 2) - E(1, 2) + E(2, 1) + E(3, 1) - E(3, 2)) +
             a(20) * W(E(1, 1) - E(2, 2) - E(1, 2) + E(2, 1), E(3, 1) - E(3, 2)) + a(21) * W(E(3, 1), E(3, 2));
    case 6: return a(22) * W(I, E(3, 1)) + a(23) * (W(E(1, 1) - E(2, 2), E(3, 1)) + W(E(2, 1), E(3, 2)));
    default: throw std::invalid_argument("no case A.r" + std::to_string(k));
  }
}

// shared shape of r_C and r_E
RMatrix r_CE(const std::string& p) {
  auto W = [](const Mat& A, const Mat& B) { return wedge(3, A, B); };
  return P(p + "1") * (W(E(1, 1), E(1, 3)) - W(E(1, 3), E(2, 2)) - W(E(1, 3), E(3, 3))) +
         P(p + "2") * (W(E(1, 1), E(2, 3)) + W(E(2, 2), E(2, 3)) - W(E(2, 3), E(3, 3))) + P(p + "3") * W(E(1, 3), E(2, 3));
}

RMatrix r_case_D(int k) {
  auto W = [](const Mat& A, const Mat& B) { return wedge(3, A, B); };
  if (k == 1)
    return P("d1") * (W(E(1, 1), E(2, 2)) + W(E(1, 1), E(3, 3))) + P("d2") * W(E(1, 1), E(2, 3)) +
           P("d3") * (W(E(2, 2), E(2, 3)) - W(E(2, 3), E(3, 3)));
  if (k == 2)
    return P("d4") * (W(E(1, 1), E(2, 3)) + W(E(2, 2), E(2, 3)) - W(E(2, 3), E(3, 3))) + P("d5") * W(E(1, 1), E(1, 3)) +
           P("d6") * (W(E(1, 3), E(2, 2)) + W(E(1, 3), E(3, 3))) + P("d7") * W(E(1, 3), E(2, 3));
  throw std::invalid_argument("no case D.r" + std::to_string(k));
}

RMatrix R_case_D(int k) {
  static const int which[] = {0, 4, 5, 7, 8};
  if (k < 1 || k > 4) throw std::invalid_argument("no case D." + std::to_string(k));
  return sokolov(which[k]);
}

std::vector<std::string> range_params(const std::string& p, int from, int to) {
  std::vector<std::string> out;
  for (int i = from; i <= to; ++i) out.push_back(p + std::to_string(i));
  return out;
}

const Part ID = Part::id, TW = Part::twelve;

std::vector<DisplayedEntry> shown_A(int k) {
  std::vector<DisplayedEntry> d = {D(TW, 1, 2, "-z#z")};
  auto add = [&](std::initializer_list<DisplayedEntry> l) { d.insert(d.end(), l); };
  switch (k) {
    case 1:
      add({D(ID, 1, 1, "a3*x#y - a3*y#x + a4*x#z - a4*z#x"),
           D(ID, 1, 2, "a2*x#x - 2*a1*x#y + a5*x#z - a3*y#y - a4*z#y + a6*z#z"),
           D(ID, 1, 3, "-a1*x#z - a3*y#z - a4*z#z"),
           D(ID, 2, 2, "a2*y#x - a2*x#y + a5*y#z - a5*z#y"),
           D(ID, 2, 3, "-a2*x#z + a1*y#z - a5*z#z")});
      break;
    case 2:
      add({D(ID, 1, 1, "(a7 + a8)*x#z - (a7 + a8)*z#x + a10*y#z - a10*z#y"),
           D(ID, 1, 2, "-(a7 - a8)*z#y - a9*z#z"),
           D(ID, 1, 3, "-a7*z#z")});
      break;
    case 3:
      add({D(ID, 1, 1, "a13*x#z - a13*z#x"),
           D(ID, 1, 2, "a11*x#x + a12*x#z - a13*z#y + a15*z#z"),
           D(ID, 1, 3, "-a13*z#z"),
           D(ID, 2, 2, "a11*y#x - a11*x#y + a14*x#z - a14*z#x + a12*y#z - a12*z#y"),
           D(ID, 2, 3, "-a11*x#z - a12*z#z")});
      break;
    case 4:
      add({D(ID, 1, 1, "(a16 + a17)*x#y - (a16 + a17)*y#x"),
           D(ID, 1, 2, "4*(a16 - a17)*x#x + 4*a17*x#y - 4*a16*y#x + (a16 - a17)*y#y + a18*z#z"),
           D(ID, 1, 3, "2*a17*x#z - a17*y#z"),
           D(ID, 2, 2, "4*(a16 + a17)*x#y - 4*(a16 + a17)*y#x"),
           D(ID, 2, 3, "4*a17*x#z - 2*a17*y#z")});
      break;
    case 5:
      add({D(ID, 1, 1, "a19*x#y - a19*y#x + (a19 + a20)*x#z - (a19 + a20)*z#x + a20*y#z - a20*z#y"),
           D(ID, 1, 2,
             "-a19*x#x - a19*y#y + a21*z#z - 2*a19*x#y - (a19 + a20)*x#z + a20*z#x - a20*y#z - (a19 - a20)*z#y"),
           D(ID, 1, 3, "-a19*x#z - a19*y#z - a19*z#z"),
           D(ID, 2, 2, "a19*x#y - a19*y#x + a20*x#z - a20*z#x - (a19 - a20)*y#z + (a19 - a20)*z#y"),
           D(ID, 2, 3, "a19*x#z + a19*y#z + a19*z#z")});
      break;
    case 6:
      add({D(ID, 1, 1, "(a22 + a23)*x#z - (a22 + a23)*z#x"),
           D(ID, 1, 2, "a23*y#z - (a22 - a23)*z#y"),
           D(ID, 1, 3, "-a22*z#z")});
      break;
  }
  return d;
}

std::vector<DisplayedEntry> shown_CE_id(const std::string& p) {
  auto c = [&](int i) { return p + std::to_string(i); };
  return {D(ID, 1, 3, c(1) + "*x#x + " + c(2) + "*x#y"), D(ID, 2, 3, c(1) + "*y#x + " + c(2) + "*y#y"),
          D(ID, 3, 3,
            "-" + c(1) + "*x#z + " + c(1) + "*z#x - " + c(2) + "*y#z + " + c(2) + "*z#y + " + c(3) + "*x#y - " + c(3) +
                "*y#x")};
}

std::vector<DisplayedEntry> shown_D(int k, int j) {
  std::vector<DisplayedEntry> d;
  switch (k) {
    case 1: d = {D(TW, 2, 3, "y#y")}; break;
    case 2: d = {D(TW, 1, 3, "x#y + y#x"), D(TW, 2, 3, "y#y")}; break;
    case 3: d = {D(TW, 1, 3, "-y#x"), D(TW, 3, 3, "z#y - y#z")}; break;
    case 4: d = {D(TW, 1, 3, "x#y"), D(TW, 3, 3, "z#y - y#z")}; break;
  }
  if (j == 1)
    d.insert(d.end(), {D(ID, 1, 2, "d1*x#y"), D(ID, 1, 3, "d1*x#z + d2*x#y"), D(ID, 2, 3, "d3*y#y"),
                       D(ID, 3, 3, "d3*z#y - d3*y#z")});
  else
    d.insert(d.end(), {D(ID, 1, 3, "d5*x#x + d4*x#y"), D(ID, 2, 3, "d4*y#y - d6*y#x"),
                       D(ID, 3, 3, "d4*z#y - d4*y#z + d6*x#z - d6*z#x + d7*x#y - d7*y#x")});
  return d;
}

int parse_index(const std::string& s, const std::string& name) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 3)
    throw std::invalid_argument("unknown catalog name '" + name + "'");
  return std::stoi(s);
}

CatalogEntry build(const std::string& name, const std::map<std::string, Scalar>& values) {
  auto W2 = [](const Mat& A, const Mat& B) { return wedge(2, A, B); };
  CatalogEntry e;
  e.name = name;
  e.dim = 3;
  RMatrix RI = W2(E(1, 1), E(1, 2)), RII = W2(E(1, 2), E(2, 2)), r2 = W2(E(1, 1) + E(2, 2), E(1, 2));
  if (name.rfind("dim2.", 0) == 0) {
    e.dim = 2;
    std::string s = name.substr(5);
    std::vector<DisplayedEntry> id = {D(ID, 1, 2, "x#x"), D(ID, 2, 2, "y#x - x#y")};
    if (s == "I") {
      e.R = RI, e.r = r2, e.displayed = id;
      e.displayed.push_back(D(TW, 1, 2, "x#x"));
    } else if (s == "II") {
      e.R = RII, e.r = r2, e.displayed = id;
      e.displayed.push_back(D(TW, 2, 2, "x#y - y#x"));
    } else if (s == "RI") {
      e.R = RI;
    } else if (s == "RII") {
      e.R = RII;
    } else if (s == "r") {
      e.r = r2;
    } else {
      throw std::invalid_argument("unknown catalog name '" + name + "'");
    }
    return e;
  }
  if (name.rfind("dim3.R", 0) == 0) {
    int k = parse_index(name.substr(6), name);
    if (k < 1 || k > 16) throw std::invalid_argument("unknown catalog name '" + name + "'");
    e.R = sokolov(k);
    return e;
  }
  if (name.rfind("A.", 0) == 0) {
    int k = parse_index(name.substr(2), name);
    if (k < 1 || k > 6) throw std::invalid_argument("unknown catalog name '" + name + "'");
    static const int first[] = {0, 1, 7, 11, 16, 19, 22, 24};
    e.R = sokolov(1);
    e.r = r_case_A(k);
    e.params = range_params("a", first[k], first[k + 1] - 1);
    e.displayed = shown_A(k);
    return e;
  }
  if (name == "B") {
    auto W = [](const Mat& A, const Mat& B) { return wedge(3, A, B); };
    e.R = sokolov(2);
    e.r = W(E(1, 1), E(1, 2)) + Scalar(2) * W(E(1, 1), E(2, 3)) - W(E(1, 2), E(2, 2) + E(3, 3)) +
          Scalar(2) * W(E(2, 2), E(2, 3)) - Scalar(2) * W(E(2, 3), E(3, 3));
    e.displayed = {D(TW, 1, 2, "x#x"), D(TW, 1, 3, "x#y + y#x"), D(TW, 2, 3, "-x#x + y#y"),
                   D(ID, 1, 2, "x#x"), D(ID, 1, 3, "2*x#y"), D(ID, 2, 2, "-x#y + y#x"),
                   D(ID, 2, 3, "-x#z + 2*y#y"), D(ID, 3, 3, "-2*y#z + 2*z#y")};
    return e;
  }
  if (name == "C" || name == "E") {
    std::string p = name == "C" ? "c" : "e";
    e.R = sokolov(name == "C" ? 3 : 6);
    e.r = r_CE(p);
    e.params = range_params(p, 1, 3);
    e.displayed = name == "C" ? std::vector<DisplayedEntry>{D(TW, 1, 3, "x#y + y#x"), D(TW, 2, 3, "-x#x + y#y")}
                              : std::vector<DisplayedEntry>{D(TW, 1, 3, "x#x + x#y"), D(TW, 3, 3, "z#y - y#z")};
    auto id = shown_CE_id(p);
    e.displayed.insert(e.displayed.end(), id.begin(), id.end());
    return e;
  }
  if (name.rfind("D.", 0) == 0) {
    std::string s = name.substr(2);
    if (s == "r1" || s == "r2") {
      int j = s[1] - '0';
      e.r = r_case_D(j);
      e.params = j == 1 ? range_params("d", 1, 3) : range_params("d", 4, 7);
      return e;
    }
    auto dot = s.find('.');
    int k = parse_index(s.substr(0, dot), name);
    e.R = R_case_D(k);
    if (dot == std::string::npos) return e;
    std::string rj = s.substr(dot + 1);
    if (rj != "r1" && rj != "r2") throw std::invalid_argument("unknown catalog name '" + name + "'");
    int j = rj[1] - '0';
    e.r = r_case_D(j);
    e.params = j == 1 ? range_params("d", 1, 3) : range_params("d", 4, 7);
    e.displayed = shown_D(k, j);
    return e;
  }
  if (name == "family" || name.rfind("family.", 0) == 0) {
    int n = name == "family" ? 3 : parse_index(name.substr(7), name);
    if (n < 2 || n > 9) throw std::invalid_argument("family size must be in 2..9");
    std::vector<Rational> lambda;
    for (int i = 1; i <= n; ++i) {
      auto it = values.find("lambda" + std::to_string(i));
      lambda.push_back(it == values.end() ? Rational(i) : it->second.constant_value());
    }
    auto f = family(lambda);
    e.dim = n;
    e.R = f.R;
    e.r = f.r;
    return e;
  }
  throw std::invalid_argument("unknown catalog name '" + name + "'");
}

}  // namespace

CatalogEntry catalog(const std::string& name, const std::map<std::string, Scalar>& values) {
  CatalogEntry e = build(name, values);
  if (!values.empty()) {
    if (e.R) e.R = substitute(*e.R, values);
    if (e.r) e.r = substitute(*e.r, values);
    for (auto& d : e.displayed) {
      auto al = standard_alphabet(e.dim);
      auto v = parse_sweedler(*al, d.text).map_coefficients([&](const Scalar& c) { return c.substitute(values); });
      d.text = render(*al, v);
    }
  }
  return e;
}

std::vector<std::string> catalog_pair_names() {
  std::vector<std::string> out = {"dim2.I", "dim2.II"};
  for (int k = 1; k <= 6; ++k) out.push_back("A." + std::to_string(k));
  out.push_back("B");
  out.push_back("C");
  for (int j = 1; j <= 2; ++j)
    for (int k = 1; k <= 4; ++k) out.push_back("D." + std::to_string(k) + ".r" + std::to_string(j));
  out.push_back("E");
  for (int n = 2; n <= 4; ++n) out.push_back("family." + std::to_string(n));
  return out;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out = {"dim2.RI", "dim2.RII", "dim2.r"};
  for (int k = 1; k <= 16; ++k) out.push_back("dim3.R" + std::to_string(k));
  for (int k = 1; k <= 4; ++k) out.push_back("D." + std::to_string(k));
  out.push_back("D.r1");
  out.push_back("D.r2");
  for (auto& p : catalog_pair_names()) out.push_back(p);
  out.push_back("family");
  return out;
}

CoupledPair displayed_pair(const CatalogEntry& e) {
  auto al = standard_alphabet(e.dim);
  std::map<std::pair<int, int>, SweedlerElem> id, tw;
  for (auto& d : e.displayed) (d.part == Part::id ? id : tw)[{d.i, d.j}] = parse_sweedler(*al, d.text);
  return CoupledPair(BracketSpec::from_upper(BracketKind::RightDouble, al, id),
                     BracketSpec::from_upper(BracketKind::Double, al, tw));
}

FamilyData family(const std::vector<Rational>& lambda) {
  int n = static_cast<int>(lambda.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (lambda[i] == lambda[j]) throw std::invalid_argument("family: lambda values must be pairwise distinct");
  FamilyData f;
  f.lambda = lambda;
  auto a = [&](int i, int j) { return i == j ? Rational(0) : Rational(1 / (lambda[i] - lambda[j])); };
  f.b.assign(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (k != i) {
        f.b[i][k] = a(i, k);
        f.b[i][i] -= a(i, k);
      }
  Accumulator<RKey> R;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      Scalar c(a(i - 1, j - 1));
      // R(e_i (x) e_j) = a_ij (e_i e_j + e_j e_i - e_i e_i - e_j e_j)
      R.add(RKey{u8(i), u8(i), u8(j), u8(j)}, c);
      R.add(RKey{u8(j), u8(i), u8(i), u8(j)}, c);
      R.add(RKey{u8(i), u8(i), u8(i), u8(j)}, -c);
      R.add(RKey{u8(j), u8(i), u8(j), u8(j)}, -c);
    }
  f.R = RMatrix(n, R.finish());
  Accumulator<MatKey> X;
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k) X.add(MatKey{u8(k), u8(i)}, Scalar(f.b[i - 1][k - 1]));
  f.X = X.finish();
  f.r = tensor(n, f.X, mat_one(n)) - tensor(n, mat_one(n), f.X);
  return f;
}

std::string render(const Mat& A) {
  std::vector<std::pair<std::string, Scalar>> t;
  for (auto& [k, c] : A) t.emplace_back("E" + std::to_string(k[0]) + std::to_string(k[1]), c);
  return render_terms(t);
}

std::string render(const RMatrix& R) {
  std::vector<std::pair<std::string, Scalar>> t;
  for (auto& [k, c] : R.terms)
    t.emplace_back("E" + std::to_string(k[0]) + std::to_string(k[1]) + "@E" + std::to_string(k[2]) + std::to_string(k[3]), c);
  return render_terms(t);
}

std::string render(const Op3& T) {
  std::vector<std::pair<std::string, Scalar>> t;
  for (auto& [k, c] : T) {
    std::string s;
    for (int l = 0; l < 3; ++l) s += (l ? "@E" : "E") + std::to_string(k[2 * l]) + std::to_string(k[2 * l + 1]);
    t.emplace_back(s, c);
  }
  return render_terms(t);
}

}  // namespace ncp
