#include <random>

#include "doctest.h"
#include "ncp/prelie.hpp"
#include "test_util.hpp"

using namespace ncp;
using namespace ncp::testing;

namespace {

BilinearStruct random_struct(std::mt19937_64& rng, int m) {
  BilinearStruct s(m);
  std::uniform_int_distribution<int> c(-2, 2), k(1, m);
  for (auto* t : {&s.mu_table, &s.br_table})
    for (auto& v : *t) v = Vec(k(rng), Scalar(c(rng))) + Vec(k(rng), Scalar(c(rng)));
  return s;
}

bool any_nonassoc(const BilinearStruct& s) {
  for (int i = 1; i <= s.dim; ++i)
    for (int j = 1; j <= s.dim; ++j)
      for (int k = 1; k <= s.dim; ++k)
        if (!assoc_residual(s, Op::mu, basis(i), basis(j), basis(k)).is_zero()) return true;
  return false;
}

BilinearStruct upper4() {
  return example_upper_triangular(4, {Scalar::parameter("t1"), Scalar::parameter("t2"), Scalar::parameter("t3")});
}

}  // namespace

TEST_SUITE("prelie") {
  TEST_CASE("associator and pre-Lie residuals") {
    // strictly upper triangular 3x3 is associative
    BilinearStruct u(3);  // e1 = E12, e2 = E13, e3 = E23
    u.mu_at(1, 3) = basis(2);
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        for (int k = 1; k <= 3; ++k) {
          CHECK(assoc_residual(u, Op::mu, basis(i), basis(j), basis(k)).is_zero());
          CHECK(assoc_residual(BilinearStruct(3), Op::mu, basis(i), basis(j), basis(k)).is_zero());
        }
    // derivation pre-Lie on span(d, x d, x^2 d) truncated at degree 2: {f d, g d} = f g' d
    BilinearStruct dl(3);
    dl.br_at(1, 2) = basis(1);
    dl.br_at(1, 3) = Scalar(2) * basis(2);
    dl.br_at(2, 2) = basis(2);
    dl.br_at(2, 3) = Scalar(2) * basis(3);
    dl.br_at(3, 2) = basis(3);
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        for (int k = 1; k <= 3; ++k) {
          int a = i - 1, b = j - 1, c = k - 1;  // stay inside the truncation
          bool keep = a + b - 1 <= 2 && b + c - 1 <= 2 && a + c - 1 <= 2 && a + b + c - 2 <= 2;
          if (keep) CHECK(prelie_residual(dl, basis(i), basis(j), basis(k)).is_zero());
        }
    std::mt19937_64 rng(37);
    int nonzero = 0;
    for (int t = 0; t < 5; ++t) {
      auto s = random_struct(rng, 2);
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
          for (int k = 1; k <= 2; ++k) nonzero += !prelie_residual(s, basis(i), basis(j), basis(k)).is_zero();
    }
    CHECK(nonzero > 0);
  }

  TEST_CASE("examples are Poisson-left-pre-Lie") {
    auto u4 = upper4();
    CHECK(u4.dim == 6);
    CHECK(pplie_residuals(u4).ok());
    CHECK(pplie_residuals(example_triple_zero(heisenberg())).ok());
    CHECK(pplie_residuals(BilinearStruct(2)).ok());
    // perturb: {E13, E12} += E34
    auto bad = u4;
    bad.br_at(upper_index(4, 1, 3), upper_index(4, 1, 2)) += basis(upper_index(4, 3, 4));
    CHECK(!pplie_residuals(bad).ok());
  }

  TEST_CASE("linear pair construction") {
    BilinearStruct k(1);
    k.mu_at(1, 1) = basis(1);
    auto p = linear_pair(k);
    CHECK(render(*p.alphabet(), p.twelve.table(1, 1)) == "1#x - x#1");
    CHECK(p.id.is_zero());
    CHECK(linear_pair(BilinearStruct(2)) == CoupledPair::zero(p.alphabet()->size() == 1 ? Alphabet::make({"x", "y"}) : p.alphabet()));
    auto u4 = upper4();
    CHECK(structure_of(linear_pair(u4)) == u4);
    CHECK(is_coupled(linear_pair(u4)).ok());
    CHECK_THROWS(structure_of(CoupledPair(BracketSpec(BracketKind::RightDouble, p.alphabet()),
                                          BracketSpec::from_upper(BracketKind::Double, p.alphabet(), {{{1, 1}, sw(*p.alphabet(), "1#xx - xx#1")}}))));
  }

  TEST_CASE("associator expression for the linear double Jacobiator") {
    std::mt19937_64 rng(41);
    int nonassoc = 0;
    for (int t = 0; t < 6; ++t) {
      auto s = random_struct(rng, 2 + t % 2);
      nonassoc += any_nonassoc(s);
      CHECK(rem3_mismatches(s) == 0);
    }
    CHECK(nonassoc >= 5);
  }

  TEST_CASE("right double Jacobi of a linear bracket is the pre-Lie condition") {
    std::mt19937_64 rng(43);
    std::vector<BilinearStruct> cases = {upper4(), example_triple_zero(heisenberg()), BilinearStruct(2)};
    for (int t = 0; t < 5; ++t) cases.push_back(random_struct(rng, 2));
    for (auto& s : cases) {
      auto spec = linear_bracket(s, Op::br, BracketKind::RightDouble);
      const auto& al = spec.alphabet();
      bool jac_zero = true, prelie = true;
      for (int i = 1; i <= s.dim; ++i)
        for (int j = 1; j <= s.dim; ++j)
          for (int k = 1; k <= s.dim; ++k) {
            jac_zero &= right_double_jacobiator(spec, NCPoly::generator(al, i), NCPoly::generator(al, j), NCPoly::generator(al, k)).is_zero();
            prelie &= prelie_residual(s, basis(i), basis(j), basis(k)).is_zero();
          }
      CHECK(jac_zero == prelie);
    }
  }

  TEST_CASE("coupled iff Poisson-left-pre-Lie") {
    std::mt19937_64 rng(47);
    std::vector<BilinearStruct> cases = {upper4(), example_triple_zero(heisenberg()), BilinearStruct(3)};
    auto e3sym = BilinearStruct(3);
    e3sym.mu_at(1, 1) = Scalar::parameter("s1") * basis(3);
    e3sym.mu_at(1, 2) = Scalar::parameter("s2") * basis(3);
    e3sym.mu_at(2, 1) = Scalar::parameter("s3") * basis(3);
    e3sym.mu_at(2, 2) = Scalar::parameter("s4") * basis(3);
    cases.push_back(example_triple_zero(e3sym));
    for (int t = 0; t < 5; ++t) cases.push_back(random_struct(rng, 2));
    int passing = 0;
    for (auto& s : cases) {
      auto eq = thm_linear_equiv(s);
      CHECK(eq.agree());
      passing += eq.pplie;
    }
    CHECK(passing >= 4);
  }
}
