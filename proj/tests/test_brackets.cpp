#include <random>

#include "doctest.h"
#include "ncp/brackets.hpp"
#include "test_util.hpp"

using namespace ncp;
using namespace ncp::testing;

TEST_SUITE("brackets") {
  TEST_CASE("eval_bracket examples") {
    auto al = Alphabet::make({"x"});
    auto kks = BracketSpec::from_upper(BracketKind::Double, al, {{{1, 1}, sw(*al, "1#x - x#1")}});
    auto x = poly(al, "x");
    CHECK(render(*al, eval_bracket(kks, x, poly(al, "xx"))) == "1#xx - xx#1");
    CHECK(eval_bracket(kks, x, poly(al, "1")).is_zero());
    CHECK(eval_bracket(kks, poly(al, "1"), x).is_zero());

    auto al2 = Alphabet::make({"x", "y"});
    auto rd = BracketSpec::from_upper(BracketKind::RightDouble, al2, {{{1, 2}, sw(*al2, "x#x")}});
    CHECK(render(*al2, eval_bracket(rd, poly(al2, "x"), poly(al2, "yy"))) == "x#xy + x#yx");
  }

  TEST_CASE("table validation") {
    auto al = Alphabet::make({"x", "y"});
    CHECK_THROWS(BracketSpec::from_upper(BracketKind::Double, al, {{{1, 1}, sw(*al, "1#x + x#1")}}));
    CHECK_THROWS(BracketSpec::from_upper(BracketKind::Double, al, {{{2, 1}, sw(*al, "x#y")}}));
    auto s = BracketSpec::from_upper(BracketKind::Double, al, {{{1, 2}, sw(*al, "x#y")}});
    CHECK(render(*al, s.table(2, 1)) == "-y#x");
  }

  TEST_CASE("skew and first-argument Leibniz on random words") {
    std::mt19937_64 rng(21);
    auto al = Alphabet::make({"x", "y", "z"});
    for (int trial = 0; trial < 10; ++trial) {
      for (BracketKind kind : {BracketKind::Double, BracketKind::RightDouble}) {
        auto s = random_spec(rng, al, kind, true);
        for (int i = 0; i < 10; ++i) {
          auto a = random_poly(rng, al, 3), b = random_poly(rng, al, 3), c = random_poly(rng, al, 2);
          CHECK(eval_bracket(s, a, b) == -flip12(eval_bracket(s, b, a)));
          // first argument: slotwise identities
          auto lhs = eval_bracket(s, a * b, c);
          auto bc = eval_bracket(s, b, c), ac = eval_bracket(s, a, c);
          Accumulator<SweedlerKey> rhs;
          for (auto& [u, cu] : a.terms())
            for (auto& [k, v] : bc) {
              if (kind == BracketKind::Double)
                rhs.add(SweedlerKey{k.left, u + k.right, k.sym}, cu * v);
              else
                rhs.add(SweedlerKey{u + k.left, k.right, k.sym}, cu * v);
            }
          for (auto& [w, cw] : b.terms())
            for (auto& [k, v] : ac) rhs.add(SweedlerKey{k.left + w, k.right, k.sym}, cw * v);
          CHECK(lhs == rhs.finish());
          // second argument, directly from the kind's rule
          auto lhs2 = eval_bracket(s, c, a * b);
          auto ca = eval_bracket(s, c, a), cb = eval_bracket(s, c, b);
          Accumulator<SweedlerKey> rhs2;
          for (auto& [w, cw] : b.terms())
            for (auto& [k, v] : ca) rhs2.add(SweedlerKey{k.left, k.right + w, k.sym}, cw * v);
          for (auto& [u, cu] : a.terms())
            for (auto& [k, v] : cb) {
              if (kind == BracketKind::Double)
                rhs2.add(SweedlerKey{u + k.left, k.right, k.sym}, cu * v);
              else
                rhs2.add(SweedlerKey{k.left, u + k.right, k.sym}, cu * v);
            }
          CHECK(lhs2 == rhs2.finish());
        }
      }
    }
  }

  TEST_CASE("reduced maps") {
    auto al = Alphabet::make({"x", "y"});
    auto kks = BracketSpec::from_upper(BracketKind::Double, al, {{{1, 1}, sw(*al, "1#x - x#1")}});
    auto rd = BracketSpec::from_upper(BracketKind::RightDouble, al, {{{1, 2}, sw(*al, "x#x")}});
    auto x = poly(al, "x");
    CHECK(reduced_A_Anat(kks, x, sym(*al, "[x]")).is_zero());
    CHECK(render(*al, reduced_A_Anat(rd, x, sym(*al, "[y]"))) == "x.[x]");
    CHECK(reduced_A_Anat(rd, x, sym(*al, "1")).is_zero());
    CHECK(reduced_Anat_Anat(kks, sym(*al, "[x]"), sym(*al, "[x]")).is_zero());
    CHECK(reduced_Anat_Anat(rd, sym(*al, "1"), sym(*al, "[y]")).is_zero());
    CHECK(render(*al, reduced_Anat_Anat(rd, sym(*al, "[x]"), sym(*al, "[y]"))) == "[x][x]");
    // empty necklace is inert
    CHECK(reduced_A_Anat(rd, x, sym(*al, "[]")).is_zero());
  }

  TEST_CASE("reduced maps are lift independent and skew") {
    std::mt19937_64 rng(33);
    auto al = Alphabet::make({"x", "y", "z"});
    for (int trial = 0; trial < 8; ++trial) {
      for (BracketKind kind : {BracketKind::Double, BracketKind::RightDouble}) {
        auto s = random_spec(rng, al, kind, true);
        for (int i = 0; i < 6; ++i) {
          Word f = random_word(rng, 3, 4), g = random_word(rng, 3, 3);
          auto a = random_poly(rng, al, 3);
          // compute through the raw lift, rotated
          for (size_t r = 0; r < f.size(); ++r) {
            auto direct = reduced_A_Anat(s, a, SymElem(SymMonomial::of(Necklace(f))));
            // independent: evaluate formula with the rotated lift
            Accumulator<WordSymKey> acc;
            for (auto& [k, c] : eval_bracket(s, a, NCPoly::word(al, f.rotated(r)))) {
              if (kind == BracketKind::RightDouble)
                acc.add(WordSymKey{k.left, SymMonomial::of(Necklace(k.right)) * k.sym}, c);
              else
                acc.add(WordSymKey{k.right + k.left, k.sym}, c);
            }
            CHECK(direct == acc.finish());
            Accumulator<SymMonomial> nn;
            for (auto& [k, c] : eval_bracket(s, NCPoly::word(al, f.rotated(r)), NCPoly::word(al, g))) {
              if (kind == BracketKind::RightDouble)
                nn.add(SymMonomial({Necklace(k.left), Necklace(k.right)}) * k.sym, c);
              else
                nn.add(SymMonomial::of(Necklace(k.left + k.right)) * k.sym, c);
            }
            if (f.empty() || g.empty()) continue;
            CHECK(reduced_Anat_Anat(s, SymElem(SymMonomial::of(Necklace(f))), SymElem(SymMonomial::of(Necklace(g)))) == nn.finish());
          }
          SymElem F(SymMonomial({Necklace(f), Necklace(g)})), G(SymMonomial::of(Necklace(random_word(rng, 3, 3))));
          CHECK(reduced_Anat_Anat(s, F, G) == -reduced_Anat_Anat(s, G, F));
        }
      }
    }
  }

  TEST_CASE("triple bracket examples") {
    auto al = Alphabet::make({"x"});
    CoupledPair kks(BracketSpec(BracketKind::RightDouble, al),
                    BracketSpec::from_upper(BracketKind::Double, al, {{{1, 1}, sw(*al, "1#x - x#1")}}));
    auto x = poly(al, "x");
    CHECK(render(*al, triple_bracket(kks, Part::twelve, Part::twelve, Variant::left, x, x, x)) == "-1#x#1 + x#1#1");
    CHECK(triple_bracket(kks, Part::twelve, Part::twelve, Variant::aux, x, x, x).is_zero());
    CHECK(triple_bracket(kks, Part::twelve, Part::twelve, Variant::left, x, x, poly(al, "1")).is_zero());
    for (int k = 1; k <= 3; ++k) CHECK(coupled_identity(kks, k, x, x, x).is_zero());
    CHECK(vdb_jacobiator(kks.twelve, x, x, x).is_zero());
    CHECK(is_coupled(kks).ok());
    CHECK(is_coupled(CoupledPair::zero(Alphabet::make({"x", "y"}))).ok());

    // a skew double bracket that violates Jacobi
    CoupledPair bad(BracketSpec(BracketKind::RightDouble, al),
                    BracketSpec::from_upper(BracketKind::Double, al, {{{1, 1}, sw(*al, "1#xx - xx#1")}}));
    CHECK(!coupled_identity(bad, 3, x, x, x).is_zero());
  }

  TEST_CASE("Casimir pair is coupled") {
    auto al = Alphabet::make({"x"});
    CoupledPair cas(BracketSpec(BracketKind::RightDouble, al),
                    BracketSpec::from_upper(BracketKind::Double, al, {{{1, 1}, sw(*al, "1#x.[x] - x#1.[x]")}}));
    CHECK(is_coupled(cas).ok());
  }

  TEST_CASE("jac_tau skew relation under relabeling") {
    std::mt19937_64 rng(44);
    auto al = Alphabet::make({"x", "y", "z"});
    auto S3 = Permutation::all(3);
    for (int trial = 0; trial < 4; ++trial) {
      CoupledPair pair(random_spec(rng, al, BracketKind::RightDouble, true), random_spec(rng, al, BracketKind::Double, true));
      std::array<NCPoly, 3> args = {random_poly(rng, al, 2), random_poly(rng, al, 2), random_poly(rng, al, 2)};
      for (auto& s : S3)
        for (auto& tau : S3) {
          auto si = s.inverse();
          // sigma(a)_i = a_{sigma^{-1}(i)}
          auto lhs = jac_tau(pair, tau, args[si(1) - 1], args[si(2) - 1], args[si(3) - 1]);
          auto rhs = Scalar(s.sign()) * permute(s, jac_tau(pair, si * tau * s, args[0], args[1], args[2]));
          CHECK(lhs == rhs);
        }
    }
  }

  TEST_CASE("generator check implies word check") {
    auto al = Alphabet::make({"x"});
    CoupledPair cas(BracketSpec(BracketKind::RightDouble, al),
                    BracketSpec::from_upper(BracketKind::Double, al, {{{1, 1}, sw(*al, "1#x.[x] - x#1.[x]")}}));
    std::mt19937_64 rng(55);
    for (int i = 0; i < 5; ++i) {
      auto a = random_poly(rng, al, 3), b = random_poly(rng, al, 2), c = random_poly(rng, al, 2);
      for (int k = 1; k <= 3; ++k) CHECK(coupled_identity(cas, k, a, b, c).is_zero());
    }
  }
}
