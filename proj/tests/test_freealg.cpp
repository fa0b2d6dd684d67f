#include <random>

#include "doctest.h"
#include "ncp/freealg.hpp"

using namespace ncp;

namespace {

AlphabetPtr xyz() { return Alphabet::make({"x", "y", "z"}); }

Word random_word(std::mt19937_64& rng, int gens, int max_len) {
  Word w;
  int len = std::uniform_int_distribution<int>(0, max_len)(rng);
  for (int i = 0; i < len; ++i) w += Word::letter(std::uniform_int_distribution<int>(1, gens)(rng));
  return w;
}

Permutation random_perm(std::mt19937_64& rng, int n) {
  auto all = Permutation::all(n);
  return all[std::uniform_int_distribution<size_t>(0, all.size() - 1)(rng)];
}

Scalar random_scalar(std::mt19937_64& rng) {
  const char* names[] = {"p", "q", "r"};
  Scalar s;
  for (int t = 0; t < 3; ++t) {
    Scalar term(std::uniform_int_distribution<long>(-5, 5)(rng), std::uniform_int_distribution<long>(1, 4)(rng));
    for (int k = std::uniform_int_distribution<int>(0, 2)(rng); k > 0; --k)
      term *= Scalar::parameter(names[std::uniform_int_distribution<int>(0, 2)(rng)]);
    s += term;
  }
  return s;
}

}  // namespace

TEST_SUITE("freealg") {
  TEST_CASE("scalar arithmetic and rendering") {
    Scalar a = Scalar::parameter("a1"), b = Scalar::parameter("a2");
    CHECK((a + b) * (a - b) == a * a - b * b);
    CHECK((a + 1) * (a + 1) - a * a - 2 * a == Scalar(1));
    CHECK(Scalar(2, 4) == Scalar(1, 2));
    CHECK(Scalar(1, 2).to_string() == "1/2");
    CHECK((Scalar(-3) * a * b + b).to_string() == "a2 - 3*a1*a2");
    CHECK_THROWS(a.constant_value());
    CHECK((a * a).substitute({{"a1", Scalar(3)}}) == Scalar(9));
    CHECK((a - a).is_zero());
  }

  TEST_CASE("scalar ring laws on random samples") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
      auto x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
      CHECK(x * y == y * x);
      CHECK(x + y == y + x);
      CHECK(x * (y + z) == x * y + x * z);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x - x == Scalar());
    }
  }

  TEST_CASE("nc_mul") {
    auto al = xyz();
    auto x = NCPoly::generator(al, 1), y = NCPoly::generator(al, 2);
    CHECK((x * y).to_string() == "xy");
    CHECK(NCPoly::one(al) * (x + y) == x + y);
    CHECK(((x + y) * x).to_string() == "xx + yx");
    CHECK_THROWS(nc_mul(x, NCPoly::generator(Alphabet::make({"u"}), 1)));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
      auto p = NCPoly::word(al, random_word(rng, 3, 3), 2) + NCPoly::word(al, random_word(rng, 3, 3), -1);
      auto q = NCPoly::word(al, random_word(rng, 3, 3)) + x;
      auto r = NCPoly::word(al, random_word(rng, 3, 3)) - y;
      CHECK((p * q) * r == p * (q * r));
      CHECK(p * (q + r) == p * q + p * r);
    }
  }

  TEST_CASE("necklaces") {
    auto al = xyz();
    CHECK(render(*al, cyclic_canon(al->parse_word("yx"))) == "[xy]");
    CHECK(render(*al, cyclic_canon(al->parse_word("xyx"))) == "[xxy]");
    CHECK(render(*al, cyclic_canon(Word{})) == "[]");
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
      Word w = random_word(rng, 3, 8);
      // brute force: least of all rotations
      Word best = w;
      for (size_t r = 0; r < w.size(); ++r)
        if (w.rotated(r) < best) best = w.rotated(r);
      CHECK(cyclic_canon(w).word() == best);
      for (size_t r = 0; r < w.size(); ++r) CHECK(cyclic_canon(w.rotated(r)) == cyclic_canon(w));
    }
  }

  TEST_CASE("sym monomials") {
    auto al = xyz();
    SymMonomial a({Necklace(al->parse_word("yx")), Necklace(al->parse_word("x"))});
    CHECK(render(*al, a) == "[x][xy]");
    CHECK(a * SymMonomial() == a);
    CHECK(render(*al, a * SymMonomial::of(Necklace(al->parse_word("x")))) == "[x][x][xy]");
  }

  TEST_CASE("permutations") {
    auto c123 = Permutation::from_cycles("(123)", 3);
    CHECK(c123.to_string() == "[2,3,1]");
    CHECK(c123.cycles() == "(123)");
    CHECK(c123.sign() == 1);
    CHECK(Permutation::transposition(3, 1, 2).sign() == -1);
    CHECK(Permutation::from_cycles("(12)(23)", 3) == Permutation::from_cycles("(123)", 3));
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
      int n = std::uniform_int_distribution<int>(0, 5)(rng);
      auto s = random_perm(rng, n), t = random_perm(rng, n), u = random_perm(rng, n);
      CHECK((s * t) * u == s * (t * u));
      CHECK(s * s.inverse() == Permutation::identity(n));
      CHECK((s * t).sign() == s.sign() * t.sign());
    }
  }

  TEST_CASE("permute on tensors") {
    auto al = xyz();
    Tensor t(TensorKey{al->parse_word("x"), al->parse_word("y"), al->parse_word("z")});
    CHECK(render(*al, permute(Permutation::from_cycles("(123)", 3), t)) == "z#x#y");
    CHECK(permute(Permutation::identity(3), t) == t);
    Tensor two(TensorKey{al->parse_word("x"), al->parse_word("y")});
    CHECK(render(*al, permute(Permutation::transposition(2, 1, 2), two)) == "y#x");
    CHECK_THROWS(permute(Permutation::identity(2), t));
    std::mt19937_64 rng(9);
    for (int i = 0; i < 100; ++i) {
      int n = std::uniform_int_distribution<int>(1, 5)(rng);
      TensorKey k;
      for (int j = 0; j < n; ++j) k.push_back(random_word(rng, 3, 2));
      Tensor x(k, 3);
      auto s = random_perm(rng, n), u = random_perm(rng, n);
      CHECK(permute(s * u, x) == permute(s, permute(u, x)));
    }
  }

  TEST_CASE("perm_block and perm_cross") {
    auto sw = Permutation::transposition(2, 1, 2);
    CHECK(perm_block(sw, {1, 1}) == sw);
    CHECK(perm_block(sw, {2, 1}).to_string() == "[2,3,1]");
    CHECK(perm_block(Permutation::identity(3), {2, 0, 3}) == Permutation::identity(5));
    CHECK_THROWS(perm_block(sw, {1}));
    CHECK(perm_cross(Permutation::identity(1), Permutation::identity(1)) == Permutation::identity(2));
    CHECK(perm_cross(sw, Permutation::identity(1)).to_string() == "[2,1,3]");
    CHECK(perm_cross(Permutation::identity(0), sw) == sw);

    std::mt19937_64 rng(13);
    for (int i = 0; i < 100; ++i) {
      // oracle: acting with tau^{k} on a concatenation of blocks equals
      // permuting the blocks themselves
      int n = std::uniform_int_distribution<int>(1, 4)(rng);
      auto tau = random_perm(rng, n);
      std::vector<int> sizes;
      std::vector<TensorKey> blocks;
      int total = 0;
      for (int b = 0; b < n; ++b) {
        int k = std::uniform_int_distribution<int>(0, 3)(rng);
        sizes.push_back(k);
        TensorKey blk;
        for (int j = 0; j < k; ++j) blk.push_back(Word::letter(++total % 200 + 1));
        blocks.push_back(blk);
      }
      TensorKey flat, moved;
      for (auto& b : blocks) flat.insert(flat.end(), b.begin(), b.end());
      std::vector<TensorKey> placed(n);
      for (int b = 0; b < n; ++b) placed[tau(b + 1) - 1] = blocks[b];
      for (auto& b : placed) moved.insert(moved.end(), b.begin(), b.end());
      CHECK(permute_key(perm_block(tau, sizes), flat) == moved);

      int m = std::uniform_int_distribution<int>(0, 3)(rng);
      auto u = random_perm(rng, n), u2 = random_perm(rng, n), v = random_perm(rng, m), v2 = random_perm(rng, m);
      CHECK(perm_cross(u, v) * perm_cross(u2, v2) == perm_cross(u * u2, v * v2));
    }
  }

  TEST_CASE("renderings") {
    auto al = xyz();
    SweedlerElem e = SweedlerElem(SweedlerKey{Word{}, al->parse_word("x"), SymMonomial::of(Necklace(al->parse_word("x")))}) -
                     SweedlerElem(SweedlerKey{al->parse_word("x"), Word{}, SymMonomial::of(Necklace(al->parse_word("x")))});
    CHECK(render(*al, e) == "1#x.[x] - x#1.[x]");
    CHECK(render(*al, flip12(e)) == "-1#x.[x] + x#1.[x]");
    SweedlerElem p(SweedlerKey{al->parse_word("x"), al->parse_word("y")}, Scalar::parameter("a7") + Scalar::parameter("a8"));
    CHECK(render(*al, p) == "(a7 + a8)*x#y");
    CHECK(render(*al, SweedlerElem()) == "0");
  }
}
