#include "doctest.h"
#include "ncp/problem.hpp"
#include "ncp/wheeled.hpp"
#include "test_util.hpp"

using namespace ncp;
using namespace ncp::testing;

namespace {

ParseError parse_error(const std::string& text) {
  try {
    parse_problem(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no parse error for: " << text);
  return ParseError(0, 0, "");
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("KKS and Casimir files") {
    auto p = parse_problem("generators: x\nbracket twelve { {x,x} = 1#x - x#1 }\n");
    auto al = Alphabet::make({"x"});
    auto kks = BracketSpec::from_upper(BracketKind::Double, al, {{{1, 1}, sw(*al, "1#x - x#1")}});
    CHECK(p.pair() == CoupledPair(BracketSpec(BracketKind::RightDouble, al), kks));

    auto c = parse_problem("generators: x\nbracket twelve {\n  {x,x} = 1#x.[x] - x#1.[x]\n}\n");
    auto cp = c.pair();
    const auto& v = cp.twelve.table(1, 1);
    CHECK(v.size() == 2);
    SweedlerKey a{Word{}, Word::letter(1), SymMonomial({Necklace(Word::letter(1))})};
    SweedlerKey b{Word::letter(1), Word{}, SymMonomial({Necklace(Word::letter(1))})};
    CHECK(v.coefficient(a) == Scalar(1));
    CHECK(v.coefficient(b) == Scalar(-1));
    CHECK(cp.id.is_zero());
  }

  TEST_CASE("syntax and load errors carry positions") {
    auto e = parse_error("generators: x y\nbracket twelve {\n  {x,y = x#x\n}\n");
    CHECK(e.line() == 3);
    CHECK(e.col() == 8);  // where the closing brace should be

    e = parse_error("generators: x\nbracket id {\n  {x,z} = 1#x\n}\n");
    CHECK(e.line() == 3);
    CHECK(e.col() == 6);
    CHECK(std::string(e.what()).find("undeclared generator 'z'") != std::string::npos);

    e = parse_error("generators: x\nbracket id {\n  {x,x} = 1#x\n}\n");
    CHECK(std::string(e.what()).find("non-skew table entry {x,x}") != std::string::npos);
    CHECK(e.line() == 3);

    e = parse_error("generators: x y\nbracket id {\n  {x,y} = 1#x\n  {y,x} = 1#x\n}\n");
    CHECK(std::string(e.what()).find("contradictory duplicate entry {y,x}") != std::string::npos);
    CHECK(e.line() == 4);

    CHECK(std::string(parse_error("generators: x\nbracket twelve { {x,x} = 0.5*1#x - 0.5*x#1 }").what()).find("decimal") != std::string::npos);
    CHECK(std::string(parse_error("generators: x\nbracket twelve { {x,x} = t*1#x - t*x#1 }").what()).find("undeclared parameter 't'") !=
          std::string::npos);
    parse_error("bracket twelve { }");
    parse_error("generators: x\nfoo");
    parse_error("generators: x x");
    parse_error("generators: x\nrmatrix R dim 2 = E13@E11");
    parse_error("pplie { dim 2; mu(1,3) = e1; }");
    parse_error("pplie { dim 2; mu(1,1) = e1; mu(1,1) = e2; }");
  }

  TEST_CASE("lower entries are read through skew symmetry") {
    auto p = parse_problem("generators: x y\nbracket id {\n  {y,x} = x#y\n  {x,y} = -y#x // same entry\n}\n");
    auto al = Alphabet::make({"x", "y"});
    auto pair = p.pair();
    CHECK(pair.id.table(1, 2) == sw(*al, "-y#x"));
    CHECK(pair.id.table(2, 1) == sw(*al, "x#y"));
  }

  TEST_CASE("parameters with values are substituted on load") {
    auto p = parse_problem("generators: x\nparams: t s=2/3\nbracket twelve { {x,x} = (t + s)*1#x - (t + s)*x#1 }\n");
    auto al = Alphabet::make({"x"});
    CHECK(p.pair().twelve.table(1, 1) == sw(*al, "(t + 2/3)*1#x - (t + 2/3)*x#1"));
    // the written form is kept
    CHECK(p.brackets.at(Part::twelve).at({1, 1}) == sw(*al, "(t + s)*1#x - (t + s)*x#1"));
  }

  TEST_CASE("render then parse is the identity on catalog files") {
    for (auto& name : catalog_names()) {
      CAPTURE(name);
      auto e = catalog(name);
      auto p = problem_from_catalog(e);
      auto text = render(p);
      CHECK(parse_problem(text) == p);
      CHECK(render(parse_problem(text)) == text);
      if (e.is_pair()) CHECK(p.pair() == displayed_pair(e));
    }
  }

  TEST_CASE("other declarations round-trip") {
    std::string t =
        "generators: x y\nparams: a b=-1/2\ncatalog family.3 lambda1=a lambda2=7\nrmatrix r dim 2 = (a + b)*E11@E12 - (a + b)*E12@E11\n"
        "pplie {\n  dim 2;\n  mu(1,2) = 2*e1 - a*e2;\n  br(2,1) = e2;\n}\nrun verify-coupled\nrun rep-check --n 2 --deg 1\n";
    auto p = parse_problem(t);
    CHECK(p.catalog == std::optional<std::string>("family.3"));
    CHECK(p.runs.size() == 2);
    CHECK(p.runs[1] == std::vector<std::string>{"rep-check", "--n", "2", "--deg", "1"});
    CHECK(p.pplie->mu_at(1, 2) == Vec(1, Scalar(2)) - Vec(2, Scalar::parameter("a")));
    CHECK(parse_problem(render(p)) == p);
  }

  TEST_CASE("pair sources") {
    auto b = catalog("B");
    ProblemFile p;
    p.generators = {"x", "y", "z"};
    p.R = b.R;
    p.r = b.r;
    CHECK(p.pair() == spec_from_r(*b.R, *b.r));
    auto q = parse_problem("generators: x y z\ncatalog B\n");
    CHECK(q.pair() == p.pair());
    auto h = parse_problem("generators: x y z\npplie { dim 3; mu(1,2) = e3; mu(2,1) = -e3; }\n");
    CHECK(h.pair().twelve.table(1, 2) == sw(*h.alphabet(), "1#z + z#1"));
    CHECK_THROWS_AS(parse_problem("generators: x\n").pair(), std::invalid_argument);
  }

  TEST_CASE("O(A) element input") {
    auto al = Alphabet::make({"x", "y"});
    CHECK(render(*al, parse_oelem(*al, "x#y@[2,1]")) == "(x,y)⊗1⊗perm[2,1]");
    CHECK(render(*al, parse_oelem(*al, "2*x#1.[xy]")) == "2*(x,1)⊗[xy]⊗perm[1,2]");
    CHECK(parse_oelem(*al, "xy - yx") == o_poly(poly(al, "xy - yx")));
    CHECK(parse_oelem(*al, "[x][y] + 3") == o_sym(sym(*al, "[x][y] + 3")));
    CHECK_THROWS_AS(parse_oelem(*al, "x#y@[1]"), ParseError);
  }
}
