#include <doctest.h>

#include <random>

#include "ldot/props.hpp"
#include "ldot/syntax.hpp"

using namespace ldot;

TEST_CASE("ld sugar expands to the unary core") {
  CHECK(parse("S0 x. x", Calculus::ld) == parse("^(\\x. x)", Calculus::ld));
  CHECK(parse("m $ n", Calculus::ld) == parse("$(n) m", Calculus::ld));
  Term let = parse("let x = p q in ^(x)", Calculus::ld);
  CHECK(let == ld_let("x", parse("p q", Calculus::ld), parse("^(x)", Calculus::ld)));
  CHECK(let == parse("^(\\k. $(p q) (\\x. $(^(x)) k))", Calculus::ld));
}

TEST_CASE("sugar folding round-trips") {
  for (const char* s : {"S0 x. x", "let x = p q in ^(x)", "m $ n", "\\x. S0 k. k $ x"}) {
    Term t = parse(s, Calculus::ld);
    std::string folded = pretty(t, Calculus::ld, {true, false});
    CHECK(parse(folded, Calculus::ld) == t);
  }
  CHECK(pretty(parse("^(\\x. x y)", Calculus::ld), Calculus::ld, {true, false}) == "S0 x. x y");
}

TEST_CASE("lamd terms") {
  Term e = parse("I $ I (S0 f. f (f z))", Calculus::lamd, {{"I", parse("\\x. x", Calculus::lamd)}});
  REQUIRE(e.is(Kind::dollar));
  CHECK(e.left() == parse("\\x. x", Calculus::lamd));
  CHECK(e.right().is(Kind::app));
  CHECK(e.right().arg().is(Kind::shift0));

  Term r = parse("m $ n $ l", Calculus::lamd);
  CHECK(r == dollar(var("m"), dollar(var("n"), var("l"))));
  // unary forms are macros here
  CHECK(parse("$(e)", Calculus::lamd) == parse("\\x. x $ e", Calculus::lamd));
  CHECK(parse("^(e)", Calculus::lamd) == parse("(\\x. S0 k. x k) e", Calculus::lamd));
}

TEST_CASE("printing") {
  CHECK(pretty(lam("x", var("x")), Calculus::lam) == "\\x. x");
  CHECK(pretty(parse("\\x. x", Calculus::lam), Calculus::lam, {false, true}).find("λ") != std::string::npos);
  CHECK(parse("λx. ↑(x)", Calculus::ld) == parse("\\x. ^(x)", Calculus::ld));
}

TEST_CASE("parse of pretty is the identity on random terms") {
  for (Calculus c : {Calculus::lam, Calculus::ld, Calculus::lamd}) {
    GenConfig g;
    g.calculus = c;
    g.max_size = 14;
    for (int i = 0; i < 300; ++i) {
      std::mt19937_64 rng(i);
      Term t = gen_term(g, rng);
      CHECK(parse(pretty(t, c), c) == t);
      if (c == Calculus::ld) CHECK(parse(pretty(t, c, {true, true}), c) == t);
    }
  }
}

TEST_CASE("calculus inference and errors") {
  CHECK(infer_calculus("\\x. x") == Calculus::lam);
  CHECK(infer_calculus("^(x)") == Calculus::ld);
  CHECK(infer_calculus("let x = y in x") == Calculus::ld);
  CHECK(infer_calculus("S0 k. k") == Calculus::lamd);
  CHECK(infer_calculus("a $ b") == Calculus::lamd);
  CHECK_THROWS_AS(parse("(\\x.", Calculus::lam), ParseError);
  CHECK_THROWS_AS(parse("^(x)", Calculus::lam), ParseError);
  CHECK_THROWS_AS(parse("x )", Calculus::lam), ParseError);
}
