#include <doctest.h>

#include <random>

#include "ldot/engine.hpp"
#include "ldot/props.hpp"
#include "ldot/rules.hpp"
#include "ldot/syntax.hpp"
#include "ldot/translate.hpp"

using namespace ldot;

namespace {
Term ld(const std::string& s) { return parse(s, Calculus::ld); }
Term lm(const std::string& s) { return parse(s, Calculus::lam); }
Term lamd(const std::string& s) { return parse(s, Calculus::lamd); }

std::string replace_once(std::string s, const std::string& from, const std::string& to) {
  auto at = s.find(from);
  REQUIRE(at != std::string::npos);
  REQUIRE(s.find(from, at + 1) == std::string::npos);
  return s.replace(at, from.size(), to);
}

const std::string S = "\\x y z. x z (y z)";
// As printed, with the second application reading "x y"; the computed
// translations have "x z" there, which is what S itself applies.
const std::string S_star_printed =
    "\\k1. k1 (\\x k2. k2 (\\y k3. k3 (\\z k4. x y (\\f. (\\k5. y z (\\a. f a k5)) k4))))";
const std::string S_star_hash_printed = "\\x y z. S0 k4. (\\f. (\\k5. (\\a. k5 $ f a) $ y z) k4) $ x y";
}  // namespace

TEST_CASE("CPS of the identity") {
  Term expect = lm("\\k1. k1 (\\x. \\k2. k2 x)");
  CHECK(cps_star(ld("\\x. x")) == expect);
  CHECK(materzok_cps(lamd("\\x. x")) == expect);
  CHECK(ds_hash(expect) == ld("\\x. x"));
}

TEST_CASE("S combinator") {
  Term s_star = cps_star(ld(S));
  CHECK(s_star == lm(replace_once(S_star_printed, "x y (", "x z (")));
  CHECK(s_star != lm(S_star_printed));
  Term s_star_hash = ds_hash(s_star);
  CHECK(s_star_hash == ld(replace_once(S_star_hash_printed, "$ x y", "$ x z")));
  CHECK(cps_star(s_star_hash) == s_star);
}

TEST_CASE("star and dagger clauses") {
  CHECK(cps_star(ld("x")) == lm("\\k. k x"));
  CHECK(cps_star(ld("^(x)")) == lm("x"));
  CHECK(cps_star(ld("x y")) == lm("x y"));
  CHECK(cps_star(ld("^(x y)")) == lm("\\k. x y (\\z. z k)"));
  CHECK(cps_dagger(ld("$(x y)")) == cps_star(ld("x y")));
  CHECK(cps_dagger(ld("\\x. x")) == lm("\\x. \\k. k x"));
  CHECK_THROWS_AS(cps_dagger(ld("x y")), NotAValue);
}

TEST_CASE("hash and natural clauses") {
  CHECK(ds_natural(lm("x")) == ld("x"));
  CHECK(ds_hash(lm("x")) == ld("^(x)"));
  CHECK(ds_hash(lm("\\k. k y")) == ld("y"));
  CHECK(ds_hash(lm("\\k. k k")) == ld("S0 k. k k"));
  CHECK(ds_hash(lm("x y")) == ld("x y"));
  CHECK(ds_natural(lm("x y")) == ld("$(x y)"));
  CHECK(ds_natural(lm("\\x. x")) == ld("\\x. ^(x)"));
}

TEST_CASE("iota and pi") {
  CHECK(iota(lamd("x")) == ld("x"));
  CHECK(iota(lamd("S0 x. x")) == ld("^(\\x. x)"));
  Prelude p{{"I", lamd("\\x. x")}};
  CHECK(iota(parse("I $ I z", Calculus::lamd, p)) == ld("$((\\x. x) z) (\\x. x)"));
  CHECK(pi(ld("x")) == lamd("x"));
  CHECK(pi(ld("$(z)")) == lamd("\\x. x $ z"));
  CHECK(pi(ld("^(z)")) == lamd("(\\x. S0 k. x k) z"));
}

TEST_CASE("Materzok's CPS") {
  CHECK(materzok_cps(lamd("x")) == lm("\\k. k x"));
  // the shift0 clause applied to the value clause; not beta-eta equal to \x. x
  Term s0 = materzok_cps(lamd("S0 x. x"));
  CHECK(s0 == lm("\\x. \\k. k x"));
  CHECK(*normalize_lambda(s0) != lm("\\x. x"));
  CHECK(materzok_cps(lamd("a $ b")) == lm("\\k. (\\k1. k1 a) (\\x. (\\k2. k2 b) x k)"));
}

TEST_CASE("translation names") {
  CHECK(*translation_from_string("cps-ld") == Translation::materzok_cps);
  CHECK(*translation_from_string("pi") == Translation::pi);
  CHECK_FALSE(translation_from_string("nope"));
  CHECK(source_calculus(Translation::pi) == Calculus::ld);
  CHECK(target_calculus(Translation::pi) == Calculus::lamd);
  CHECK(source_calculus(Translation::hash) == Calculus::lam);
}

TEST_CASE("translations respect loose indices") {
  // translating under a binder equals translating the opened body
  Term body = Term::app(Term::bvar(0), var("y"));
  Term whole = ds_natural(Term::abs("x", body));
  CHECK(whole == Term::abs("x", ds_hash(body)));
}

TEST_CASE("star of hash on normal lambda terms stays normal") {
  GenConfig g;
  g.calculus = Calculus::lam;
  int checked = 0;
  for (int i = 0; i < 500; ++i) {
    std::mt19937_64 rng(i);
    Term n = gen_term(g, rng);
    if (!redexes(n, Calculus::lam).empty()) continue;
    ++checked;
    CHECK(redexes(cps_star(ds_hash(n)), Calculus::lam).empty());
  }
  CHECK(checked > 50);
  // values in general do not have normal images
  CHECK_FALSE(redexes(cps_star(ld("$($(c) (b a))")), Calculus::lam).empty());
}
