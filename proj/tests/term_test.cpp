#include <doctest.h>

#include <random>

#include "ldot/props.hpp"
#include "ldot/syntax.hpp"
#include "ldot/term.hpp"
#include "oracle/named.hpp"

using namespace ldot;

namespace {
Term ld(const char* s) { return parse(s, Calculus::ld); }
Term lm(const char* s) { return parse(s, Calculus::lam); }
}  // namespace

TEST_CASE("alpha equality and hashing ignore binder names") {
  CHECK(lm("\\x. x") == lm("\\y. y"));
  CHECK(lm("\\x. x").hash() == lm("\\y. y").hash());
  CHECK(lm("\\x y. x") != lm("\\x y. y"));
  CHECK(lm("x") != lm("y"));
  CHECK(ld("$(x)") != ld("^(x)"));
}

TEST_CASE("size counts parse-tree nodes") {
  CHECK(lm("x").size() == 1);
  CHECK(lm("\\x. x").size() == 2);
  CHECK(ld("^($(x))").size() == 3);
}

TEST_CASE("free variables") {
  CHECK_FALSE(is_free_in("x", lm("\\x. x")));
  CHECK(is_free_in("x", lm("x y")));
  CHECK(count_free("x", lm("x (\\x. x) x")) == 2);

  // against the oracle's own walker, on random terms
  GenConfig g;
  g.calculus = Calculus::ld;
  for (int i = 0; i < 200; ++i) {
    std::mt19937_64 rng(i);
    Term t = gen_term(g, rng);
    CHECK(free_names(t) == oracle::fv(oracle::from_term(t)));
  }
}

TEST_CASE("substitution is capture avoiding") {
  CHECK(subst(lm("x"), lm("\\y. y"), "x") == lm("\\y. y"));
  Term r = subst(lm("\\y. x"), lm("y"), "x");
  CHECK(r == lm("\\z. y"));
  CHECK(r != lm("\\y. y"));
  CHECK(subst(lm("x x"), lm("\\z. z"), "x") == lm("(\\z. z) (\\z. z)"));
  CHECK(subst(lm("\\x. x"), lm("y"), "x") == lm("\\x. x"));

  // agrees with textbook named substitution
  GenConfig g;
  g.calculus = Calculus::ld;
  g.max_size = 8;
  for (int i = 0; i < 300; ++i) {
    std::mt19937_64 rng(1000 + i);
    Term m = gen_term(g, rng), v = gen_value(g, rng);
    Term expect = oracle::to_term(oracle::subst(oracle::from_term(m), oracle::from_term(v), "a"));
    CHECK(subst(m, v, "a") == expect);
  }
}

TEST_CASE("de Bruijn plumbing") {
  Term body = Term::app(Term::bvar(0), Term::bvar(1));
  CHECK(instantiate(body, var("v")) == Term::app(var("v"), Term::bvar(0)));
  CHECK(shift(body, 2, 1) == Term::app(Term::bvar(0), Term::bvar(3)));
  CHECK(has_loose(body, 1));
  CHECK_FALSE(has_loose(body, 2));
  CHECK(body.loose_bound() == 2);

  NameSupply names;
  names.avoid(var("a"));
  auto [open, used] = open_loose(body, names);
  CHECK(open.locally_closed());
  CHECK(used.size() == 2);
  CHECK(close_loose(open, used) == body);
}

TEST_CASE("paths address subterms") {
  Term t = lm("(\\x. x y) z");
  CHECK(*subterm_at(t, {1}) == lm("z"));
  CHECK(subterm_at(t, {0, 0, 1})->name() == "y");
  CHECK_FALSE(subterm_at(t, {1, 0}).has_value());
  CHECK(replace_at(t, {1}, lm("w")) == lm("(\\x. x y) w"));
  CHECK(concat({0}, {1, 1}) == Path{0, 1, 1});
}

TEST_CASE("value classification") {
  CHECK(is_value(ld("$(x y)"), Calculus::ld));
  CHECK_FALSE(is_value(ld("^(\\x. x)"), Calculus::ld));
  CHECK_FALSE(is_value(ld("x y"), Calculus::ld));
  CHECK(is_value(lm("\\x. x y"), Calculus::lam));
}

TEST_CASE("fresh names skip the avoid set") {
  NameSupply s({"k", "k2"});
  CHECK(s.fresh("k") == "k3");
  CHECK(s.fresh("k") == "k4");
  CHECK(fresh_name("x", {"y"}) == "x");
}
