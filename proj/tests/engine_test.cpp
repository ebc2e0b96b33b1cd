#include <doctest.h>

#include <map>
#include <random>

#include "ldot/engine.hpp"
#include "ldot/props.hpp"
#include "ldot/syntax.hpp"
#include "ldot/translate.hpp"

using namespace ldot;

namespace {
Term ld(const char* s) { return parse(s, Calculus::ld); }
Term lm(const char* s) { return parse(s, Calculus::lam); }
Term lamd(const char* s) { return parse(s, Calculus::lamd); }

std::map<std::string, int> multiset(const Trace& t) {
  std::map<std::string, int> m;
  for (const auto& s : t.steps) ++m[step_tag(s)];
  return m;
}
}  // namespace

TEST_CASE("evaluation example in lamd") {
  Prelude p{{"I", lamd("\\x. x")}};
  Trace t = reduce(parse("I $ I (S0 f. f (f z))", Calculus::lamd, p), Calculus::lamd);
  CHECK(t.status == TraceStatus::complete);
  CHECK(t.final_term() == lamd("z"));
  // rule labels of the printed chain, in order
  const std::vector<std::string> chain{"dollar_slash_shift", "beta_v", "beta_v", "dollar_v", "beta_v",
                                      "beta_v",             "beta_v", "dollar_v", "beta_v"};
  std::map<std::string, int> expect;
  for (const auto& r : chain) ++expect[r];
  CHECK(multiset(t) == expect);
  CHECK(!replay(t, Calculus::lamd));
}

TEST_CASE("reduce") {
  Trace x = reduce(lm("x"), Calculus::lam);
  CHECK(x.steps.empty());
  CHECK(x.status == TraceStatus::complete);
  Trace omega = reduce(lm("(\\x. x x) (\\x. x x)"), Calculus::lam, Fuel{10, 100});
  CHECK(omega.status == TraceStatus::fuel_exhausted);
  CHECK(omega.steps.size() == 10);
  // leftmost-outermost picks the root first
  Trace lo = reduce(lm("(\\x. y) ((\\x. x x) (\\x. x x))"), Calculus::lam, Fuel{10, 100});
  CHECK(lo.final_term() == lm("y"));
}

TEST_CASE("reaches") {
  CHECK(reaches(ld("x y"), ld("x y"), Calculus::ld).trace->steps.empty());
  auto one = reaches(ld("(\\x. x) y"), ld("y"), Calculus::ld);
  REQUIRE(one.status == SearchStatus::found);
  REQUIRE(one.trace->steps.size() == 1);
  CHECK(one.trace->steps[0].rule == Rule::beta_v);

  Term s = ld("\\x y z. x z (y z)");
  Term target = ds_hash(cps_star(s));
  auto r = reaches(s, target, Calculus::ld, Fuel{100, 20000});
  REQUIRE(r.status == SearchStatus::found);
  std::vector<std::string> rules;
  for (const auto& st : r.trace->steps) rules.push_back(step_tag(st));
  CHECK(rules == std::vector<std::string>{"bind", "bind", "dollar_shift"});
  CHECK(!replay(*r.trace, Calculus::ld));

  // a normal form reaches nothing else; the graph is finite so this is a refutation
  CHECK(reaches(ld("x"), ld("y"), Calculus::ld).status == SearchStatus::refuted);
  CHECK(reaches(lm("(\\x. x x) (\\x. x x)"), lm("y"), Calculus::lam, Fuel{50, 1000}).status == SearchStatus::refuted);
  CHECK(reaches(lm("(\\x. x x x) (\\x. x x x)"), lm("y"), Calculus::lam, Fuel{20, 1000}).status ==
        SearchStatus::fuel_exhausted);
}

TEST_CASE("joinable") {
  auto j = joinable(ld("(\\x. x) y"), ld("y"), Calculus::ld);
  REQUIRE(j.status == SearchStatus::found);
  CHECK(j.witness->meet == ld("y"));
  CHECK(!replay(*j.witness, Calculus::ld));
  CHECK(joinable(lm("x"), lm("y"), Calculus::lam).status == SearchStatus::refuted);

  // (M N)* and \k. M* (\x. N* (\y. x y k)) are beta-eta equal
  GenConfig g;
  g.calculus = Calculus::ld;
  g.max_size = 5;
  g.free_vars = {"a", "b"};
  for (int i = 0; i < 60; ++i) {
    std::mt19937_64 rng(i);
    Term m = gen_term(g, rng), n = gen_term(g, rng);
    Term lhs = cps_star(app(m, n));
    Term rhs = lam("k", app(cps_star(m), lam("x", app(cps_star(n), lam("y", app(var("x"), var("y"), var("k")))))));
    auto r = joinable(lhs, rhs, Calculus::lam);
    CHECK(r.status == SearchStatus::found);
    if (r.witness) CHECK(!replay(*r.witness, Calculus::lam));
  }
}

TEST_CASE("lamd equality search") {
  auto eta = equal_axioms_ld(lamd("S0 x. x $ e"), lamd("e"), Fuel{});
  REQUIRE(eta.status == SearchStatus::found);
  CHECK(eta.witness->left.steps.size() + eta.witness->right.steps.size() == 1);
  CHECK(!replay(*eta.witness, Calculus::lamd));
  auto same = equal_axioms_ld(lamd("e f"), lamd("e f"), Fuel{});
  CHECK(same.status == SearchStatus::found);
  CHECK(same.witness->left.steps.empty());

  GenConfig g;
  g.calculus = Calculus::lamd;
  g.max_size = 4;
  for (int i = 0; i < 40; ++i) {
    std::mt19937_64 rng(i);
    Term e = gen_term(g, rng);
    auto r = equal_axioms_ld(pi(iota(e)), e, Fuel{40, 100000});
    CHECK(r.status == SearchStatus::found);
    if (r.witness) CHECK(!replay(*r.witness, Calculus::lamd));
  }
}

TEST_CASE("lambda normal forms") {
  CHECK(*normalize_lambda(lm("\\x. (\\y. y) x")) == lm("\\x. x"));
  CHECK_FALSE(normalize_lambda(lm("(\\x. x x) (\\x. x x)"), Fuel{10, 100}));
}

TEST_CASE("replay rejects a tampered trace") {
  Trace t = reduce(ld("(\\x. x) ((\\y. y) z)"), Calculus::ld);
  REQUIRE(!replay(t, Calculus::ld));
  Trace bad = t;
  bad.steps[0].path = {0};
  CHECK(replay(bad, Calculus::ld).has_value());
  bad = t;
  bad.steps.back().term = ld("w");
  CHECK(replay(bad, Calculus::ld).has_value());
}

TEST_CASE("trace output") {
  Trace t = reduce(ld("(\\x. x) y"), Calculus::ld);
  auto j = trace_json(t, Calculus::ld);
  CHECK(j["initial"] == "(\\x. x) y");
  CHECK(j["status"] == "complete");
  REQUIRE(j["steps"].size() == 1);
  CHECK(j["steps"][0]["rule"] == "beta_v");
  CHECK(j["steps"][0]["path"].is_array());
  CHECK(j["steps"][0]["term"] == "y");
  CHECK(trace_text(t, Calculus::ld).find("beta_v") != std::string::npos);
}
