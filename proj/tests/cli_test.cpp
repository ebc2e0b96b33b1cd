#include <doctest.h>

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "ldot/cli.hpp"

namespace {
struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "ldot");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = ldot::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string last_line(const std::string& s) {
  auto end = s.find_last_not_of('\n');
  auto start = s.rfind('\n', end);
  return s.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1);
}
}  // namespace

TEST_CASE("parse") {
  auto r = run({"parse", "--calculus", "lam", "x"});
  CHECK(r.code == 0);
  CHECK(r.out == "x\n");
  CHECK(run({"parse", "S0 k. k $ x"}).out == "S0 k. k $ x\n");
  CHECK(run({"parse", "--calculus", "ld", "--sugar", "S0 k. k"}).out == "S0 k. k\n");
  CHECK(run({"parse", "--calculus", "ld", "S0 k. k"}).out == "^(\\k. k)\n");
  CHECK(run({"parse", "-D", "T=\\x y. x", "T a"}).out == "(\\x. \\y. x) a\n");
  CHECK(run({"parse", "--no-prelude", "I"}).out == "I\n");
}

TEST_CASE("translate") {
  CHECK(run({"translate", "--via", "star", "\\x. x"}).out == "\\k. k (\\x. \\k2. k2 x)\n");
  CHECK(run({"translate", "--via", "cps-ld", "\\x. x"}).out == "\\k. k (\\x. \\k2. k2 x)\n");
  CHECK(run({"translate", "--via", "hash", "\\k. k (\\x. \\k2. k2 x)"}).out == "\\x. x\n");
  auto star = run({"translate", "--via", "star", "\\x y. y (x x)"});
  auto back = run({"translate", "--via", "hash", last_line(star.out)});
  // hash is a right inverse of star: star after hash gives the CPS term back
  auto again = run({"translate", "--via", "star", last_line(back.out)});
  CHECK(again.out == star.out);
  auto bad = run({"translate", "--via", "pi", "--calculus", "lam", "x"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("expects ld") != std::string::npos);
  CHECK(run({"translate", "--via", "dagger", "x y"}).code == 1);
}

TEST_CASE("reduce") {
  auto r = run({"reduce", "--calculus", "ld", "--strategy", "lo", "I $ I (S0 f. f (f z))"});
  CHECK(r.code == 0);
  CHECK(last_line(r.out).size() >= 1);
  CHECK(last_line(r.out).substr(last_line(r.out).size() - 1) == "z");

  auto j = run({"reduce", "--calculus", "lamd", "--format", "json", "I $ I (S0 f. f (f z))"});
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["final"] == "z");
  CHECK(doc["status"] == "complete");
  CHECK(doc["steps"].size() == 9);

  auto omega = run({"reduce", "--fuel", "3", "(\\x. x x) (\\x. x x)"});
  CHECK(omega.code == 0);
  CHECK(omega.err.find("fuel") != std::string::npos);
}

TEST_CASE("reach") {
  auto r = run({"reach", "--calculus", "ld", "--format", "json", "(\\x. x) ((\\y. y) z)", "z"});
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["status"] == "found");
  CHECK(doc["trace"]["steps"].size() == 2);
  auto none = run({"reach", "--calculus", "ld", "x", "y"});
  CHECK(none.out.find("refuted") == 0);
}

TEST_CASE("check") {
  auto ok = run({"check", "--suite", "right-inverse", "--n", "20", "--format", "json"});
  CHECK(ok.code == 0);
  auto doc = nlohmann::json::parse(ok.out);
  CHECK(doc["property"] == "right-inverse");
  CHECK(doc["passes"] == 20);
  auto bad = run({"check", "--suite", "single-step-star", "--n", "100"});
  CHECK(bad.code == 2);
  CHECK(bad.out.find("counterexample") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"parse", "(\\x."}).code == 1);
  CHECK(run({"check", "--suite", "nope"}).code == 1);
  CHECK(run({"parse", "-D", "novalue", "x"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}
