#include "ldot/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "ldot/engine.hpp"
#include "ldot/props.hpp"
#include "ldot/syntax.hpp"
#include "ldot/translate.hpp"

namespace ldot::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Options every term-taking subcommand understands.
struct TermOptions {
  std::string calculus;
  std::vector<std::string> defines;
  bool no_prelude = false;
  bool sugar = false;
  bool unicode = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--calculus", calculus, "lam, ld or lamd; inferred from the term when omitted")
        ->check(CLI::IsMember({"lam", "ld", "lamd"}));
    cmd->add_option("-D,--define", defines, "abbreviation name=term, usable in later terms");
    cmd->add_flag("--no-prelude", no_prelude, "do not predefine I, K and S");
    cmd->add_flag("--sugar", sugar, "print ld terms with S0, binary $ and let");
    cmd->add_flag("--unicode", unicode, "print with unicode lambda and arrows");
  }

  PrintOptions print() const { return {sugar, unicode}; }

  Calculus pick(const std::string& text) const {
    if (!calculus.empty()) return *calculus_from_string(calculus);
    return infer_calculus(text);
  }

  Prelude prelude(Calculus c) const {
    Prelude p;
    if (!no_prelude) {
      p.emplace("I", parse("\\x. x", c));
      p.emplace("K", parse("\\x y. x", c));
      p.emplace("S", parse("\\x y z. x z (y z)", c));
    }
    for (const auto& d : defines) {
      auto eq = d.find('=');
      if (eq == std::string::npos || eq == 0) throw UsageError("-D expects name=term, got '" + d + "'");
      p.insert_or_assign(d.substr(0, eq), parse(d.substr(eq + 1), c, p));
    }
    return p;
  }
};

Fuel fuel_from(std::optional<std::size_t> steps, std::optional<std::size_t> frontier) {
  Fuel f;
  if (steps) f.max_steps = *steps;
  if (frontier) f.max_frontier = *frontier;
  return f;
}

void print_report(const PropReport& r, std::ostream& out) {
  out << r.summary() << "\n";
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
  for (const auto& c : r.counterexamples) out << "  counterexample: " << c.input << "\n    " << c.detail << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Translations and reductions between lam, ld and lamd", "ldot"};
  app.require_subcommand(1);

  TermOptions opts;
  std::string term, target, via, strategy = "lo", format = "text", suite = "all", report_file;
  std::optional<std::size_t> steps, frontier, trials, size;
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;

  auto* parse_cmd = app.add_subcommand("parse", "print the canonical form of a term");
  opts.attach(parse_cmd);
  parse_cmd->add_option("term", term)->required();

  auto* translate_cmd = app.add_subcommand("translate", "apply one translation");
  opts.attach(translate_cmd);
  translate_cmd->add_option("--via", via, "star, dagger, hash, natural, iota, pi or cps-ld")->required();
  translate_cmd->add_option("term", term)->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "reduce leftmost-outermost and print the trace");
  opts.attach(reduce_cmd);
  reduce_cmd->add_option("--strategy", strategy)->check(CLI::IsMember({"lo"}));
  reduce_cmd->add_option("--fuel", steps, "maximum number of steps");
  reduce_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  reduce_cmd->add_option("term", term)->required();

  auto* reach_cmd = app.add_subcommand("reach", "search for a reduction sequence from TERM to TARGET");
  opts.attach(reach_cmd);
  reach_cmd->add_option("--fuel", steps, "maximum sequence length");
  reach_cmd->add_option("--frontier", frontier, "maximum number of terms visited");
  reach_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  reach_cmd->add_option("term", term)->required();
  reach_cmd->add_option("target", target)->required();

  auto* check_cmd = app.add_subcommand("check", "run property suites");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  check_cmd->add_option("--suite", suite)->check(CLI::IsMember(suites));
  check_cmd->add_option("--n", trials, "trials per suite");
  check_cmd->add_option("--size", size, "maximum generated term size");
  check_cmd->add_option("--seed", seed);
  check_cmd->add_option("--fuel", steps, "search depth");
  check_cmd->add_option("--frontier", frontier, "search breadth");
  check_cmd->add_option("--threads", threads, "worker threads, 0 for one per core");
  check_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  check_cmd->add_option("--report", report_file, "also write the JSON reports to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? Exit::ok : Exit::usage;
  }

  try {
    if (parse_cmd->parsed()) {
      Calculus c = opts.pick(term);
      out << pretty(parse(term, c, opts.prelude(c)), c, opts.print()) << "\n";
      return Exit::ok;
    }

    if (translate_cmd->parsed()) {
      auto t = translation_from_string(via);
      if (!t) throw UsageError("unknown translation '" + via + "'");
      Calculus from = source_calculus(*t);
      if (!opts.calculus.empty() && *calculus_from_string(opts.calculus) != from)
        throw UsageError("--via " + via + " expects " + std::string(to_string(from)) + " input");
      Term m = parse(term, from, opts.prelude(from));
      out << pretty(translate(*t, m), target_calculus(*t), opts.print()) << "\n";
      return Exit::ok;
    }

    if (reduce_cmd->parsed()) {
      Calculus c = opts.pick(term);
      Term m = parse(term, c, opts.prelude(c));
      Trace tr = reduce(m, c, fuel_from(steps, std::nullopt));
      if (format == "json") {
        nlohmann::json j = trace_json(tr, c, opts.print());
        j["final"] = pretty(tr.final_term(), c, opts.print());
        out << j.dump(2) << "\n";
      } else {
        out << trace_text(tr, c, opts.print());
      }
      if (tr.status == TraceStatus::fuel_exhausted)
        err << "warning: fuel exhausted after " << tr.steps.size() << " steps; no normal form reached\n";
      return Exit::ok;
    }

    if (reach_cmd->parsed()) {
      Calculus c = opts.pick(term + " " + target);
      Prelude p = opts.prelude(c);
      Term m = parse(term, c, p), n = parse(target, c, p);
      ReachResult r = reaches(m, n, c, fuel_from(steps, frontier));
      if (format == "json") {
        nlohmann::json j{{"status", to_string(r.status)}, {"explored", r.explored}};
        if (r.trace) j["trace"] = trace_json(*r.trace, c, opts.print());
        out << j.dump(2) << "\n";
      } else {
        out << to_string(r.status) << " (" << r.explored << " terms explored)\n";
        if (r.trace) out << trace_text(*r.trace, c, opts.print());
      }
      if (r.status == SearchStatus::fuel_exhausted) err << "warning: fuel exhausted before the target was found\n";
      return Exit::ok;
    }

    if (check_cmd->parsed()) {
      std::vector<std::string> selected = suite == "all" ? suite_names() : std::vector<std::string>{suite};
      nlohmann::json all = nlohmann::json::array();
      bool refuted = false;
      std::size_t exhausted = 0;
      for (const auto& name : selected) {
        SuiteOptions o = default_options(name);
        if (trials) o.trials = *trials;
        if (size) o.max_size = *size;
        if (seed) o.seed = *seed;
        if (steps) o.fuel.max_steps = *steps;
        if (frontier) o.fuel.max_frontier = *frontier;
        o.threads = threads;
        PropReport r = *run_suite(name, o);
        refuted = refuted || !r.ok();
        exhausted += r.fuel_exhaustions;
        all.push_back(r.to_json());
        if (format == "text") print_report(r, out);
      }
      nlohmann::json doc = selected.size() == 1 ? all[0] : all;
      if (format == "json") out << doc.dump(2) << "\n";
      if (!report_file.empty()) {
        std::ofstream f(report_file);
        if (!f) throw UsageError("cannot write " + report_file);
        f << doc.dump(2) << "\n";
      }
      if (exhausted) err << "warning: " << exhausted << " trials ran out of fuel\n";
      return refuted ? Exit::counterexample : Exit::ok;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return Exit::usage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return Exit::usage;
  } catch (const std::invalid_argument& e) {  // includes NotAValue
    err << "error: " << e.what() << "\n";
    return Exit::usage;
  }
  return Exit::usage;
}

}  // namespace ldot::cli
