#pragma once

// Random term generation and property suites for the translation theorems.
//
// Every suite draws its inputs from gen_term with a per-trial seed derived
// from (seed, trial index), so a report is fully determined by its options
// regardless of how many worker threads ran it.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "ldot/engine.hpp"
#include "ldot/term.hpp"

namespace ldot {

struct GenConfig {
  Calculus calculus = Calculus::lam;
  std::size_t max_size = 10;
  std::vector<std::string> free_vars{"a", "b", "c"};
  std::uint64_t seed = 42;
  /// Relative weight of each non-leaf constructor; missing kinds weigh 1.
  std::map<Kind, double> weights;
};

/// Term of the configured calculus with exactly `size` nodes.
Term gen_term_of_size(const GenConfig& cfg, std::size_t size, std::mt19937_64& rng);
/// Size drawn uniformly from [1, max_size].
Term gen_term(const GenConfig& cfg, std::mt19937_64& rng);
Term gen_term(const GenConfig& cfg);
/// A value of the configured calculus, size at most max_size.
Term gen_value(const GenConfig& cfg, std::mt19937_64& rng);

/// Seed of trial `index` in a run seeded with `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

struct Counterexample {
  std::string input;
  std::string detail;
};

struct PropReport {
  std::string name;
  std::size_t trials = 0;
  std::size_t passes = 0;
  std::size_t fuel_exhaustions = 0;
  std::vector<Counterexample> counterexamples;
  /// Witnesses that came from a proof-guided construction rather than search.
  std::size_t constructed = 0;
  std::vector<std::string> notes;
  double seconds = 0;

  bool ok() const { return counterexamples.empty(); }
  double fuel_rate() const { return trials ? double(fuel_exhaustions) / double(trials) : 0.0; }
  nlohmann::json to_json() const;
  std::string summary() const;
};

struct SuiteOptions {
  std::size_t trials = 300;
  std::size_t max_size = 10;
  std::uint64_t seed = 42;
  Fuel fuel{};
  /// 0 means one per hardware thread.
  unsigned threads = 0;
};

PropReport check_right_inverse(const SuiteOptions& o);
PropReport check_left_post_inverse(const SuiteOptions& o);
PropReport check_single_step_star(const SuiteOptions& o);
PropReport check_single_step_hash(const SuiteOptions& o);
PropReport check_subst_lemmas(const SuiteOptions& o);
PropReport check_helper_lemmas(const SuiteOptions& o);
PropReport check_iota_pi(const SuiteOptions& o);
PropReport check_cps_equivalence(const SuiteOptions& o);
PropReport check_confluence_sample(const SuiteOptions& o);

/// Suite names accepted by run_suite, in the order `all` runs them.
const std::vector<std::string>& suite_names();
/// Default options for a suite: sizes and fuel the suite is tuned for.
SuiteOptions default_options(std::string_view suite);
std::optional<PropReport> run_suite(std::string_view suite, const SuiteOptions& o);

// ---------------------------------------------------------------------------
// Exhaustive enumeration

/// Every term of calculus c with exactly `size` nodes whose free variables
/// come from `free_vars` (bound variables range over all enclosing binders).
std::vector<Term> enumerate_terms(Calculus c, std::size_t size, const std::vector<std::string>& free_vars);

/// Greedily replaces subterms by `leaf` while `still_fails` keeps holding.
Term shrink(const Term& t, const Term& leaf, const std::function<bool(const Term&)>& still_fails);

}  // namespace ldot
