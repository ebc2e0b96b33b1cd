#pragma once

// Multi-step reduction, bounded search and traces.
//
// Searches are breadth first over alpha-equivalence classes. Fuel bounds the
// depth (max_steps) and the number of distinct terms visited (max_frontier).
// A search reports `refuted` only when the reachable graphs were explored
// completely without hitting either bound.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ldot/rules.hpp"
#include "ldot/syntax.hpp"

namespace ldot {

struct Fuel {
  std::size_t max_steps = 1000;
  std::size_t max_frontier = 20000;
};

struct TraceStep {
  Rule rule;
  /// Right-to-left use of an axiom; always false for reductions.
  bool reversed = false;
  Path path;
  Term term;
};

enum class TraceStatus : std::uint8_t { complete, fuel_exhausted };

struct Trace {
  Term initial;
  std::vector<TraceStep> steps;
  TraceStatus status = TraceStatus::complete;

  const Term& final_term() const { return steps.empty() ? initial : steps.back().term; }
  void append(const Trace& more);
};

enum class SearchStatus : std::uint8_t { found, refuted, fuel_exhausted };
std::string_view to_string(SearchStatus s);

struct ReachResult {
  SearchStatus status;
  std::optional<Trace> trace;
  std::size_t explored = 0;
};

struct JoinWitness {
  Trace left;
  Trace right;
  Term meet;
};

struct JoinResult {
  SearchStatus status;
  std::optional<JoinWitness> witness;
  std::size_t explored = 0;
};

enum class Strategy : std::uint8_t { leftmost_outermost };

/// Repeatedly contracts the first redex in redexes() order.
Trace reduce(const Term& m, Calculus c, Fuel fuel = {}, Strategy s = Strategy::leftmost_outermost);

/// Shortest reduction sequence from m to a term alpha-equal to target.
ReachResult reaches(const Term& m, const Term& target, Calculus c, Fuel fuel = {});

/// A common reduct of a and b. In lam, terms that both normalize within fuel
/// are decided by comparing normal forms.
JoinResult joinable(const Term& a, const Term& b, Calculus c, Fuel fuel = {});

/// Leftmost-outermost beta-eta normal form, or empty when fuel runs out.
std::optional<Term> normalize_lambda(const Term& m, Fuel fuel = {});
/// Same, with the full trace; status tells whether a normal form was reached.
Trace normalize_lambda_trace(const Term& m, Fuel fuel = {});

/// Equality under the symmetric closure of the six lamd axioms. A contracting
/// bidirectional search runs first; if it fails, a search that also uses the
/// expanding directions runs with terms capped at `size_slack` nodes above
/// the larger input. Never reports `refuted`.
JoinResult equal_axioms_ld(const Term& a, const Term& b, Fuel fuel = {}, std::size_t size_slack = 8);

/// Checks every step of a trace against its (rule, path) occurrence.
/// Returns an error description, or empty when the trace replays.
std::optional<std::string> replay(const Trace& t, Calculus c);
/// Both sides replay and end in alpha-equal terms.
std::optional<std::string> replay(const JoinWitness& w, Calculus c);

/// {"initial", "steps": [{"rule", "path", "term"}], "status"}
nlohmann::json trace_json(const Trace& t, Calculus c, PrintOptions opts = {});
std::string trace_text(const Trace& t, Calculus c, PrintOptions opts = {});

/// Rule tag as it appears in traces; reversed axiom uses get an "_rl" suffix.
std::string step_tag(const TraceStep& s);

}  // namespace ldot
