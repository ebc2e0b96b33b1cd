#pragma once

// Rule tables, redex enumeration and the one-step relation of each calculus.
//
//   ld    beta_v, eta_v, dollar_v, dollar_shift ($^), shift_dollar (^$), pure, bind
//   lam   beta, eta
//   lamd  beta_v, dollar_v, dollar_slash_shift as reductions; the six axioms
//         ax_beta_v .. ax_eta_dollar are used only by equality search.

#include <optional>
#include <string_view>
#include <vector>

#include "ldot/term.hpp"

namespace ldot {

enum class Rule : std::uint8_t {
  beta_v,
  eta_v,
  dollar_v,
  dollar_shift,
  shift_dollar,
  pure,
  bind,
  beta,
  eta,
  dollar_slash_shift,
  ax_beta_v,
  ax_eta_v,
  ax_dollar_v,
  ax_dollar_E,
  ax_beta_dollar,
  ax_eta_dollar,
};

std::string_view to_string(Rule r);
std::optional<Rule> rule_from_string(std::string_view s);
bool is_axiom(Rule r);
/// Reduction rules of a calculus, in the order they are tried at one position.
const std::vector<Rule>& reduction_rules(Calculus c);
const std::vector<Rule>& axiom_rules();

struct RedexOccurrence {
  Path path;
  Rule rule;
  Term contractum;
};

/// Contracts m at its root by `rule`, read in calculus c. Empty when the
/// left-hand side or a freshness side condition does not match.
std::optional<Term> contract(Rule rule, const Term& m, Calculus c);

/// Every redex of m under a reduction context, in depth-first, left-to-right
/// path order; rules at one position follow reduction_rules(c).
std::vector<RedexOccurrence> redexes(const Term& m, Calculus c);

/// One-step reducts of m, alpha-deduplicated, in redex order.
std::vector<Term> step(const Term& m, Calculus c);

/// Result of contracting occurrence r inside m.
Term apply(const Term& m, const RedexOccurrence& r);

/// Contractum of the occurrence (rule, path) in m, if there is one.
std::optional<Term> contract_at(const Term& m, Rule rule, const Path& path, Calculus c);

// ---------------------------------------------------------------------------
// Contexts of the ld calculus

/// One bindable-context frame: [] M, V [], or ^([]).
struct BindFrame {
  enum class Shape : std::uint8_t { app_left, app_right, thaw } shape;
  /// The other operand of an application frame; unused for thaw.
  std::optional<Term> other;

  Term plug(const Term& hole) const;
};

/// Pure context K: a stack of bindable frames, innermost last.
struct PureContext {
  std::vector<BindFrame> frames;
  Term plug(const Term& hole) const;
};

/// The unique legal bind split of p into J[P], if any.
std::optional<std::pair<BindFrame, Term>> bind_decompose(const Term& p);

/// `let x = P in J[x]` in expanded form, with x, k fresh.
Term bind_contractum(const BindFrame& j, const Term& p);

// ---------------------------------------------------------------------------
// Pure contexts of the lamd calculus

struct PureFrame {
  enum class Shape : std::uint8_t { app_left, app_right, dollar_left } shape;
  Term other;
};

/// E[hole] for frames listed outermost first.
Term plug_pure(const std::vector<PureFrame>& frames, const Term& hole);

/// All ways to write e as E[h], outermost frame first; includes E = [].
struct PureSplit {
  std::vector<PureFrame> frames;
  Term hole;
};
std::vector<PureSplit> pure_splits(const Term& e);

// ---------------------------------------------------------------------------
// Axiom moves of the lamd calculus

struct AxiomMove {
  Rule rule;
  bool reversed;
  Path path;
  Term result;
};

/// All single applications of the six lamd axioms, in both directions, at any
/// position. Expanding directions (right-to-left eta rules and left-to-right
/// $E) are included only when `expanding` is set.
std::vector<AxiomMove> axiom_moves(const Term& m, bool expanding);

}  // namespace ldot
