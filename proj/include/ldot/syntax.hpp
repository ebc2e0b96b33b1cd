#pragma once

// Concrete ASCII syntax shared by the three calculi.
//
//   term   := lam | s0 | let | dollar
//   lam    := '\' name+ '.' term
//   s0     := 'S0' name '.' term
//   let    := 'let' name '=' term 'in' term
//   dollar := app ('$' dollar)?
//   app    := atom+
//   atom   := name | '(' term ')' | '^(' term ')' | '$(' term ')'
//
// `$(` with no space is freeze; a `$` followed by anything else is the binary
// operator. `λ` and `↑` are accepted for `\` and `^`.

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ldot/term.hpp"

namespace ldot {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at offset " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Named abbreviations substituted for free occurrences after parsing.
using Prelude = std::map<std::string, Term, std::less<>>;

/// Parses `text` as a term of calculus `c`, expanding that calculus's sugar.
/// In ld, `S0`, binary `$` and `let` are macros; in lamd, `^(e)` and `$(e)`
/// are macros. Throws ParseError.
Term parse(std::string_view text, Calculus c, const Prelude& prelude = {});

/// Guesses the calculus from the constructors in the text: unary operators or
/// `let` mean ld, `S0` or binary `$` mean lamd, otherwise lam.
Calculus infer_calculus(std::string_view text);

struct PrintOptions {
  /// Re-introduce `S0`, binary `$` and `let` for matching ld patterns.
  bool fold_sugar = false;
  bool unicode = false;
};

std::string pretty(const Term& t, Calculus c, PrintOptions opts = {});

}  // namespace ldot
