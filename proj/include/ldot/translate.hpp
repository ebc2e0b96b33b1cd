#pragma once

// Translations between the calculi.
//
//   star, dagger     ld  -> lam   CPS of terms and of values
//   hash, natural    lam -> ld    direct style; right inverse of star/dagger
//   iota             lamd -> ld   macro embedding
//   pi               ld -> lamd   macro projection
//   materzok_cps     lamd -> lam  CPS of the binary calculus
//
// Continuation and bound names are drawn from a per-call NameSupply that
// avoids every free name of the input, so outputs never capture.

#include <optional>
#include <stdexcept>
#include <string_view>

#include "ldot/term.hpp"

namespace ldot {

enum class Translation : std::uint8_t { star, dagger, hash, natural, iota, pi, materzok_cps };

std::string_view to_string(Translation t);
/// Accepts the tag names plus the CLI alias "cps-ld" for materzok_cps.
std::optional<Translation> translation_from_string(std::string_view s);
Calculus source_calculus(Translation t);
Calculus target_calculus(Translation t);

/// Thrown when a value-only translation receives a nonvalue.
class NotAValue : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Term cps_star(const Term& m);
Term cps_dagger(const Term& v);
Term ds_hash(const Term& m);
Term ds_natural(const Term& m);
Term iota(const Term& e);
Term pi(const Term& m);
Term materzok_cps(const Term& e);
/// Value part of materzok_cps.
Term materzok_cps_value(const Term& v);

Term translate(Translation t, const Term& m);

}  // namespace ldot
