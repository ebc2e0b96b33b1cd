#pragma once

// Proof-guided witnesses. Each builder follows the inductive construction of
// the corresponding theorem and returns a trace that the engine can replay;
// the property suites fall back on them when bounded search runs out of fuel
// and accept them only after replay succeeds.

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ldot/engine.hpp"
#include "ldot/props.hpp"
#include "ldot/rules.hpp"

namespace ldot::witness {

/// M ->> M*# in ld.
std::optional<Trace> left_post_inverse(const Term& m);
/// V ->> V(dagger)(natural) in ld, for a value V.
std::optional<Trace> left_post_inverse_value(const Term& v);

/// M# ->> N# and M(natural) ->> N(natural) for the lam step `occ` of M.
std::optional<Trace> single_step_hash(const Term& m, const RedexOccurrence& occ);
std::optional<Trace> single_step_natural(const Term& m, const RedexOccurrence& occ);

/// M#[N(natural)/x] ->> M[N/x]# and the natural analogue.
std::optional<Trace> subst_hash(const Term& m, const Term& n, const std::string& x);
std::optional<Trace> subst_natural(const Term& m, const Term& n, const std::string& x);

/// J[M] and let x = M in J[x] reduce to a common term.
std::optional<JoinWitness> generalised_bind(const BindFrame& j, const Term& m, const std::string& x);

/// Common reduct of two ld terms found through their CPS images: both sides
/// reduce to their own M*#, the lam normal forms of the images are compared,
/// and the lam reductions are mapped back through hash.
std::optional<JoinWitness> join_via_cps(const Term& a, const Term& b, const Fuel& fuel);

/// iota(pi(M)) and M reduce to a common term in ld.
std::optional<JoinWitness> iota_pi(const Term& m);
/// pi(iota(e)) = e by lamd axiom moves.
std::optional<JoinWitness> pi_iota(const Term& e);
/// pi(M) = pi(N) by lamd axiom moves, for the ld step `occ` from M to N.
std::optional<JoinWitness> pi_step(const Term& m, const RedexOccurrence& occ);

/// Both sides of a randomly chosen lamd axiom, instantiated with random terms.
std::pair<Term, Term> random_axiom_instance(const GenConfig& cfg, std::mt19937_64& rng);

}  // namespace ldot::witness
