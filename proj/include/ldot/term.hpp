#pragma once

// Terms of the three calculi handled by the toolkit:
//
//   lam   plain lambda calculus             x | \x. M | M N
//   ld    unary freeze/thaw calculus        x | \x. M | $(M) | M N | ^(M)
//   lamd  binary shift0/dollar calculus     x | \x. e | e e' | S0 x. e | e $ e'
//
// All three share one immutable node type. Bound variables are de Bruijn
// indices, free variables are names, and binders keep their surface name as
// a printing hint only. Two terms compare equal iff they are alpha-equivalent.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ldot {

enum class Calculus : std::uint8_t { lam, ld, lamd };

std::string_view to_string(Calculus c);
std::optional<Calculus> calculus_from_string(std::string_view s);

enum class Kind : std::uint8_t { var, bvar, abs, app, freeze, thaw, shift0, dollar };

/// Child selector sequence; 0 is the body/function/left operand, 1 the argument/right operand.
using Path = std::vector<int>;

class Term {
 public:
  static Term var(std::string name);
  static Term bvar(std::uint32_t index);
  static Term abs(std::string hint, Term body);
  static Term app(Term fn, Term arg);
  static Term freeze(Term body);
  static Term thaw(Term body);
  static Term shift0(std::string hint, Term body);
  static Term dollar(Term left, Term right);

  Kind kind() const;
  bool is(Kind k) const;
  /// Free-variable name, or the binder hint for abs/shift0.
  const std::string& name() const;
  std::uint32_t index() const;

  std::size_t arity() const;
  const Term& child(std::size_t i) const;
  const Term& body() const { return child(0); }
  const Term& fn() const { return child(0); }
  const Term& arg() const { return child(1); }
  const Term& left() const { return child(0); }
  const Term& right() const { return child(1); }

  /// Number of parse-tree nodes.
  std::size_t size() const;
  /// Structural hash that ignores binder hints.
  std::size_t hash() const;
  /// One past the largest loose de Bruijn index; zero for locally closed terms.
  std::uint32_t loose_bound() const;
  bool locally_closed() const;

  bool same_node(const Term& o) const { return node_ == o.node_; }

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  struct Node;
  Term() = default;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Term make(Kind k, std::string name, std::uint32_t index, const Term* a, const Term* b);

  std::shared_ptr<const Node> node_;
};

struct Term::Node {
  Kind kind;
  std::uint32_t index = 0;
  std::string name;
  Term kids[2];
  std::size_t size = 1;
  std::size_t hash = 0;
  std::uint32_t loose = 0;
};

inline Kind Term::kind() const { return node_->kind; }
inline bool Term::is(Kind k) const { return node_->kind == k; }
inline const std::string& Term::name() const { return node_->name; }
inline std::uint32_t Term::index() const { return node_->index; }
inline std::size_t Term::size() const { return node_->size; }
inline std::size_t Term::hash() const { return node_->hash; }
inline std::uint32_t Term::loose_bound() const { return node_->loose; }
inline bool Term::locally_closed() const { return node_->loose == 0; }

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

/// Alpha-equivalence; the same relation as operator==.
inline bool alpha_eq(const Term& a, const Term& b) { return a == b; }

/// Values of the calculus the term is read in. Variables and abstractions are
/// values everywhere; freeze is a value in ld.
bool is_value(const Term& t, Calculus c);
inline bool is_nonvalue(const Term& t, Calculus c) { return !is_value(t, c); }

/// True iff every constructor in t belongs to calculus c.
bool belongs_to(const Term& t, Calculus c);

// ---------------------------------------------------------------------------
// Names and substitution

std::set<std::string> free_names(const Term& t);
bool is_free_in(std::string_view x, const Term& t);
inline bool is_fresh(std::string_view x, const Term& t) { return !is_free_in(x, t); }
std::size_t count_free(std::string_view x, const Term& t);

/// Deterministic supply of names outside an avoid-set. Candidates for stem
/// "k" are k, k2, k3, ... and the first unused one wins; issued names join
/// the avoid-set.
class NameSupply {
 public:
  NameSupply() = default;
  explicit NameSupply(std::set<std::string> avoid) : avoid_(std::move(avoid)) {}
  void avoid(const Term& t);
  void avoid(std::string name) { avoid_.insert(std::move(name)); }
  std::string fresh(std::string_view stem);

 private:
  std::set<std::string> avoid_;
};

/// First candidate for `hint` (hint itself, then stem2, stem3, ...) not in `avoid`.
std::string fresh_name(std::string_view hint, const std::set<std::string>& avoid);

/// Capture-avoiding substitution m[v/x] of a term for a free name.
Term subst(const Term& m, const Term& v, std::string_view x);

// ---------------------------------------------------------------------------
// de Bruijn plumbing

/// Adds d to every loose index >= cutoff.
Term shift(const Term& t, std::int64_t d, std::uint32_t cutoff = 0);
/// Replaces loose index `depth` of a binder body by `arg` and lowers the rest.
Term instantiate(const Term& body, const Term& arg, std::uint32_t depth = 0);
/// True iff loose index i occurs in t.
bool has_loose(const Term& t, std::uint32_t i);
/// Replaces every occurrence of free name x by loose index `depth`.
Term abstract_name(const Term& t, std::string_view x, std::uint32_t depth = 0);
/// Body of a binder with its bound variable replaced by the free name x.
inline Term open_with(const Term& body, std::string_view x) { return instantiate(body, Term::var(std::string(x))); }

/// Locally nameless builders: bind free name x in body.
Term lam(std::string_view x, const Term& body);
Term shift0(std::string_view x, const Term& body);
inline Term var(std::string_view x) { return Term::var(std::string(x)); }
inline Term app(const Term& f, const Term& a) { return Term::app(f, a); }
Term app(const Term& f, const Term& a, const Term& b);
inline Term freeze(const Term& b) { return Term::freeze(b); }
inline Term thaw(const Term& b) { return Term::thaw(b); }
inline Term dollar(const Term& l, const Term& r) { return Term::dollar(l, r); }

/// Replaces loose indices 0..n-1 by fresh free names (index i gets names[i]).
/// Returns the locally closed term and the names used.
std::pair<Term, std::vector<std::string>> open_loose(const Term& t, NameSupply& names);
/// Inverse of open_loose.
Term close_loose(const Term& t, const std::vector<std::string>& names);

// ---------------------------------------------------------------------------
// Paths

std::optional<Term> subterm_at(const Term& t, const Path& p);
/// Replaces the subterm at p. The path must be valid.
Term replace_at(const Term& t, const Path& p, const Term& with);
Path concat(const Path& prefix, const Path& rest);

// ---------------------------------------------------------------------------
// Sugar of the ld calculus

/// `S0 x. M` := ^(\x. M)
Term ld_shift(std::string_view x, const Term& m);
/// `M $ N` := $(N) M
Term ld_dollar(const Term& m, const Term& n);
/// `let x = M in N` := S0 k. (\x. k $ N) $ M, with k fresh.
Term ld_let(std::string_view x, const Term& m, const Term& n);

}  // namespace ldot
