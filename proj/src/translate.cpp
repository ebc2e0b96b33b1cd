#include "ldot/translate.hpp"

#include <array>

#include "ldot/rules.hpp"

namespace ldot {

namespace {

struct TranslationName {
  Translation t;
  std::string_view name;
  Calculus from, to;
};

constexpr std::array<TranslationName, 7> kNames{{
    {Translation::star, "star", Calculus::ld, Calculus::lam},
    {Translation::dagger, "dagger", Calculus::ld, Calculus::lam},
    {Translation::hash, "hash", Calculus::lam, Calculus::ld},
    {Translation::natural, "natural", Calculus::lam, Calculus::ld},
    {Translation::iota, "iota", Calculus::lamd, Calculus::ld},
    {Translation::pi, "pi", Calculus::ld, Calculus::lamd},
    {Translation::materzok_cps, "materzok_cps", Calculus::lamd, Calculus::lam},
}};

const TranslationName& entry(Translation t) {
  for (const auto& e : kNames)
    if (e.t == t) return e;
  return kNames[0];
}

// Runs a named translation on a term whose loose indices are first opened to
// fresh names and closed again afterwards.
template <class F>
Term with_names(const Term& m, F&& f) {
  NameSupply names;
  names.avoid(m);
  auto [open, loose] = open_loose(m, names);
  return close_loose(f(open, names), loose);
}

// Opens a binder of t under a fresh name derived from its hint.
std::pair<std::string, Term> open_binder(const Term& t, NameSupply& names) {
  std::string x = names.fresh(t.name().empty() ? "x" : t.name());
  return {x, open_with(t.body(), x)};
}

// ---------------------------------------------------------------------------
// star / dagger

Term star(const Term& m, NameSupply& names);

Term dagger(const Term& v, NameSupply& names) {
  switch (v.kind()) {
    case Kind::var: return v;
    case Kind::abs: {
      auto [x, body] = open_binder(v, names);
      return lam(x, star(body, names));
    }
    case Kind::freeze: return star(v.body(), names);
    default: throw NotAValue("dagger is defined on values only");
  }
}

Term star(const Term& m, NameSupply& names) {
  constexpr Calculus c = Calculus::ld;
  if (is_value(m, c)) {
    std::string k = names.fresh("k");
    return lam(k, app(var(k), dagger(m, names)));
  }
  if (m.is(Kind::thaw) && is_value(m.body(), c)) return dagger(m.body(), names);
  if (m.is(Kind::app) && is_value(m.fn(), c) && is_value(m.arg(), c))
    return app(dagger(m.fn(), names), dagger(m.arg(), names));
  auto jp = bind_decompose(m);
  if (!jp) throw std::logic_error("star: term is neither a value nor a bindable split");
  std::string k = names.fresh("k");
  std::string x = names.fresh("x");
  Term p_star = star(jp->second, names);
  Term jx_star = star(jp->first.plug(var(x)), names);
  return lam(k, app(p_star, lam(x, app(jx_star, var(k)))));
}

// ---------------------------------------------------------------------------
// hash / natural

Term natural(const Term& m, NameSupply& names);

Term hash(const Term& m, NameSupply& names) {
  switch (m.kind()) {
    case Kind::var: return thaw(m);
    case Kind::abs: {
      const Term& b = m.body();
      if (b.is(Kind::app) && b.fn().is(Kind::bvar) && b.fn().index() == 0 && !has_loose(b.arg(), 0))
        return natural(shift(b.arg(), -1), names);
      auto [x, body] = open_binder(m, names);
      return ld_shift(x, hash(body, names));
    }
    case Kind::app: return app(natural(m.fn(), names), natural(m.arg(), names));
    default: throw std::invalid_argument("hash expects a plain lambda term");
  }
}

Term natural(const Term& m, NameSupply& names) {
  switch (m.kind()) {
    case Kind::var: return m;
    case Kind::abs: {
      auto [x, body] = open_binder(m, names);
      return lam(x, hash(body, names));
    }
    case Kind::app: return freeze(app(natural(m.fn(), names), natural(m.arg(), names)));
    default: throw std::invalid_argument("natural expects a plain lambda term");
  }
}

// ---------------------------------------------------------------------------
// CPS of the binary calculus

Term mcps(const Term& e, NameSupply& names);

Term mcps_value(const Term& v, NameSupply& names) {
  switch (v.kind()) {
    case Kind::var: return v;
    case Kind::abs: {
      auto [x, body] = open_binder(v, names);
      return lam(x, mcps(body, names));
    }
    default: throw NotAValue("value CPS is defined on values only");
  }
}

Term mcps(const Term& e, NameSupply& names) {
  switch (e.kind()) {
    case Kind::var:
    case Kind::abs: {
      std::string k = names.fresh("k");
      return lam(k, app(var(k), mcps_value(e, names)));
    }
    case Kind::app: {
      std::string k = names.fresh("k");
      std::string x = names.fresh("x");
      std::string y = names.fresh("y");
      Term f = mcps(e.fn(), names);
      Term a = mcps(e.arg(), names);
      return lam(k, app(f, lam(x, app(a, lam(y, app(var(x), var(y), var(k)))))));
    }
    case Kind::shift0: {
      auto [x, body] = open_binder(e, names);
      return lam(x, mcps(body, names));
    }
    case Kind::dollar: {
      std::string k = names.fresh("k");
      std::string x = names.fresh("x");
      Term l = mcps(e.left(), names);
      Term r = mcps(e.right(), names);
      return lam(k, app(l, lam(x, app(r, var(x), var(k)))));
    }
    default: throw std::invalid_argument("materzok_cps expects a term of the binary calculus");
  }
}

}  // namespace

std::string_view to_string(Translation t) { return entry(t).name; }

std::optional<Translation> translation_from_string(std::string_view s) {
  if (s == "cps-ld") return Translation::materzok_cps;
  for (const auto& e : kNames)
    if (e.name == s) return e.t;
  return std::nullopt;
}

Calculus source_calculus(Translation t) { return entry(t).from; }
Calculus target_calculus(Translation t) { return entry(t).to; }

Term cps_star(const Term& m) {
  return with_names(m, [](const Term& t, NameSupply& n) { return star(t, n); });
}

Term cps_dagger(const Term& v) {
  if (!is_value(v, Calculus::ld)) throw NotAValue("dagger is defined on values only");
  return with_names(v, [](const Term& t, NameSupply& n) { return dagger(t, n); });
}

Term ds_hash(const Term& m) {
  return with_names(m, [](const Term& t, NameSupply& n) { return hash(t, n); });
}

Term ds_natural(const Term& m) {
  return with_names(m, [](const Term& t, NameSupply& n) { return natural(t, n); });
}

Term iota(const Term& e) {
  switch (e.kind()) {
    case Kind::var:
    case Kind::bvar: return e;
    case Kind::abs: return Term::abs(e.name(), iota(e.body()));
    case Kind::app: return Term::app(iota(e.fn()), iota(e.arg()));
    case Kind::shift0: return Term::thaw(Term::abs(e.name(), iota(e.body())));
    case Kind::dollar: return Term::app(Term::freeze(iota(e.right())), iota(e.left()));
    default: throw std::invalid_argument("iota expects a term of the binary calculus");
  }
}

Term pi(const Term& m) {
  switch (m.kind()) {
    case Kind::var:
    case Kind::bvar: return m;
    case Kind::abs: return Term::abs(m.name(), pi(m.body()));
    case Kind::app: return Term::app(pi(m.fn()), pi(m.arg()));
    case Kind::freeze:
      // \x. x $ pi(M)
      return Term::abs("x", Term::dollar(Term::bvar(0), shift(pi(m.body()), 1)));
    case Kind::thaw: {
      // (\x. S0 k. x k) pi(M)
      Term op = Term::abs("x", Term::shift0("k", Term::app(Term::bvar(1), Term::bvar(0))));
      return Term::app(op, pi(m.body()));
    }
    default: throw std::invalid_argument("pi expects a term of the unary calculus");
  }
}

Term materzok_cps(const Term& e) {
  return with_names(e, [](const Term& t, NameSupply& n) { return mcps(t, n); });
}

Term materzok_cps_value(const Term& v) {
  if (!is_value(v, Calculus::lamd)) throw NotAValue("value CPS is defined on values only");
  return with_names(v, [](const Term& t, NameSupply& n) { return mcps_value(t, n); });
}

Term translate(Translation t, const Term& m) {
  switch (t) {
    case Translation::star: return cps_star(m);
    case Translation::dagger: return cps_dagger(m);
    case Translation::hash: return ds_hash(m);
    case Translation::natural: return ds_natural(m);
    case Translation::iota: return iota(m);
    case Translation::pi: return pi(m);
    case Translation::materzok_cps: return materzok_cps(m);
  }
  return m;
}

}  // namespace ldot
