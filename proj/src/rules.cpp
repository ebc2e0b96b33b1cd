#include "ldot/rules.hpp"

#include <array>
#include <functional>
#include <unordered_set>

namespace ldot {

namespace {

struct RuleName {
  Rule rule;
  std::string_view name;
};

constexpr std::array<RuleName, 16> kRuleNames{{
    {Rule::beta_v, "beta_v"},
    {Rule::eta_v, "eta_v"},
    {Rule::dollar_v, "dollar_v"},
    {Rule::dollar_shift, "dollar_shift"},
    {Rule::shift_dollar, "shift_dollar"},
    {Rule::pure, "pure"},
    {Rule::bind, "bind"},
    {Rule::beta, "beta"},
    {Rule::eta, "eta"},
    {Rule::dollar_slash_shift, "dollar_slash_shift"},
    {Rule::ax_beta_v, "ax_beta_v"},
    {Rule::ax_eta_v, "ax_eta_v"},
    {Rule::ax_dollar_v, "ax_dollar_v"},
    {Rule::ax_dollar_E, "ax_dollar_E"},
    {Rule::ax_beta_dollar, "ax_beta_dollar"},
    {Rule::ax_eta_dollar, "ax_eta_dollar"},
}};

// Lowers the indices of a term that does not mention index 0.
Term lower(const Term& t) { return shift(t, -1, 0); }

}  // namespace

std::string_view to_string(Rule r) {
  for (const auto& rn : kRuleNames)
    if (rn.rule == r) return rn.name;
  return "?";
}

std::optional<Rule> rule_from_string(std::string_view s) {
  for (const auto& rn : kRuleNames)
    if (rn.name == s) return rn.rule;
  return std::nullopt;
}

bool is_axiom(Rule r) { return r >= Rule::ax_beta_v; }

const std::vector<Rule>& reduction_rules(Calculus c) {
  static const std::vector<Rule> ld{Rule::beta_v,       Rule::eta_v, Rule::dollar_v, Rule::dollar_shift,
                                    Rule::shift_dollar, Rule::pure,  Rule::bind};
  static const std::vector<Rule> lam{Rule::beta, Rule::eta};
  static const std::vector<Rule> lamd{Rule::beta_v, Rule::dollar_v, Rule::dollar_slash_shift};
  switch (c) {
    case Calculus::ld: return ld;
    case Calculus::lam: return lam;
    case Calculus::lamd: return lamd;
  }
  return lam;
}

const std::vector<Rule>& axiom_rules() {
  static const std::vector<Rule> ax{Rule::ax_beta_v,   Rule::ax_eta_v,       Rule::ax_dollar_v,
                                    Rule::ax_dollar_E, Rule::ax_beta_dollar, Rule::ax_eta_dollar};
  return ax;
}

// ---------------------------------------------------------------------------

Term BindFrame::plug(const Term& hole) const {
  switch (shape) {
    case Shape::app_left: return Term::app(hole, *other);
    case Shape::app_right: return Term::app(*other, hole);
    case Shape::thaw: return Term::thaw(hole);
  }
  return hole;
}

Term PureContext::plug(const Term& hole) const {
  Term t = hole;
  for (auto it = frames.rbegin(); it != frames.rend(); ++it) t = it->plug(t);
  return t;
}

std::optional<std::pair<BindFrame, Term>> bind_decompose(const Term& p) {
  constexpr Calculus c = Calculus::ld;
  if (p.is(Kind::app)) {
    if (is_nonvalue(p.fn(), c)) return std::pair{BindFrame{BindFrame::Shape::app_left, p.arg()}, p.fn()};
    if (is_nonvalue(p.arg(), c)) return std::pair{BindFrame{BindFrame::Shape::app_right, p.fn()}, p.arg()};
    return std::nullopt;
  }
  if (p.is(Kind::thaw) && is_nonvalue(p.body(), c))
    return std::pair{BindFrame{BindFrame::Shape::thaw, std::nullopt}, p.body()};
  return std::nullopt;
}

Term bind_contractum(const BindFrame& j, const Term& p) {
  // ^(\k. $(P) (\x. $(J[x]) k)); J sits under both new binders, P under k only.
  BindFrame lifted = j;
  if (lifted.other) lifted.other = shift(*lifted.other, 2);
  Term jx = lifted.plug(Term::bvar(0));
  Term inner = Term::abs("x", Term::app(Term::freeze(jx), Term::bvar(1)));
  return Term::thaw(Term::abs("k", Term::app(Term::freeze(shift(p, 1)), inner)));
}

// ---------------------------------------------------------------------------

Term plug_pure(const std::vector<PureFrame>& frames, const Term& hole) {
  Term t = hole;
  for (auto it = frames.rbegin(); it != frames.rend(); ++it) {
    switch (it->shape) {
      case PureFrame::Shape::app_left: t = Term::app(t, it->other); break;
      case PureFrame::Shape::app_right: t = Term::app(it->other, t); break;
      case PureFrame::Shape::dollar_left: t = Term::dollar(t, it->other); break;
    }
  }
  return t;
}

std::vector<PureSplit> pure_splits(const Term& e) {
  std::vector<PureSplit> out;
  std::vector<PureFrame> frames;
  const Term* cur = &e;
  while (true) {
    out.push_back({frames, *cur});
    if (cur->is(Kind::app)) {
      // v e is both ([] e)[v] and (v [])[e]; a value has no proper pure subterm,
      // so the first reading contributes the single split with hole v.
      if (is_value(cur->fn(), Calculus::lamd)) {
        auto with_fn = frames;
        with_fn.push_back({PureFrame::Shape::app_left, cur->arg()});
        out.push_back({std::move(with_fn), cur->fn()});
        frames.push_back({PureFrame::Shape::app_right, cur->fn()});
        cur = &cur->arg();
      } else {
        frames.push_back({PureFrame::Shape::app_left, cur->arg()});
        cur = &cur->fn();
      }
    } else if (cur->is(Kind::dollar)) {
      frames.push_back({PureFrame::Shape::dollar_left, cur->right()});
      cur = &cur->left();
    } else {
      break;
    }
  }
  return out;
}

namespace {

std::vector<PureFrame> shift_frames(const std::vector<PureFrame>& fs, std::int64_t d) {
  std::vector<PureFrame> out = fs;
  for (auto& f : out) f.other = shift(f.other, d);
  return out;
}

// `\y. v $ E[y]` for a value v and context E living outside the new binder.
Term captured_continuation(const Term& v, const std::vector<PureFrame>& frames) {
  return Term::abs("y", Term::dollar(shift(v, 1), plug_pure(shift_frames(frames, 1), Term::bvar(0))));
}

std::optional<Term> contract_ld(Rule rule, const Term& m) {
  constexpr Calculus c = Calculus::ld;
  switch (rule) {
    case Rule::beta_v:
      if (m.is(Kind::app) && m.fn().is(Kind::abs) && is_value(m.arg(), c)) return instantiate(m.fn().body(), m.arg());
      return std::nullopt;
    case Rule::eta_v:
      if (m.is(Kind::abs) && m.body().is(Kind::app)) {
        const Term& v = m.body().fn();
        const Term& x = m.body().arg();
        if (x.is(Kind::bvar) && x.index() == 0 && is_value(v, c) && !has_loose(v, 0)) return lower(v);
      }
      return std::nullopt;
    case Rule::dollar_v:
      if (m.is(Kind::freeze) && is_value(m.body(), c))
        return Term::abs("x", Term::app(Term::bvar(0), shift(m.body(), 1)));
      return std::nullopt;
    case Rule::dollar_shift:
      if (m.is(Kind::freeze) && m.body().is(Kind::thaw) && is_value(m.body().body(), c)) return m.body().body();
      return std::nullopt;
    case Rule::shift_dollar:
      if (m.is(Kind::thaw) && m.body().is(Kind::freeze)) return m.body().body();
      return std::nullopt;
    case Rule::pure:
      if (m.is(Kind::thaw) && m.body().is(Kind::abs) && m.body().body().is(Kind::app)) {
        const Term& x = m.body().body().fn();
        const Term& v = m.body().body().arg();
        if (x.is(Kind::bvar) && x.index() == 0 && is_value(v, c) && !has_loose(v, 0)) return lower(v);
      }
      return std::nullopt;
    case Rule::bind:
      if (auto jp = bind_decompose(m)) return bind_contractum(jp->first, jp->second);
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

std::optional<Term> contract_lam(Rule rule, const Term& m) {
  switch (rule) {
    case Rule::beta:
      if (m.is(Kind::app) && m.fn().is(Kind::abs)) return instantiate(m.fn().body(), m.arg());
      return std::nullopt;
    case Rule::eta:
      if (m.is(Kind::abs) && m.body().is(Kind::app)) {
        const Term& f = m.body().fn();
        const Term& x = m.body().arg();
        if (x.is(Kind::bvar) && x.index() == 0 && !has_loose(f, 0)) return lower(f);
      }
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

std::optional<Term> contract_lamd(Rule rule, const Term& m) {
  constexpr Calculus c = Calculus::lamd;
  switch (rule) {
    case Rule::beta_v:
      if (m.is(Kind::app) && m.fn().is(Kind::abs) && is_value(m.arg(), c)) return instantiate(m.fn().body(), m.arg());
      return std::nullopt;
    case Rule::dollar_v:
      if (m.is(Kind::dollar) && is_value(m.left(), c) && is_value(m.right(), c)) return Term::app(m.left(), m.right());
      return std::nullopt;
    case Rule::dollar_slash_shift:
      if (m.is(Kind::dollar) && is_value(m.left(), c)) {
        for (const auto& split : pure_splits(m.right())) {
          if (!split.hole.is(Kind::shift0)) continue;
          return instantiate(split.hole.body(), captured_continuation(m.left(), split.frames));
        }
      }
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

void collect(const Term& t, Calculus c, Path& path, std::vector<RedexOccurrence>& out) {
  for (Rule r : reduction_rules(c))
    if (auto n = contract(r, t, c)) out.push_back({path, r, std::move(*n)});
  for (std::size_t i = 0; i < t.arity(); ++i) {
    path.push_back(static_cast<int>(i));
    collect(t.child(i), c, path, out);
    path.pop_back();
  }
}

}  // namespace

std::optional<Term> contract(Rule rule, const Term& m, Calculus c) {
  switch (c) {
    case Calculus::ld: return contract_ld(rule, m);
    case Calculus::lam: return contract_lam(rule, m);
    case Calculus::lamd: return contract_lamd(rule, m);
  }
  return std::nullopt;
}

std::vector<RedexOccurrence> redexes(const Term& m, Calculus c) {
  std::vector<RedexOccurrence> out;
  Path path;
  collect(m, c, path, out);
  return out;
}

Term apply(const Term& m, const RedexOccurrence& r) { return replace_at(m, r.path, r.contractum); }

std::vector<Term> step(const Term& m, Calculus c) {
  std::vector<Term> out;
  std::unordered_set<Term, TermHash> seen;
  for (const auto& r : redexes(m, c)) {
    Term n = apply(m, r);
    if (seen.insert(n).second) out.push_back(std::move(n));
  }
  return out;
}

std::optional<Term> contract_at(const Term& m, Rule rule, const Path& path, Calculus c) {
  auto sub = subterm_at(m, path);
  if (!sub) return std::nullopt;
  auto n = contract(rule, *sub, c);
  if (!n) return std::nullopt;
  return replace_at(m, path, *n);
}

// ---------------------------------------------------------------------------

namespace {

constexpr Calculus kLd = Calculus::lamd;

void axiom_moves_at(const Term& t, bool expanding, const Path& path, std::vector<AxiomMove>& out) {
  auto push = [&](Rule r, bool rev, Term result) { out.push_back({r, rev, path, std::move(result)}); };

  // beta_v, left to right
  if (auto n = contract_lamd(Rule::beta_v, t)) push(Rule::ax_beta_v, false, *n);

  // eta_v: \x. v x = v
  if (t.is(Kind::abs) && t.body().is(Kind::app)) {
    const Term& v = t.body().fn();
    const Term& x = t.body().arg();
    if (x.is(Kind::bvar) && x.index() == 0 && is_value(v, kLd) && !has_loose(v, 0)) push(Rule::ax_eta_v, false, lower(v));
  }
  if (expanding && is_value(t, kLd))
    push(Rule::ax_eta_v, true, Term::abs("x", Term::app(shift(t, 1), Term::bvar(0))));

  // dollar_v: v $ v' = v v'
  if (auto n = contract_lamd(Rule::dollar_v, t)) push(Rule::ax_dollar_v, false, *n);
  if (t.is(Kind::app) && is_value(t.fn(), kLd) && is_value(t.arg(), kLd))
    push(Rule::ax_dollar_v, true, Term::dollar(t.fn(), t.arg()));

  // dollar_E: v $ E[e] = (\y. v $ E[y]) $ e
  if (t.is(Kind::dollar) && is_value(t.left(), kLd)) {
    if (expanding) {
      for (const auto& split : pure_splits(t.right()))
        push(Rule::ax_dollar_E, false, Term::dollar(captured_continuation(t.left(), split.frames), split.hole));
    }
    if (t.left().is(Kind::abs) && t.left().body().is(Kind::dollar)) {
      const Term& v = t.left().body().left();
      if (is_value(v, kLd) && !has_loose(v, 0)) {
        for (const auto& split : pure_splits(t.left().body().right())) {
          if (!split.hole.is(Kind::bvar) || split.hole.index() != 0) continue;
          bool clean = true;
          for (const auto& f : split.frames) clean = clean && !has_loose(f.other, 0);
          if (!clean) continue;
          push(Rule::ax_dollar_E, true, Term::dollar(lower(v), plug_pure(shift_frames(split.frames, -1), t.right())));
        }
      }
    }
  }

  // beta_dollar: v $ S0 x. e = e[v/x]
  if (t.is(Kind::dollar) && is_value(t.left(), kLd) && t.right().is(Kind::shift0))
    push(Rule::ax_beta_dollar, false, instantiate(t.right().body(), t.left()));

  // eta_dollar: S0 x. x $ e = e
  if (t.is(Kind::shift0) && t.body().is(Kind::dollar)) {
    const Term& x = t.body().left();
    const Term& e = t.body().right();
    if (x.is(Kind::bvar) && x.index() == 0 && !has_loose(e, 0)) push(Rule::ax_eta_dollar, false, lower(e));
  }
  if (expanding) push(Rule::ax_eta_dollar, true, Term::shift0("k", Term::dollar(Term::bvar(0), shift(t, 1))));
}

void collect_axioms(const Term& root, const Term& t, bool expanding, Path& path, std::vector<AxiomMove>& out) {
  std::vector<AxiomMove> local;
  axiom_moves_at(t, expanding, path, local);
  for (auto& mv : local) {
    mv.result = replace_at(root, mv.path, mv.result);
    out.push_back(std::move(mv));
  }
  for (std::size_t i = 0; i < t.arity(); ++i) {
    path.push_back(static_cast<int>(i));
    collect_axioms(root, t.child(i), expanding, path, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<AxiomMove> axiom_moves(const Term& m, bool expanding) {
  std::vector<AxiomMove> out;
  Path path;
  collect_axioms(m, m, expanding, path, out);
  return out;
}

}  // namespace ldot
