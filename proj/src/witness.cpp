#include "ldot/witness.hpp"

#include <functional>
#include <stdexcept>

#include "ldot/syntax.hpp"
#include "ldot/translate.hpp"

// All builders work on locally nameless terms that may carry loose indices,
// so a sub-derivation computed for a subterm can be embedded under binders
// without renaming. Substitution lemmas are generalised from "x" to "loose
// index d".

namespace ldot::witness {

namespace {

struct Stuck : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Builder {
 public:
  Builder(Term start, Calculus c) : trace_{start, {}, TraceStatus::complete}, cur_(std::move(start)), c_(c) {}

  const Term& current() const { return cur_; }

  Term at(const Path& p) const {
    auto s = subterm_at(cur_, p);
    if (!s) throw Stuck("no subterm at path");
    return *s;
  }

  void step(Rule r, const Path& p) {
    auto n = contract_at(cur_, r, p, c_);
    if (!n) throw Stuck(std::string(to_string(r)) + " does not apply");
    push(r, false, p, std::move(*n));
  }

  // One lamd axiom move at p; `accept` chooses among several results.
  void axiom(Rule r, bool reversed, const Path& p, const std::function<bool(const Term&)>& accept = nullptr) {
    Term sub = at(p);
    for (auto& mv : axiom_moves(sub, true)) {
      if (!mv.path.empty() || mv.rule != r || mv.reversed != reversed) continue;
      if (accept && !accept(mv.result)) continue;
      push(r, reversed, p, replace_at(cur_, p, mv.result));
      return;
    }
    throw Stuck(std::string(to_string(r)) + " has no matching move");
  }

  void embed(const Trace& sub, const Path& p) {
    if (at(p) != sub.initial) throw Stuck("sub-derivation starts elsewhere");
    for (const auto& s : sub.steps) push(s.rule, s.reversed, concat(p, s.path), replace_at(cur_, p, s.term));
  }

  Trace done() { return std::move(trace_); }

 private:
  void push(Rule r, bool rev, Path p, Term t) {
    cur_ = t;
    trace_.steps.push_back({r, rev, std::move(p), std::move(t)});
  }

  Trace trace_;
  Term cur_;
  Calculus c_;
};

Trace shifted(const Trace& t, std::int64_t d) {
  Trace r{shift(t.initial, d), {}, t.status};
  for (const auto& s : t.steps) r.steps.push_back({s.rule, s.reversed, s.path, shift(s.term, d)});
  return r;
}

Term lower(const Term& t) { return shift(t, -1); }

// \x. x N with x not free in N: the lambda terms that hash sends to N(natural).
bool special(const Term& m) {
  if (!m.is(Kind::abs) || !m.body().is(Kind::app)) return false;
  const Term& f = m.body().fn();
  return f.is(Kind::bvar) && f.index() == 0 && !has_loose(m.body().arg(), 0);
}

Path tail(const Path& p, std::size_t from) { return Path(p.begin() + static_cast<std::ptrdiff_t>(from), p.end()); }

// ---------------------------------------------------------------------------
// hash / natural lemmas (ld derivations over lambda-term indices)

// ^(M natural) ->> M#
Trace sh_nat(const Term& m) {
  Builder b(thaw(ds_natural(m)), Calculus::ld);
  if (special(m)) b.step(Rule::pure, {});
  else if (m.is(Kind::app)) b.step(Rule::shift_dollar, {});
  return b.done();
}

// $(M#) ->> M natural
Trace dol_hash(const Term& m) {
  Builder b(freeze(ds_hash(m)), Calculus::ld);
  switch (m.kind()) {
    case Kind::var:
    case Kind::bvar: b.step(Rule::dollar_shift, {}); break;
    case Kind::abs: b.step(special(m) ? Rule::dollar_v : Rule::dollar_shift, {}); break;
    default: break;
  }
  return b.done();
}

Trace subst_nat_db(const Term& m, const Term& n, std::uint32_t d);

// M#[N natural / d] ->> (M[N/d])#
Trace subst_hash_db(const Term& m, const Term& n, std::uint32_t d) {
  Builder b(instantiate(ds_hash(m), ds_natural(n), d), Calculus::ld);
  switch (m.kind()) {
    case Kind::bvar:
      if (m.index() == d) b.embed(sh_nat(shift(n, d)), {});
      break;
    case Kind::app:
      b.embed(subst_nat_db(m.fn(), n, d), {0});
      b.embed(subst_nat_db(m.arg(), n, d), {1});
      break;
    case Kind::abs:
      if (special(m)) b.embed(subst_nat_db(lower(m.body().arg()), n, d), {});
      else b.embed(subst_hash_db(m.body(), n, d + 1), {0, 0});
      break;
    default: break;
  }
  return b.done();
}

Trace subst_nat_db(const Term& m, const Term& n, std::uint32_t d) {
  Builder b(instantiate(ds_natural(m), ds_natural(n), d), Calculus::ld);
  switch (m.kind()) {
    case Kind::app:
      b.embed(subst_nat_db(m.fn(), n, d), {0, 0});
      b.embed(subst_nat_db(m.arg(), n, d), {0, 1});
      break;
    case Kind::abs: b.embed(subst_hash_db(m.body(), n, d + 1), {0}); break;
    default: break;
  }
  return b.done();
}

Term lam_contract(const Term& m, Rule r, const Path& p) {
  auto n = contract_at(m, r, p, Calculus::lam);
  if (!n) throw Stuck("not a lambda redex");
  return *n;
}

Trace sh_natural(const Term& m, Rule r, const Path& p);

// M# ->> N# for the lambda step (r, p) from M to N
Trace sh_hash(const Term& m, Rule r, const Path& p) {
  Builder b(ds_hash(m), Calculus::ld);
  if (p.empty()) {
    if (r == Rule::beta) {
      b.step(Rule::beta_v, {});
      b.embed(subst_hash_db(m.fn().body(), m.arg(), 0), {});
    } else {
      b.step(Rule::eta_v, {0});
      b.embed(sh_nat(lower(m.body().fn())), {});
    }
    return b.done();
  }
  switch (m.kind()) {
    case Kind::app: b.embed(sh_natural(m.child(p[0]), r, tail(p, 1)), {p[0]}); break;
    case Kind::abs:
      if (special(m)) {
        if (p.size() < 2 || p[1] != 1) throw Stuck("redex outside the argument of a special abstraction");
        b.embed(sh_natural(lower(m.body().arg()), r, tail(p, 2)), {});
      } else {
        b.embed(sh_hash(m.body(), r, tail(p, 1)), {0, 0});
        b.embed(sh_nat(lam_contract(m, r, p)), {});
      }
      break;
    default: throw Stuck("path leaves the term");
  }
  return b.done();
}

Trace sh_natural(const Term& m, Rule r, const Path& p) {
  Builder b(ds_natural(m), Calculus::ld);
  if (p.empty()) {
    if (r == Rule::beta) {
      b.step(Rule::beta_v, {0});
      b.embed(subst_hash_db(m.fn().body(), m.arg(), 0), {0});
      b.embed(dol_hash(lam_contract(m, r, p)), {});
    } else {
      b.step(Rule::eta_v, {});
    }
    return b.done();
  }
  switch (m.kind()) {
    case Kind::app: b.embed(sh_natural(m.child(p[0]), r, tail(p, 1)), {0, p[0]}); break;
    case Kind::abs: b.embed(sh_hash(m.body(), r, tail(p, 1)), {0}); break;
    default: throw Stuck("path leaves the term");
  }
  return b.done();
}

// ---------------------------------------------------------------------------
// M ->> M*#

Trace lpi(const Term& m);

Trace lpi_value(const Term& v) {
  Builder b(v, Calculus::ld);
  switch (v.kind()) {
    case Kind::abs: b.embed(lpi(v.body()), {0}); break;
    case Kind::freeze:
      b.embed(lpi(v.body()), {0});
      b.embed(dol_hash(cps_star(v.body())), {});
      break;
    default: break;
  }
  return b.done();
}

Trace lpi(const Term& m) {
  constexpr Calculus c = Calculus::ld;
  Builder b(m, c);
  if (is_value(m, c)) {
    b.embed(lpi_value(m), {});
  } else if (m.is(Kind::thaw) && is_value(m.body(), c)) {
    b.embed(lpi_value(m.body()), {0});
    b.embed(sh_nat(cps_dagger(m.body())), {});
  } else if (m.is(Kind::app) && is_value(m.fn(), c) && is_value(m.arg(), c)) {
    b.embed(lpi_value(m.fn()), {0});
    b.embed(lpi_value(m.arg()), {1});
  } else {
    // ^(\k. $(P) (\x. $(J[x]) k))
    const Path p_at{0, 0, 0, 0}, jx_at{0, 0, 1, 0, 0, 0};
    b.step(Rule::bind, {});
    Term p = b.at(p_at), jx = b.at(jx_at);
    b.embed(lpi(p), p_at);
    b.embed(lpi(jx), jx_at);
    b.embed(dol_hash(cps_star(p)), {0, 0, 0});
    b.embed(dol_hash(cps_star(jx)), {0, 0, 1, 0, 0});
  }
  return b.done();
}

// ---------------------------------------------------------------------------
// iota / pi

Trace pi_iota_trace(const Term& e) {
  Builder b(pi(iota(e)), Calculus::lamd);
  switch (e.kind()) {
    case Kind::abs: b.embed(pi_iota_trace(e.body()), {0}); break;
    case Kind::app:
      b.embed(pi_iota_trace(e.fn()), {0});
      b.embed(pi_iota_trace(e.arg()), {1});
      break;
    case Kind::shift0:
      // (\x. S0 k. x k) (\y. e)
      b.embed(pi_iota_trace(e.body()), {1, 0});
      b.axiom(Rule::ax_beta_v, false, {});
      b.axiom(Rule::ax_beta_v, false, {0});
      break;
    case Kind::dollar: {
      // (\x. x $ e2) e1
      b.embed(pi_iota_trace(shift(e.right(), 1)), {0, 0, 1});
      b.embed(pi_iota_trace(e.left()), {1});
      Term hole = shift(e.left(), 1);
      b.axiom(Rule::ax_eta_dollar, true, {});
      b.axiom(Rule::ax_dollar_E, false, {0}, [&](const Term& r) { return r.right() == hole; });
      b.axiom(Rule::ax_beta_v, false, {0, 0, 0, 1});
      b.axiom(Rule::ax_dollar_E, true, {0});
      b.axiom(Rule::ax_eta_dollar, false, {});
      break;
    }
    default: break;
  }
  return b.done();
}

// pi(lhs) and pi(rhs) of one ld contraction at the root, joined by axioms.
std::pair<Trace, Trace> pi_root_chain(const Term& s, Rule rule) {
  auto rhs = contract(rule, s, Calculus::ld);
  if (!rhs) throw Stuck("not an ld redex");
  Builder l(pi(s), Calculus::lamd), r(pi(*rhs), Calculus::lamd);
  switch (rule) {
    case Rule::beta_v: l.axiom(Rule::ax_beta_v, false, {}); break;
    case Rule::eta_v: l.axiom(Rule::ax_eta_v, false, {}); break;
    case Rule::dollar_v: l.axiom(Rule::ax_dollar_v, false, {0}); break;
    case Rule::dollar_shift:
      l.axiom(Rule::ax_beta_v, false, {0, 1});
      l.axiom(Rule::ax_beta_dollar, false, {0});
      l.axiom(Rule::ax_eta_v, false, {});
      break;
    case Rule::shift_dollar:
      l.axiom(Rule::ax_beta_v, false, {});
      l.axiom(Rule::ax_beta_v, false, {0});
      l.axiom(Rule::ax_eta_dollar, false, {});
      break;
    case Rule::pure:
      l.axiom(Rule::ax_beta_v, false, {});
      l.axiom(Rule::ax_beta_v, false, {0});
      l.axiom(Rule::ax_dollar_v, true, {0});
      l.axiom(Rule::ax_eta_dollar, false, {});
      break;
    case Rule::bind:
      r.axiom(Rule::ax_beta_v, false, {});
      r.axiom(Rule::ax_beta_v, false, {0});
      r.axiom(Rule::ax_beta_v, false, {0});
      r.axiom(Rule::ax_beta_v, false, {0, 0, 0});
      r.axiom(Rule::ax_dollar_E, true, {0});
      r.axiom(Rule::ax_eta_dollar, false, {});
      break;
    default: throw Stuck("not an ld rule");
  }
  if (l.current() != r.current()) throw Stuck("root chain does not meet");
  return {l.done(), r.done()};
}

JoinWitness iota_pi_join(const Term& m) {
  constexpr Calculus c = Calculus::ld;
  Builder l(iota(pi(m)), c), r(m, c);
  switch (m.kind()) {
    case Kind::abs: {
      JoinWitness w = iota_pi_join(m.body());
      l.embed(w.left, {0});
      r.embed(w.right, {0});
      break;
    }
    case Kind::app:
      for (int i : {0, 1}) {
        JoinWitness w = iota_pi_join(m.child(i));
        l.embed(w.left, {i});
        r.embed(w.right, {i});
      }
      break;
    case Kind::freeze: {
      // \x. $(iota pi M) x
      JoinWitness w = iota_pi_join(m.body());
      l.embed(shifted(w.left, 1), {0, 0, 0});
      l.step(Rule::eta_v, {});
      r.embed(w.right, {0});
      break;
    }
    case Kind::thaw: {
      // (\x. ^(\k. x k)) (iota pi M)
      JoinWitness w = iota_pi_join(m.body());
      l.embed(w.left, {1});
      l.step(Rule::eta_v, {0, 0, 0});
      r.embed(w.right, {0});
      if (is_value(w.meet, c)) {
        l.step(Rule::beta_v, {});
      } else {
        l.step(Rule::bind, {});
        l.step(Rule::beta_v, {0, 0, 1, 0, 0, 0});
        r.step(Rule::bind, {});
      }
      break;
    }
    default: break;
  }
  if (l.current() != r.current()) throw Stuck("iota(pi(M)) and M do not meet");
  Term meet = l.current();
  return {l.done(), r.done(), meet};
}

template <class F>
auto attempt(F&& f) -> std::optional<decltype(f())> {
  try {
    return f();
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

std::optional<Trace> left_post_inverse(const Term& m) {
  return attempt([&] { return lpi(m); });
}

std::optional<Trace> left_post_inverse_value(const Term& v) {
  return attempt([&] { return lpi_value(v); });
}

std::optional<Trace> single_step_hash(const Term& m, const RedexOccurrence& occ) {
  return attempt([&] { return sh_hash(m, occ.rule, occ.path); });
}

std::optional<Trace> single_step_natural(const Term& m, const RedexOccurrence& occ) {
  return attempt([&] { return sh_natural(m, occ.rule, occ.path); });
}

std::optional<Trace> subst_hash(const Term& m, const Term& n, const std::string& x) {
  return attempt([&] { return subst_hash_db(abstract_name(m, x), n, 0); });
}

std::optional<Trace> subst_natural(const Term& m, const Term& n, const std::string& x) {
  return attempt([&] { return subst_nat_db(abstract_name(m, x), n, 0); });
}

std::optional<JoinWitness> generalised_bind(const BindFrame& j, const Term& m, const std::string& x) {
  return attempt([&] {
    constexpr Calculus c = Calculus::ld;
    Builder l(j.plug(m), c), r(ld_let(x, m, j.plug(var(x))), c);
    if (is_value(m, c)) {
      // ^(\k. $(V) (\x. $(J[x]) k)) ->> J[V]
      r.step(Rule::dollar_v, {0, 0, 0});
      r.step(Rule::beta_v, {0, 0});
      r.step(Rule::beta_v, {0, 0});
      r.step(Rule::eta_v, {0});
      r.step(Rule::shift_dollar, {});
    } else {
      l.step(Rule::bind, {});
    }
    if (l.current() != r.current()) throw Stuck("bind sides do not meet");
    Term meet = l.current();
    return JoinWitness{l.done(), r.done(), meet};
  });
}

std::optional<JoinWitness> join_via_cps(const Term& a, const Term& b, const Fuel& fuel) {
  auto side = [&](const Term& t) -> std::optional<Trace> {
    Builder bld(t, Calculus::ld);
    bld.embed(lpi(t), {});
    Trace nf = normalize_lambda_trace(cps_star(t), fuel);
    if (nf.status != TraceStatus::complete) return std::nullopt;
    Term cur = nf.initial;
    for (const auto& s : nf.steps) {
      bld.embed(sh_hash(cur, s.rule, s.path), {});
      cur = s.term;
    }
    return bld.done();
  };
  auto w = attempt([&] {
    auto l = side(a), r = side(b);
    if (!l || !r || l->final_term() != r->final_term()) return std::optional<JoinWitness>{};
    Term meet = l->final_term();
    return std::optional<JoinWitness>{JoinWitness{std::move(*l), std::move(*r), meet}};
  });
  return w ? *w : std::nullopt;
}

std::optional<JoinWitness> iota_pi(const Term& m) {
  return attempt([&] { return iota_pi_join(m); });
}

std::optional<JoinWitness> pi_iota(const Term& e) {
  return attempt([&] { return JoinWitness{pi_iota_trace(e), Trace{e, {}, TraceStatus::complete}, e}; });
}

std::optional<JoinWitness> pi_step(const Term& m, const RedexOccurrence& occ) {
  return attempt([&] {
    // Follow the occurrence into pi(m); below a freeze, pi shifts its body.
    Path at;
    Term cur = m;
    for (int i : occ.path) {
      switch (cur.kind()) {
        case Kind::abs: at.push_back(0); break;
        case Kind::app: at.push_back(i); break;
        case Kind::freeze: at.insert(at.end(), {0, 1}); break;
        case Kind::thaw: at.push_back(1); break;
        default: throw Stuck("path leaves the term");
      }
      cur = cur.is(Kind::freeze) ? shift(cur.body(), 1) : cur.child(static_cast<std::size_t>(i));
    }
    auto [lt, rt] = pi_root_chain(cur, occ.rule);
    Builder l(pi(m), Calculus::lamd), r(pi(apply(m, occ)), Calculus::lamd);
    l.embed(lt, at);
    r.embed(rt, at);
    if (l.current() != r.current()) throw Stuck("pi images do not meet");
    Term meet = l.current();
    return JoinWitness{l.done(), r.done(), meet};
  });
}

std::pair<Term, Term> random_axiom_instance(const GenConfig& cfg, std::mt19937_64& rng) {
  GenConfig g = cfg;
  g.calculus = Calculus::lamd;
  auto term = [&] { return gen_term(g, rng); };
  auto value = [&] { return gen_value(g, rng); };
  NameSupply names;
  for (const auto& x : g.free_vars) names.avoid(x);
  const std::string& bound = g.free_vars[rng() % g.free_vars.size()];

  switch (rng() % 6) {
    case 0: {  // beta_v
      Term e = term(), v = value();
      return {app(lam(bound, e), v), subst(e, v, bound)};
    }
    case 1: {  // eta_v
      Term v = value();
      std::string x = names.fresh("x");
      return {lam(x, app(v, var(x))), v};
    }
    case 2: {  // dollar_v
      Term v = value(), w = value();
      return {dollar(v, w), app(v, w)};
    }
    case 3: {  // dollar_E
      Term v = value(), e = term();
      std::vector<PureFrame> frames;
      std::size_t n = rng() % 3;
      for (std::size_t i = 0; i < n; ++i) {
        switch (rng() % 3) {
          case 0: frames.push_back({PureFrame::Shape::app_left, term()}); break;
          case 1: frames.push_back({PureFrame::Shape::app_right, value()}); break;
          default: frames.push_back({PureFrame::Shape::dollar_left, term()}); break;
        }
      }
      std::string y = names.fresh("y");
      return {dollar(v, plug_pure(frames, e)), dollar(lam(y, dollar(v, plug_pure(frames, var(y)))), e)};
    }
    case 4: {  // beta_dollar
      Term v = value(), e = term();
      return {dollar(v, shift0(bound, e)), subst(e, v, bound)};
    }
    default: {  // eta_dollar
      Term e = term();
      std::string x = names.fresh("x");
      return {shift0(x, dollar(var(x), e)), e};
    }
  }
}

}  // namespace ldot::witness
