#pragma once

// Independent reference for the ld calculus: a plain named AST with textbook
// capture-avoiding substitution, an exhaustive enumerator and a brute-force
// matcher that tries every rule at every subterm. Shares nothing with the
// library except the final conversion to ldot::Term for alpha comparison.

#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ldot/term.hpp"

namespace oracle {

struct Node;
using Ast = std::shared_ptr<const Node>;

enum class K { var, abs, app, freeze, thaw };

struct Node {
  K k;
  std::string x;  // variable, or binder name
  Ast a, b;
};

inline Ast Var(std::string x) { return std::make_shared<Node>(Node{K::var, std::move(x), nullptr, nullptr}); }
inline Ast Abs(std::string x, Ast m) { return std::make_shared<Node>(Node{K::abs, std::move(x), std::move(m), nullptr}); }
inline Ast App(Ast m, Ast n) { return std::make_shared<Node>(Node{K::app, "", std::move(m), std::move(n)}); }
inline Ast Freeze(Ast m) { return std::make_shared<Node>(Node{K::freeze, "", std::move(m), nullptr}); }
inline Ast Thaw(Ast m) { return std::make_shared<Node>(Node{K::thaw, "", std::move(m), nullptr}); }

inline void free_vars(const Ast& m, std::set<std::string>& out, std::set<std::string>& bound) {
  switch (m->k) {
    case K::var:
      if (!bound.count(m->x)) out.insert(m->x);
      break;
    case K::abs: {
      bool had = bound.count(m->x);
      bound.insert(m->x);
      free_vars(m->a, out, bound);
      if (!had) bound.erase(m->x);
      break;
    }
    case K::app:
      free_vars(m->a, out, bound);
      free_vars(m->b, out, bound);
      break;
    default: free_vars(m->a, out, bound);
  }
}

inline std::set<std::string> fv(const Ast& m) {
  std::set<std::string> out, bound;
  free_vars(m, out, bound);
  return out;
}

inline void all_names(const Ast& m, std::set<std::string>& out) {
  out.insert(m->x);
  if (m->a) all_names(m->a, out);
  if (m->b) all_names(m->b, out);
}

inline std::string fresh(const std::string& stem, const std::set<std::string>& avoid) {
  for (int i = 0;; ++i) {
    std::string c = stem + "_" + std::to_string(i);
    if (!avoid.count(c)) return c;
  }
}

// m[v/x], renaming binders that would capture.
inline Ast subst(const Ast& m, const Ast& v, const std::string& x) {
  switch (m->k) {
    case K::var: return m->x == x ? v : m;
    case K::abs: {
      if (m->x == x) return m;
      auto fvv = fv(v);
      if (fvv.count(m->x) && fv(m->a).count(x)) {
        std::set<std::string> avoid = fvv;
        all_names(m, avoid);
        avoid.insert(x);
        std::string y = fresh(m->x, avoid);
        return Abs(y, subst(subst(m->a, Var(y), m->x), v, x));
      }
      return Abs(m->x, subst(m->a, v, x));
    }
    case K::app: return App(subst(m->a, v, x), subst(m->b, v, x));
    case K::freeze: return Freeze(subst(m->a, v, x));
    case K::thaw: return Thaw(subst(m->a, v, x));
  }
  return m;
}

inline bool value(const Ast& m) { return m->k == K::var || m->k == K::abs || m->k == K::freeze; }

inline ldot::Term to_term(const Ast& m) {
  switch (m->k) {
    case K::var: return ldot::var(m->x);
    case K::abs: return ldot::lam(m->x, to_term(m->a));
    case K::app: return ldot::app(to_term(m->a), to_term(m->b));
    case K::freeze: return ldot::freeze(to_term(m->a));
    case K::thaw: return ldot::thaw(to_term(m->a));
  }
  return ldot::var("?");
}

inline Ast from_term(const ldot::Term& t, std::vector<std::string>& env, int& counter) {
  using ldot::Kind;
  switch (t.kind()) {
    case Kind::var: return Var(t.name());
    case Kind::bvar: return Var(env[env.size() - 1 - t.index()]);
    case Kind::abs: {
      std::string x = "v_" + std::to_string(counter++);
      env.push_back(x);
      Ast body = from_term(t.body(), env, counter);
      env.pop_back();
      return Abs(x, body);
    }
    case Kind::app: return App(from_term(t.fn(), env, counter), from_term(t.arg(), env, counter));
    case Kind::freeze: return Freeze(from_term(t.body(), env, counter));
    case Kind::thaw: return Thaw(from_term(t.body(), env, counter));
    default: throw std::invalid_argument("not an ld term");
  }
}

inline Ast from_term(const ldot::Term& t) {
  std::vector<std::string> env;
  int counter = 0;
  return from_term(t, env, counter);
}

// One bindable frame around p, as the grammar J ::= [] M | V [] | ^([]) allows.
struct Split {
  std::string shape;  // "app_left", "app_right", "thaw"
  Ast p;
  std::function<Ast(Ast)> plug;
};

inline std::vector<Split> bind_splits(const Ast& m) {
  std::vector<Split> out;
  if (m->k == K::app) {
    Ast f = m->a, a = m->b;
    if (!value(f)) out.push_back({"app_left", f, [a](Ast h) { return App(h, a); }});
    if (value(f) && !value(a)) out.push_back({"app_right", a, [f](Ast h) { return App(f, h); }});
  }
  if (m->k == K::thaw && !value(m->a)) out.push_back({"thaw", m->a, [](Ast h) { return Thaw(h); }});
  return out;
}

// Contractum of `rule` at the root of m, if m is such a redex.
inline std::optional<Ast> contract(const std::string& rule, const Ast& m) {
  std::set<std::string> names;
  all_names(m, names);
  if (rule == "beta_v" && m->k == K::app && m->a->k == K::abs && value(m->b)) return subst(m->a->a, m->b, m->a->x);
  if (rule == "eta_v" && m->k == K::abs && m->a->k == K::app && m->a->b->k == K::var && m->a->b->x == m->x &&
      value(m->a->a) && !fv(m->a->a).count(m->x))
    return m->a->a;
  if (rule == "dollar_v" && m->k == K::freeze && value(m->a)) {
    std::string x = fresh("x", names);
    return Abs(x, App(Var(x), m->a));
  }
  if (rule == "dollar_shift" && m->k == K::freeze && m->a->k == K::thaw && value(m->a->a)) return m->a->a;
  if (rule == "shift_dollar" && m->k == K::thaw && m->a->k == K::freeze) return m->a->a;
  if (rule == "pure" && m->k == K::thaw && m->a->k == K::abs && m->a->a->k == K::app && m->a->a->a->k == K::var &&
      m->a->a->a->x == m->a->x && value(m->a->a->b) && !fv(m->a->a->b).count(m->a->x))
    return m->a->a->b;
  if (rule == "bind") {
    auto splits = bind_splits(m);
    if (splits.size() != 1) return std::nullopt;
    const Split& s = splits[0];
    std::string k = fresh("k", names), x = fresh("x", names);
    // ^(\k. $(P) (\x. $(J[x]) k))
    return Thaw(Abs(k, App(Freeze(s.p), Abs(x, App(Freeze(s.plug(Var(x))), Var(k))))));
  }
  return std::nullopt;
}

inline const std::vector<std::string>& rules() {
  static const std::vector<std::string> r{"beta_v", "eta_v", "dollar_v", "dollar_shift", "shift_dollar", "pure", "bind"};
  return r;
}

struct Occurrence {
  std::vector<int> path;
  std::string rule;
  Ast contractum;
};

inline void all_occurrences(const Ast& m, std::vector<int>& path, std::vector<Occurrence>& out) {
  for (const auto& r : rules())
    if (auto c = contract(r, m)) out.push_back({path, r, *c});
  const Ast kids[2] = {m->a, m->b};
  for (int i = 0; i < 2; ++i) {
    if (!kids[i]) continue;
    path.push_back(i);
    all_occurrences(kids[i], path, out);
    path.pop_back();
  }
}

inline std::vector<Occurrence> all_occurrences(const Ast& m) {
  std::vector<Occurrence> out;
  std::vector<int> path;
  all_occurrences(m, path, out);
  return out;
}

// m with the subterm at `path` (0 = first child, 1 = second) replaced by n.
inline Ast replace(const Ast& m, const std::vector<int>& path, const Ast& n, std::size_t i = 0) {
  if (i == path.size()) return n;
  Ast a = m->a, b = m->b;
  (path[i] == 0 ? a : b) = replace(path[i] == 0 ? m->a : m->b, path, n, i + 1);
  return std::make_shared<Node>(Node{m->k, m->x, a, b});
}

inline std::size_t size(const Ast& m) { return 1 + (m->a ? size(m->a) : 0) + (m->b ? size(m->b) : 0); }

// Every ld term with exactly n nodes; free variables from `free`, bound ones
// from the enclosing binders. Binders are named b0, b1, ... by depth.
inline void enumerate(std::size_t n, std::vector<std::string>& scope, const std::vector<std::string>& free,
                      std::vector<Ast>& out) {
  if (n == 0) return;
  if (n == 1) {
    for (const auto& x : free) out.push_back(Var(x));
    for (const auto& x : scope) out.push_back(Var(x));
    return;
  }
  std::vector<Ast> sub;
  enumerate(n - 1, scope, free, sub);
  for (const auto& s : sub) {
    out.push_back(Freeze(s));
    out.push_back(Thaw(s));
  }
  std::string x = "b" + std::to_string(scope.size());
  scope.push_back(x);
  std::vector<Ast> body;
  enumerate(n - 1, scope, free, body);
  scope.pop_back();
  for (const auto& b : body) out.push_back(Abs(x, b));
  for (std::size_t i = 1; i + 1 < n; ++i) {
    std::vector<Ast> l, r;
    enumerate(i, scope, free, l);
    enumerate(n - 1 - i, scope, free, r);
    for (const auto& a : l)
      for (const auto& b : r) out.push_back(App(a, b));
  }
}

inline std::vector<Ast> enumerate(std::size_t n, const std::vector<std::string>& free) {
  std::vector<std::string> scope;
  std::vector<Ast> out;
  enumerate(n, scope, free, out);
  return out;
}

}  // namespace oracle
