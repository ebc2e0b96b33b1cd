#include "ldot/engine.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace ldot {

void Trace::append(const Trace& more) {
  steps.insert(steps.end(), more.steps.begin(), more.steps.end());
  status = more.status;
}

std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::refuted: return "refuted";
    case SearchStatus::fuel_exhausted: return "fuel_exhausted";
  }
  return "?";
}

std::string step_tag(const TraceStep& s) {
  std::string tag(to_string(s.rule));
  if (s.reversed) tag += "_rl";
  return tag;
}

namespace {

struct Edge {
  Rule rule;
  bool reversed;
  Path path;
};

struct Successor {
  Edge edge;
  Term term;
};

struct Visit {
  std::optional<Term> parent;
  std::optional<Edge> edge;
  std::size_t depth = 0;
};

using Visited = std::unordered_map<Term, Visit, TermHash>;

std::vector<Successor> reduction_successors(const Term& m, Calculus c) {
  std::vector<Successor> out;
  for (auto& r : redexes(m, c)) out.push_back({{r.rule, false, r.path}, apply(m, r)});
  return out;
}

Trace trace_to(const Visited& seen, const Term& root, const Term& node) {
  std::vector<TraceStep> rev;
  Term cur = node;
  while (true) {
    const Visit& v = seen.at(cur);
    if (!v.parent) break;
    rev.push_back({v.edge->rule, v.edge->reversed, v.edge->path, cur});
    cur = *v.parent;
  }
  Trace t{root, {}, TraceStatus::complete};
  t.steps.assign(rev.rbegin(), rev.rend());
  return t;
}

// First redex in redexes() order, found without enumerating the rest.
std::optional<RedexOccurrence> first_redex(const Term& t, Calculus c, Path& path) {
  for (Rule r : reduction_rules(c))
    if (auto n = contract(r, t, c)) return RedexOccurrence{path, r, std::move(*n)};
  for (std::size_t i = 0; i < t.arity(); ++i) {
    path.push_back(static_cast<int>(i));
    auto found = first_redex(t.child(i), c, path);
    path.pop_back();
    if (found) return found;
  }
  return std::nullopt;
}

template <class Succ>
ReachResult bfs_reach(const Term& m, const Term& target, Fuel fuel, Succ&& succ) {
  Visited seen;
  seen.emplace(m, Visit{});
  if (m == target) return {SearchStatus::found, trace_to(seen, m, m), 1};
  std::vector<Term> level{m};
  bool truncated = false;
  for (std::size_t depth = 0; !level.empty(); ++depth) {
    if (depth >= fuel.max_steps) {
      truncated = true;
      break;
    }
    std::vector<Term> next;
    for (const Term& t : level) {
      for (auto& s : succ(t)) {
        if (seen.count(s.term)) continue;
        if (seen.size() >= fuel.max_frontier) {
          truncated = true;
          break;
        }
        seen.emplace(s.term, Visit{t, s.edge, depth + 1});
        if (s.term == target) return {SearchStatus::found, trace_to(seen, m, s.term), seen.size()};
        next.push_back(s.term);
      }
      if (truncated) break;
    }
    if (truncated) break;
    level = std::move(next);
  }
  return {truncated ? SearchStatus::fuel_exhausted : SearchStatus::refuted, std::nullopt, seen.size()};
}

struct Side {
  Term root;
  Visited seen;
  std::vector<Term> level;
  std::size_t depth = 0;
  bool truncated = false;
};

template <class Succ>
JoinResult bfs_join(const Term& a, const Term& b, Fuel fuel, Succ&& succ) {
  Side sides[2] = {{a, {}, {a}}, {b, {}, {b}}};
  sides[0].seen.emplace(a, Visit{});
  sides[1].seen.emplace(b, Visit{});
  auto explored = [&] { return sides[0].seen.size() + sides[1].seen.size(); };
  auto witness = [&](const Term& meet) {
    return JoinWitness{trace_to(sides[0].seen, a, meet), trace_to(sides[1].seen, b, meet), meet};
  };
  if (a == b) return {SearchStatus::found, witness(a), 2};

  while (!sides[0].level.empty() || !sides[1].level.empty()) {
    int i;
    if (sides[0].level.empty()) i = 1;
    else if (sides[1].level.empty()) i = 0;
    else i = sides[0].level.size() <= sides[1].level.size() ? 0 : 1;
    Side& me = sides[i];
    Side& other = sides[1 - i];
    if (me.depth >= fuel.max_steps) {
      me.truncated = true;
      me.level.clear();
      continue;
    }
    std::vector<Term> next;
    for (const Term& t : me.level) {
      for (auto& s : succ(t)) {
        if (me.seen.count(s.term)) continue;
        if (explored() >= fuel.max_frontier) {
          me.truncated = true;
          break;
        }
        me.seen.emplace(s.term, Visit{t, s.edge, me.depth + 1});
        if (other.seen.count(s.term)) return {SearchStatus::found, witness(s.term), explored()};
        next.push_back(s.term);
      }
      if (me.truncated) break;
    }
    if (me.truncated) {
      // The shared budget is gone; neither side can continue.
      return {SearchStatus::fuel_exhausted, std::nullopt, explored()};
    }
    me.level = std::move(next);
    ++me.depth;
  }
  bool cut = sides[0].truncated || sides[1].truncated;
  return {cut ? SearchStatus::fuel_exhausted : SearchStatus::refuted, std::nullopt, explored()};
}

}  // namespace

Trace reduce(const Term& m, Calculus c, Fuel fuel, Strategy) {
  Trace t{m, {}, TraceStatus::complete};
  Term cur = m;
  for (std::size_t n = 0;; ++n) {
    Path path;
    auto r = first_redex(cur, c, path);
    if (!r) return t;
    if (n >= fuel.max_steps) {
      t.status = TraceStatus::fuel_exhausted;
      return t;
    }
    cur = apply(cur, *r);
    t.steps.push_back({r->rule, false, r->path, cur});
  }
}

ReachResult reaches(const Term& m, const Term& target, Calculus c, Fuel fuel) {
  return bfs_reach(m, target, fuel, [c](const Term& t) { return reduction_successors(t, c); });
}

Trace normalize_lambda_trace(const Term& m, Fuel fuel) { return reduce(m, Calculus::lam, fuel); }

std::optional<Term> normalize_lambda(const Term& m, Fuel fuel) {
  Trace t = normalize_lambda_trace(m, fuel);
  if (t.status != TraceStatus::complete) return std::nullopt;
  return t.final_term();
}

JoinResult joinable(const Term& a, const Term& b, Calculus c, Fuel fuel) {
  if (c == Calculus::lam) {
    Trace ta = normalize_lambda_trace(a, fuel);
    Trace tb = normalize_lambda_trace(b, fuel);
    if (ta.status == TraceStatus::complete && tb.status == TraceStatus::complete) {
      // Church-Rosser: distinct normal forms have no common reduct.
      if (ta.final_term() != tb.final_term()) return {SearchStatus::refuted, std::nullopt, 0};
      Term meet = ta.final_term();
      return {SearchStatus::found, JoinWitness{std::move(ta), std::move(tb), meet}, 0};
    }
  }
  return bfs_join(a, b, fuel, [c](const Term& t) { return reduction_successors(t, c); });
}

JoinResult equal_axioms_ld(const Term& a, const Term& b, Fuel fuel, std::size_t size_slack) {
  auto moves = [](const Term& t, bool expanding, std::size_t cap) {
    std::vector<Successor> out;
    for (auto& mv : axiom_moves(t, expanding))
      if (mv.result.size() <= cap) out.push_back({{mv.rule, mv.reversed, mv.path}, std::move(mv.result)});
    return out;
  };
  std::size_t base = std::max(a.size(), b.size());
  Fuel half{fuel.max_steps, std::max<std::size_t>(fuel.max_frontier / 4, 1)};
  JoinResult r = bfs_join(a, b, half, [&](const Term& t) { return moves(t, false, base); });
  if (r.status == SearchStatus::found) return r;
  std::size_t spent = r.explored;
  Fuel rest{fuel.max_steps, fuel.max_frontier > spent ? fuel.max_frontier - spent : 1};
  r = bfs_join(a, b, rest, [&](const Term& t) { return moves(t, true, base + size_slack); });
  r.explored += spent;
  if (r.status == SearchStatus::refuted) r.status = SearchStatus::fuel_exhausted;
  return r;
}

std::optional<std::string> replay(const Trace& t, Calculus c) {
  Term cur = t.initial;
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const TraceStep& s = t.steps[i];
    bool ok = false;
    if (is_axiom(s.rule)) {
      for (auto& mv : axiom_moves(cur, true))
        if (mv.rule == s.rule && mv.reversed == s.reversed && mv.path == s.path && mv.result == s.term) {
          ok = true;
          break;
        }
    } else if (!s.reversed) {
      auto n = contract_at(cur, s.rule, s.path, c);
      ok = n && *n == s.term;
    }
    if (!ok) {
      std::ostringstream msg;
      msg << "step " << i << " (" << step_tag(s) << ") does not match its occurrence";
      return msg.str();
    }
    cur = s.term;
  }
  return std::nullopt;
}

std::optional<std::string> replay(const JoinWitness& w, Calculus c) {
  if (auto e = replay(w.left, c)) return "left: " + *e;
  if (auto e = replay(w.right, c)) return "right: " + *e;
  if (w.left.final_term() != w.meet || w.right.final_term() != w.meet) return std::string("traces do not meet");
  return std::nullopt;
}

nlohmann::json trace_json(const Trace& t, Calculus c, PrintOptions opts) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : t.steps)
    steps.push_back({{"rule", step_tag(s)}, {"path", s.path}, {"term", pretty(s.term, c, opts)}});
  return {{"initial", pretty(t.initial, c, opts)},
          {"steps", std::move(steps)},
          {"status", t.status == TraceStatus::complete ? "complete" : "fuel_exhausted"}};
}

std::string trace_text(const Trace& t, Calculus c, PrintOptions opts) {
  std::ostringstream out;
  out << pretty(t.initial, c, opts) << "\n";
  for (const auto& s : t.steps) {
    out << "  -> " << step_tag(s) << " @[";
    for (std::size_t i = 0; i < s.path.size(); ++i) out << (i ? "," : "") << s.path[i];
    out << "]  " << pretty(s.term, c, opts) << "\n";
  }
  if (t.status == TraceStatus::fuel_exhausted) out << "  (fuel exhausted)\n";
  return out.str();
}

}  // namespace ldot
