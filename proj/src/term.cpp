#include "ldot/term.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <stdexcept>

namespace ldot {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  // boost::hash_combine with a 64-bit constant
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

bool binds(Kind k) { return k == Kind::abs || k == Kind::shift0; }

}  // namespace

std::string_view to_string(Calculus c) {
  switch (c) {
    case Calculus::lam: return "lam";
    case Calculus::ld: return "ld";
    case Calculus::lamd: return "lamd";
  }
  return "?";
}

std::optional<Calculus> calculus_from_string(std::string_view s) {
  if (s == "lam") return Calculus::lam;
  if (s == "ld") return Calculus::ld;
  if (s == "lamd") return Calculus::lamd;
  return std::nullopt;
}

Term Term::make(Kind k, std::string name, std::uint32_t index, const Term* a, const Term* b) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->index = index;
  std::size_t h = std::hash<int>{}(static_cast<int>(k) + 1);
  switch (k) {
    case Kind::var:
      h = mix(h, std::hash<std::string>{}(name));
      break;
    case Kind::bvar:
      h = mix(h, index);
      n->loose = index + 1;
      break;
    default:
      break;
  }
  n->name = std::move(name);
  if (a) {
    n->kids[0] = *a;
    n->size += a->size();
    h = mix(h, a->hash());
    std::uint32_t l = a->loose_bound();
    if (binds(k) && l > 0) --l;
    n->loose = std::max(n->loose, l);
  }
  if (b) {
    n->kids[1] = *b;
    n->size += b->size();
    h = mix(h, b->hash());
    n->loose = std::max(n->loose, b->loose_bound());
  }
  n->hash = h;
  return Term(std::move(n));
}

Term Term::var(std::string name) { return make(Kind::var, std::move(name), 0, nullptr, nullptr); }
Term Term::bvar(std::uint32_t index) { return make(Kind::bvar, {}, index, nullptr, nullptr); }
Term Term::abs(std::string hint, Term body) { return make(Kind::abs, std::move(hint), 0, &body, nullptr); }
Term Term::app(Term fn, Term arg) { return make(Kind::app, {}, 0, &fn, &arg); }
Term Term::freeze(Term body) { return make(Kind::freeze, {}, 0, &body, nullptr); }
Term Term::thaw(Term body) { return make(Kind::thaw, {}, 0, &body, nullptr); }
Term Term::shift0(std::string hint, Term body) { return make(Kind::shift0, std::move(hint), 0, &body, nullptr); }
Term Term::dollar(Term left, Term right) { return make(Kind::dollar, {}, 0, &left, &right); }

std::size_t Term::arity() const {
  switch (node_->kind) {
    case Kind::var:
    case Kind::bvar: return 0;
    case Kind::abs:
    case Kind::freeze:
    case Kind::thaw:
    case Kind::shift0: return 1;
    case Kind::app:
    case Kind::dollar: return 2;
  }
  return 0;
}

const Term& Term::child(std::size_t i) const {
  assert(i < arity());
  return node_->kids[i];
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size() || a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Kind::var: return a.name() == b.name();
    case Kind::bvar: return a.index() == b.index();
    default: break;
  }
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (!(a.child(i) == b.child(i))) return false;
  return true;
}

bool is_value(const Term& t, Calculus c) {
  switch (t.kind()) {
    case Kind::var:
    case Kind::bvar:
    case Kind::abs: return true;
    case Kind::freeze: return c == Calculus::ld;
    default: return false;
  }
}

bool belongs_to(const Term& t, Calculus c) {
  switch (t.kind()) {
    case Kind::var:
    case Kind::bvar: return true;
    case Kind::abs:
    case Kind::app: break;
    case Kind::freeze:
    case Kind::thaw:
      if (c != Calculus::ld) return false;
      break;
    case Kind::shift0:
    case Kind::dollar:
      if (c != Calculus::lamd) return false;
      break;
  }
  for (std::size_t i = 0; i < t.arity(); ++i)
    if (!belongs_to(t.child(i), c)) return false;
  return true;
}

// ---------------------------------------------------------------------------

namespace {

void collect_free(const Term& t, std::set<std::string>& out) {
  if (t.is(Kind::var)) {
    out.insert(t.name());
    return;
  }
  for (std::size_t i = 0; i < t.arity(); ++i) collect_free(t.child(i), out);
}

}  // namespace

std::set<std::string> free_names(const Term& t) {
  std::set<std::string> out;
  collect_free(t, out);
  return out;
}

bool is_free_in(std::string_view x, const Term& t) { return count_free(x, t) > 0; }

std::size_t count_free(std::string_view x, const Term& t) {
  if (t.is(Kind::var)) return t.name() == x ? 1 : 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < t.arity(); ++i) n += count_free(x, t.child(i));
  return n;
}

std::string fresh_name(std::string_view hint, const std::set<std::string>& avoid) {
  std::string h(hint.empty() ? "x" : hint);
  if (!avoid.count(h)) return h;
  std::string stem = h;
  while (stem.size() > 1 && std::isdigit(static_cast<unsigned char>(stem.back()))) stem.pop_back();
  for (std::size_t i = 2;; ++i) {
    std::string cand = stem + std::to_string(i);
    if (!avoid.count(cand)) return cand;
  }
}

void NameSupply::avoid(const Term& t) { collect_free(t, avoid_); }

std::string NameSupply::fresh(std::string_view stem) {
  std::string n = fresh_name(stem, avoid_);
  avoid_.insert(n);
  return n;
}

Term shift(const Term& t, std::int64_t d, std::uint32_t cutoff) {
  if (d == 0 || t.loose_bound() <= cutoff) return t;
  switch (t.kind()) {
    case Kind::bvar: {
      if (t.index() < cutoff) return t;
      std::int64_t i = static_cast<std::int64_t>(t.index()) + d;
      if (i < 0) throw std::logic_error("shift produced a negative index");
      return Term::bvar(static_cast<std::uint32_t>(i));
    }
    case Kind::abs: return Term::abs(t.name(), shift(t.body(), d, cutoff + 1));
    case Kind::shift0: return Term::shift0(t.name(), shift(t.body(), d, cutoff + 1));
    case Kind::freeze: return Term::freeze(shift(t.body(), d, cutoff));
    case Kind::thaw: return Term::thaw(shift(t.body(), d, cutoff));
    case Kind::app: return Term::app(shift(t.fn(), d, cutoff), shift(t.arg(), d, cutoff));
    case Kind::dollar: return Term::dollar(shift(t.left(), d, cutoff), shift(t.right(), d, cutoff));
    case Kind::var: return t;
  }
  return t;
}

Term instantiate(const Term& body, const Term& arg, std::uint32_t depth) {
  if (body.loose_bound() <= depth) return body;
  switch (body.kind()) {
    case Kind::bvar:
      if (body.index() == depth) return shift(arg, depth);
      return body.index() > depth ? Term::bvar(body.index() - 1) : body;
    case Kind::abs: return Term::abs(body.name(), instantiate(body.body(), arg, depth + 1));
    case Kind::shift0: return Term::shift0(body.name(), instantiate(body.body(), arg, depth + 1));
    case Kind::freeze: return Term::freeze(instantiate(body.body(), arg, depth));
    case Kind::thaw: return Term::thaw(instantiate(body.body(), arg, depth));
    case Kind::app: return Term::app(instantiate(body.fn(), arg, depth), instantiate(body.arg(), arg, depth));
    case Kind::dollar:
      return Term::dollar(instantiate(body.left(), arg, depth), instantiate(body.right(), arg, depth));
    case Kind::var: return body;
  }
  return body;
}

bool has_loose(const Term& t, std::uint32_t i) {
  if (t.loose_bound() <= i) return false;
  switch (t.kind()) {
    case Kind::bvar: return t.index() == i;
    case Kind::abs:
    case Kind::shift0: return has_loose(t.body(), i + 1);
    default: break;
  }
  for (std::size_t c = 0; c < t.arity(); ++c)
    if (has_loose(t.child(c), i)) return true;
  return false;
}

Term abstract_name(const Term& t, std::string_view x, std::uint32_t depth) {
  switch (t.kind()) {
    case Kind::var: return t.name() == x ? Term::bvar(depth) : t;
    case Kind::bvar: return t;
    case Kind::abs: return Term::abs(t.name(), abstract_name(t.body(), x, depth + 1));
    case Kind::shift0: return Term::shift0(t.name(), abstract_name(t.body(), x, depth + 1));
    case Kind::freeze: return Term::freeze(abstract_name(t.body(), x, depth));
    case Kind::thaw: return Term::thaw(abstract_name(t.body(), x, depth));
    case Kind::app: return Term::app(abstract_name(t.fn(), x, depth), abstract_name(t.arg(), x, depth));
    case Kind::dollar: return Term::dollar(abstract_name(t.left(), x, depth), abstract_name(t.right(), x, depth));
  }
  return t;
}

namespace {

Term subst_at(const Term& m, const Term& v, std::string_view x, std::uint32_t depth) {
  switch (m.kind()) {
    case Kind::var: return m.name() == x ? shift(v, depth) : m;
    case Kind::bvar: return m;
    case Kind::abs: return Term::abs(m.name(), subst_at(m.body(), v, x, depth + 1));
    case Kind::shift0: return Term::shift0(m.name(), subst_at(m.body(), v, x, depth + 1));
    case Kind::freeze: return Term::freeze(subst_at(m.body(), v, x, depth));
    case Kind::thaw: return Term::thaw(subst_at(m.body(), v, x, depth));
    case Kind::app: return Term::app(subst_at(m.fn(), v, x, depth), subst_at(m.arg(), v, x, depth));
    case Kind::dollar: return Term::dollar(subst_at(m.left(), v, x, depth), subst_at(m.right(), v, x, depth));
  }
  return m;
}

}  // namespace

Term subst(const Term& m, const Term& v, std::string_view x) {
  if (!is_free_in(x, m)) return m;
  return subst_at(m, v, x, 0);
}

Term lam(std::string_view x, const Term& body) { return Term::abs(std::string(x), abstract_name(body, x)); }
Term shift0(std::string_view x, const Term& body) { return Term::shift0(std::string(x), abstract_name(body, x)); }
Term app(const Term& f, const Term& a, const Term& b) { return Term::app(Term::app(f, a), b); }

std::pair<Term, std::vector<std::string>> open_loose(const Term& t, NameSupply& names) {
  names.avoid(t);
  std::vector<std::string> used;
  Term cur = t;
  for (std::uint32_t i = 0; i < t.loose_bound(); ++i) {
    used.push_back(names.fresh("v"));
  }
  // Index i (relative to the outside) becomes used[i]. Instantiating index 0
  // repeatedly lowers the remaining ones, so walk the names in order.
  for (const auto& n : used) cur = instantiate(cur, Term::var(n));
  return {cur, used};
}

Term close_loose(const Term& t, const std::vector<std::string>& names) {
  // Inverse of open_loose: the last opened name is the outermost binder.
  Term cur = t;
  for (auto it = names.rbegin(); it != names.rend(); ++it) {
    cur = shift(cur, 1);
    cur = abstract_name(cur, *it, 0);
  }
  return cur;
}

std::optional<Term> subterm_at(const Term& t, const Path& p) {
  const Term* cur = &t;
  for (int i : p) {
    if (i < 0 || static_cast<std::size_t>(i) >= cur->arity()) return std::nullopt;
    cur = &cur->child(static_cast<std::size_t>(i));
  }
  return *cur;
}

namespace {

Term rebuild(const Term& t, std::size_t i, const Term& c) {
  switch (t.kind()) {
    case Kind::abs: return Term::abs(t.name(), c);
    case Kind::shift0: return Term::shift0(t.name(), c);
    case Kind::freeze: return Term::freeze(c);
    case Kind::thaw: return Term::thaw(c);
    case Kind::app: return i == 0 ? Term::app(c, t.arg()) : Term::app(t.fn(), c);
    case Kind::dollar: return i == 0 ? Term::dollar(c, t.right()) : Term::dollar(t.left(), c);
    default: throw std::logic_error("rebuild on a leaf");
  }
}

Term replace_from(const Term& t, const Path& p, std::size_t at, const Term& with) {
  if (at == p.size()) return with;
  auto i = static_cast<std::size_t>(p[at]);
  return rebuild(t, i, replace_from(t.child(i), p, at + 1, with));
}

}  // namespace

Term replace_at(const Term& t, const Path& p, const Term& with) { return replace_from(t, p, 0, with); }

Path concat(const Path& prefix, const Path& rest) {
  Path out = prefix;
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

Term ld_shift(std::string_view x, const Term& m) { return Term::thaw(lam(x, m)); }

Term ld_dollar(const Term& m, const Term& n) { return Term::app(Term::freeze(n), m); }

Term ld_let(std::string_view x, const Term& m, const Term& n) {
  NameSupply names;
  names.avoid(m);
  names.avoid(n);
  names.avoid(std::string(x));
  std::string k = names.fresh("k");
  return ld_shift(k, ld_dollar(lam(x, ld_dollar(var(k), n)), m));
}

}  // namespace ldot
