#include "ldot/syntax.hpp"

#include <cctype>
#include <vector>

namespace ldot {

namespace {

enum class Tok { lambda, dot, lparen, rparen, thaw_open, freeze_open, dollar, equals, name, s0, let, in, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::vector<Token> lex(std::string_view s) {
  static constexpr std::string_view kLambda = "\xCE\xBB";    // λ
  static constexpr std::string_view kUpArrow = "\xE2\x86\x91";  // ↑
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (c == '\\') {
      out.push_back({Tok::lambda, "\\", start});
      ++i;
    } else if (s.substr(i, kLambda.size()) == kLambda) {
      out.push_back({Tok::lambda, "\\", start});
      i += kLambda.size();
    } else if (c == '.') {
      out.push_back({Tok::dot, ".", start});
      ++i;
    } else if (c == '(') {
      out.push_back({Tok::lparen, "(", start});
      ++i;
    } else if (c == ')') {
      out.push_back({Tok::rparen, ")", start});
      ++i;
    } else if (c == '=') {
      out.push_back({Tok::equals, "=", start});
      ++i;
    } else if (c == '^' || s.substr(i, kUpArrow.size()) == kUpArrow) {
      i += c == '^' ? 1 : kUpArrow.size();
      if (i >= s.size() || s[i] != '(') throw ParseError("thaw must be written ^(...)", start);
      ++i;
      out.push_back({Tok::thaw_open, "^(", start});
    } else if (c == '$') {
      ++i;
      if (i < s.size() && s[i] == '(') {
        ++i;
        out.push_back({Tok::freeze_open, "$(", start});
      } else {
        out.push_back({Tok::dollar, "$", start});
      }
    } else if (name_start(c)) {
      while (i < s.size() && name_char(s[i])) ++i;
      std::string word(s.substr(start, i - start));
      Tok k = Tok::name;
      if (word == "S0") k = Tok::s0;
      else if (word == "let") k = Tok::let;
      else if (word == "in") k = Tok::in;
      out.push_back({k, std::move(word), start});
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }
  out.push_back({Tok::end, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, Calculus c) : toks_(std::move(toks)), calc_(c) {}

  Term parse_all() {
    Term t = term();
    if (peek().kind != Tok::end) fail("unexpected '" + peek().text + "'");
    return t;
  }

 private:
  const Token& peek() const { return toks_[at_]; }
  Token next() { return toks_[at_++]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().pos); }

  Token expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what);
    return next();
  }

  void require(bool ok, std::string_view construct) const {
    if (!ok)
      throw ParseError(std::string(construct) + " is not part of calculus " + std::string(to_string(calc_)),
                       toks_[at_ > 0 ? at_ - 1 : 0].pos);
  }

  bool starts_atom() const {
    Tok k = peek().kind;
    return k == Tok::name || k == Tok::lparen || k == Tok::thaw_open || k == Tok::freeze_open;
  }
  bool starts_binder() const {
    Tok k = peek().kind;
    return k == Tok::lambda || k == Tok::s0 || k == Tok::let;
  }

  Term term() {
    switch (peek().kind) {
      case Tok::lambda: {
        next();
        std::vector<std::string> names;
        while (peek().kind == Tok::name) names.push_back(next().text);
        if (names.empty()) fail("expected a binder name");
        expect(Tok::dot, "'.'");
        Term body = term();
        for (auto it = names.rbegin(); it != names.rend(); ++it) body = lam(*it, body);
        return body;
      }
      case Tok::s0: {
        next();
        require(calc_ != Calculus::lam, "S0");
        std::string x = expect(Tok::name, "a binder name").text;
        expect(Tok::dot, "'.'");
        Term body = term();
        return calc_ == Calculus::ld ? ld_shift(x, body) : shift0(x, body);
      }
      case Tok::let: {
        next();
        require(calc_ == Calculus::ld, "let");
        std::string x = expect(Tok::name, "a binder name").text;
        expect(Tok::equals, "'='");
        Term bound = term();
        expect(Tok::in, "'in'");
        Term body = term();
        return ld_let(x, bound, body);
      }
      default:
        return dollar_expr();
    }
  }

  Term dollar_expr() {
    Term lhs = app_expr();
    if (peek().kind != Tok::dollar) return lhs;
    next();
    require(calc_ != Calculus::lam, "binary $");
    // The right operand extends as far as possible, binders included.
    Term rhs = term();
    return calc_ == Calculus::ld ? ld_dollar(lhs, rhs) : Term::dollar(lhs, rhs);
  }

  Term app_expr() {
    if (!starts_atom()) fail(peek().kind == Tok::end ? "unexpected end of input" : "expected a term");
    Term t = atom();
    while (true) {
      if (starts_atom()) {
        t = Term::app(t, atom());
      } else if (starts_binder()) {
        // A trailing binder is the last argument: `f \x. x` reads as `f (\x. x)`.
        t = Term::app(t, term());
        break;
      } else {
        break;
      }
    }
    return t;
  }

  Term atom() {
    Token tok = next();
    switch (tok.kind) {
      case Tok::name: return Term::var(tok.text);
      case Tok::lparen: {
        Term t = term();
        expect(Tok::rparen, "')'");
        return t;
      }
      case Tok::thaw_open: {
        require(calc_ != Calculus::lam, "^(...)");
        Term t = term();
        expect(Tok::rparen, "')'");
        if (calc_ == Calculus::ld) return Term::thaw(t);
        // ^(e) := (\x. S0 k. x k) e
        return Term::app(lam("x", shift0("k", Term::app(var("x"), var("k")))), t);
      }
      case Tok::freeze_open: {
        require(calc_ != Calculus::lam, "$(...)");
        Term t = term();
        expect(Tok::rparen, "')'");
        if (calc_ == Calculus::ld) return Term::freeze(t);
        // $(e) := \x. x $ e
        NameSupply names;
        names.avoid(t);
        std::string x = names.fresh("x");
        return lam(x, Term::dollar(var(x), t));
      }
      default:
        --at_;
        fail("expected a term");
    }
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
  Calculus calc_;
};

}  // namespace

Term parse(std::string_view text, Calculus c, const Prelude& prelude) {
  Term t = Parser(lex(text), c).parse_all();
  for (const auto& [name, def] : prelude) t = subst(t, def, name);
  return t;
}

Calculus infer_calculus(std::string_view text) {
  bool binary = false;
  for (const Token& t : lex(text)) {
    switch (t.kind) {
      case Tok::thaw_open:
      case Tok::freeze_open:
      case Tok::let: return Calculus::ld;
      case Tok::s0:
      case Tok::dollar: binary = true; break;
      default: break;
    }
  }
  return binary ? Calculus::lamd : Calculus::lam;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

enum Level { kBinder = 0, kDollar = 1, kApp = 2, kAtom = 3 };

class Printer {
 public:
  Printer(const Term& root, Calculus c, PrintOptions o) : calc_(c), opts_(o), free_(free_names(root)) {}

  void print(const Term& t, int need) {
    switch (t.kind()) {
      case Kind::var: out_ += t.name(); return;
      case Kind::bvar:
        if (t.index() < scope_.size()) out_ += scope_[scope_.size() - 1 - t.index()];
        else out_ += "#" + std::to_string(t.index() - scope_.size());
        return;
      case Kind::abs:
        open(need, kBinder);
        binder(opts_.unicode ? "\xCE\xBB" : "\\", t);
        close(need, kBinder);
        return;
      case Kind::shift0:
        open(need, kBinder);
        binder("S0 ", t);
        close(need, kBinder);
        return;
      case Kind::thaw:
        if (opts_.fold_sugar && calc_ == Calculus::ld && fold_let(t, need)) return;
        if (opts_.fold_sugar && calc_ == Calculus::ld && t.body().is(Kind::abs)) {
          open(need, kBinder);
          binder("S0 ", t.body());
          close(need, kBinder);
          return;
        }
        out_ += opts_.unicode ? "\xE2\x86\x91(" : "^(";
        print(t.body(), kBinder);
        out_ += ")";
        return;
      case Kind::freeze:
        out_ += "$(";
        print(t.body(), kBinder);
        out_ += ")";
        return;
      case Kind::app:
        if (opts_.fold_sugar && calc_ == Calculus::ld && t.fn().is(Kind::freeze)) {
          binary_dollar(t.arg(), t.fn().body(), need);
          return;
        }
        open(need, kApp);
        print(t.fn(), kApp);
        out_ += " ";
        print(t.arg(), kAtom);
        close(need, kApp);
        return;
      case Kind::dollar:
        binary_dollar(t.left(), t.right(), need);
        return;
    }
  }

  std::string take() { return std::move(out_); }

 private:
  void open(int need, int level) {
    if (level < need) out_ += "(";
  }
  void close(int need, int level) {
    if (level < need) out_ += ")";
  }

  std::string choose(const std::string& hint) {
    std::set<std::string> avoid = free_;
    avoid.insert(scope_.begin(), scope_.end());
    return fresh_name(hint, avoid);
  }

  // `<lead>x. body` for a binder node t.
  void binder(std::string_view lead, const Term& t) {
    std::string x = choose(t.name());
    out_ += lead;
    out_ += x;
    out_ += ". ";
    scope_.push_back(x);
    print(t.body(), kBinder);
    scope_.pop_back();
  }

  void binary_dollar(const Term& lhs, const Term& rhs, int need) {
    open(need, kDollar);
    print(lhs, kApp);
    out_ += " $ ";
    print(rhs, kDollar);
    close(need, kDollar);
  }

  // ^(\k. $(P) (\x. $(N) k)) with k used only in that position prints as
  // `let x = P in N`.
  bool fold_let(const Term& t, int need) {
    const Term& lk = t.body();
    if (!lk.is(Kind::abs)) return false;
    const Term& outer = lk.body();
    if (!outer.is(Kind::app) || !outer.fn().is(Kind::freeze) || !outer.arg().is(Kind::abs)) return false;
    const Term& bound = outer.fn().body();
    const Term& inner = outer.arg().body();
    if (!inner.is(Kind::app) || !inner.fn().is(Kind::freeze)) return false;
    if (!inner.arg().is(Kind::bvar) || inner.arg().index() != 1) return false;
    const Term& body = inner.fn().body();
    if (has_loose(bound, 0) || has_loose(body, 1)) return false;

    open(need, kBinder);
    out_ += "let ";
    std::string x = choose(outer.arg().name());
    out_ += x;
    out_ += " = ";
    print(shift(bound, -1, 0), kBinder);
    out_ += " in ";
    scope_.push_back(x);
    print(shift(body, -1, 2), kBinder);
    scope_.pop_back();
    close(need, kBinder);
    return true;
  }

  Calculus calc_;
  PrintOptions opts_;
  std::set<std::string> free_;
  std::vector<std::string> scope_;
  std::string out_;
};

}  // namespace

std::string pretty(const Term& t, Calculus c, PrintOptions opts) {
  Printer p(t, c, opts);
  p.print(t, kBinder);
  return p.take();
}

}  // namespace ldot
