#include "optrepair/io.hpp"

#include <cctype>
#include <sstream>

#include "optrepair/aic.hpp"
#include "optrepair/errors.hpp"
#include "optrepair/priorities.hpp"

namespace optrepair {

namespace {

enum class Tok {
  Ident, Number, String, LParen, RParen, Comma, Dot, Arrow, If, Neq, Bang, Pipe,
  LBrace, RBrace, Plus, Minus, Gt, Eq, Slash, End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, col;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Number: return "number";
    case Tok::String: return "string";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::Arrow: return "'->'";
    case Tok::If: return "':-'";
    case Tok::Neq: return "'!='";
    case Tok::Bang: return "'!'";
    case Tok::Pipe: return "'|'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Gt: return "'>'";
    case Tok::Eq: return "'='";
    case Tok::Slash: return "'/'";
    case Tok::End: return "end of input";
  }
  return "?";
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
 public:
  Lexer(const std::string& text, std::string source) : src_(std::move(source)) {
    std::size_t i = 0, line = 1, col = 1;
    auto adv = [&](std::size_t n) {
      for (std::size_t k = 0; k < n; ++k, ++i) {
        if (text[i] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
      }
    };
    while (i < text.size()) {
      char c = text[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        adv(1);
        continue;
      }
      if (c == '#') {
        while (i < text.size() && text[i] != '\n') adv(1);
        continue;
      }
      std::size_t l0 = line, c0 = col;
      auto two = [&](char a, char b) { return c == a && i + 1 < text.size() && text[i + 1] == b; };
      if (ident_start(c)) {
        std::size_t j = i;
        while (j < text.size() && ident_char(text[j])) ++j;
        toks_.push_back({Tok::Ident, text.substr(i, j - i), l0, c0});
        adv(j - i);
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        toks_.push_back({Tok::Number, text.substr(i, j - i), l0, c0});
        adv(j - i);
      } else if (c == '"') {
        std::string s;
        adv(1);
        while (true) {
          if (i >= text.size() || text[i] == '\n') throw ParseError(src_, l0, c0, "unterminated string");
          if (text[i] == '"') {
            adv(1);
            break;
          }
          if (text[i] == '\\' && i + 1 < text.size()) adv(1);
          s += text[i];
          adv(1);
        }
        toks_.push_back({Tok::String, s, l0, c0});
      } else if (two('-', '>')) {
        toks_.push_back({Tok::Arrow, "->", l0, c0});
        adv(2);
      } else if (two(':', '-')) {
        toks_.push_back({Tok::If, ":-", l0, c0});
        adv(2);
      } else if (two('!', '=')) {
        toks_.push_back({Tok::Neq, "!=", l0, c0});
        adv(2);
      } else {
        Tok k;
        switch (c) {
          case '(': k = Tok::LParen; break;
          case ')': k = Tok::RParen; break;
          case ',': k = Tok::Comma; break;
          case '.': k = Tok::Dot; break;
          case '!': k = Tok::Bang; break;
          case '|': k = Tok::Pipe; break;
          case '{': k = Tok::LBrace; break;
          case '}': k = Tok::RBrace; break;
          case '+': k = Tok::Plus; break;
          case '-': k = Tok::Minus; break;
          case '>': k = Tok::Gt; break;
          case '=': k = Tok::Eq; break;
          case '/': k = Tok::Slash; break;
          default: throw ParseError(src_, l0, c0, std::string("unexpected character '") + c + "'");
        }
        toks_.push_back({k, std::string(1, c), l0, c0});
        adv(1);
      }
    }
    toks_.push_back({Tok::End, "", line, col});
  }

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_word(const char* w) const { return peek().kind == Tok::Ident && peek().text == w; }
  Token next() {
    Token t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool accept(Tok k) {
    if (!at(k)) return false;
    next();
    return true;
  }
  Token expect(Tok k, const char* what = nullptr) {
    if (!at(k)) fail(std::string("expected ") + (what ? what : describe(k)) + ", found " + found());
    return next();
  }
  [[noreturn]] void fail(const std::string& msg) const { fail_at(peek(), msg); }
  [[noreturn]] void fail_at(const Token& t, const std::string& msg) const {
    throw ParseError(src_, t.line, t.col, msg);
  }
  std::string found() const {
    const auto& t = peek();
    if (t.kind == Tok::End) return "end of input";
    return "'" + t.text + "'";
  }
  const std::string& source() const { return src_; }

 private:
  std::string src_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// Whole-file parser state: tracks arities to report mismatches in place.
class Parser {
 public:
  Parser(const std::string& text, const std::string& source) : lx_(text, source) {}

  Lexer& lx() { return lx_; }

  void check_arity(const Token& at, const std::string& pred, std::size_t n) {
    try {
      schema_.declare(pred, n);
    } catch (const InputError& e) {
      lx_.fail_at(at, e.what());
    }
  }

  std::string constant() {
    if (lx_.at(Tok::Ident) || lx_.at(Tok::Number) || lx_.at(Tok::String)) return lx_.next().text;
    lx_.fail("expected a constant, found " + lx_.found());
  }

  Term rule_term() {
    if (lx_.at(Tok::Ident)) return Term::var(lx_.next().text);
    if (lx_.at(Tok::Number) || lx_.at(Tok::String)) return Term::constant(lx_.next().text);
    lx_.fail("expected a term, found " + lx_.found());
  }

  Fact fact() {
    Token name = lx_.expect(Tok::Ident, "a predicate name");
    Fact f{name.text, {}};
    if (lx_.accept(Tok::LParen)) {
      if (!lx_.at(Tok::RParen)) {
        do f.args.push_back(constant());
        while (lx_.accept(Tok::Comma));
      }
      lx_.expect(Tok::RParen);
    }
    check_arity(name, f.predicate, f.args.size());
    return f;
  }

  Atom rule_atom() {
    Token name = lx_.expect(Tok::Ident, "a predicate name");
    return rule_atom_after(name);
  }

  Atom rule_atom_after(const Token& name) {
    Atom a{name.text, {}};
    if (lx_.accept(Tok::LParen)) {
      if (!lx_.at(Tok::RParen)) {
        do a.args.push_back(rule_term());
        while (lx_.accept(Tok::Comma));
      }
      lx_.expect(Tok::RParen);
    }
    check_arity(name, a.predicate, a.args.size());
    return a;
  }

  Literal literal() {
    bool negative = lx_.accept(Tok::Bang);
    return {fact(), !negative};
  }

  // body items up to (not including) the arrow
  void body(std::vector<BodyLiteral>& lits, std::vector<Inequality>& ineqs, Tok stop) {
    if (lx_.at(stop)) return;
    do {
      if (lx_.at_word("not") && lx_.peek(1).kind == Tok::Ident) {
        lx_.next();
        lits.push_back({rule_atom(), false});
      } else if (lx_.accept(Tok::Bang)) {
        lits.push_back({rule_atom(), false});
      } else if (lx_.at(Tok::Ident) && lx_.peek(1).kind != Tok::Neq) {
        lits.push_back({rule_atom(), true});
      } else {
        Term l = rule_term();
        lx_.expect(Tok::Neq);
        Term r = rule_term();
        ineqs.push_back({l, r});
      }
    } while (lx_.accept(Tok::Comma));
  }

  UpdateAction action() {
    UpdateOp op;
    if (lx_.accept(Tok::Plus))
      op = UpdateOp::Add;
    else if (lx_.accept(Tok::Minus))
      op = UpdateOp::Remove;
    else
      lx_.fail("expected '+' or '-', found " + lx_.found());
    return {op, fact()};
  }

  UpdateAtom update_atom() {
    UpdateOp op;
    if (lx_.accept(Tok::Plus))
      op = UpdateOp::Add;
    else if (lx_.accept(Tok::Minus))
      op = UpdateOp::Remove;
    else
      lx_.fail("expected '+' or '-', found " + lx_.found());
    return {op, rule_atom()};
  }

  template <class F>
  auto guarded(const Token& start, F&& build) {
    try {
      return build();
    } catch (const ParseError&) {
      throw;
    } catch (const InputError& e) {
      lx_.fail_at(start, e.what());
    }
  }

 private:
  Lexer lx_;
  Schema schema_;
};

}  // namespace

Database parse_database(const std::string& text, const std::string& source) {
  Parser p(text, source);
  Database db;
  while (!p.lx().at(Tok::End)) {
    db.insert(p.fact());
    p.lx().expect(Tok::Dot);
  }
  return db;
}

std::vector<UniversalConstraint> parse_constraints(const std::string& text, const std::string& source) {
  Parser p(text, source);
  std::vector<UniversalConstraint> out;
  auto& lx = p.lx();
  while (!lx.at(Tok::End)) {
    Token start = lx.peek();
    std::vector<BodyLiteral> lits;
    std::vector<Inequality> ineqs;
    p.body(lits, ineqs, Tok::Arrow);
    lx.expect(Tok::Arrow);
    std::vector<Atom> head;
    if (lx.at_word("false") && lx.peek(1).kind != Tok::LParen) {
      lx.next();
    } else {
      do head.push_back(p.rule_atom());
      while (lx.accept(Tok::Pipe));
    }
    lx.expect(Tok::Dot);
    out.push_back(p.guarded(start, [&] { return UniversalConstraint(lits, ineqs, head); }));
  }
  return out;
}

PriorityRelation parse_priority(const std::string& text, const std::string& source) {
  Parser p(text, source);
  PriorityRelation rel;
  auto& lx = p.lx();
  while (!lx.at(Tok::End)) {
    if (lx.at_word("score") && lx.peek(1).kind != Tok::LParen) {
      Token start = lx.next();
      Literal l = p.literal();
      lx.expect(Tok::Eq);
      bool minus = lx.accept(Tok::Minus);
      Token n = lx.expect(Tok::Number, "a score");
      long long v;
      try {
        v = std::stoll(n.text);
      } catch (const std::exception&) {
        lx.fail_at(n, "score out of range");
      }
      if (minus) v = -v;
      if (!rel.scores.emplace(l, v).second) lx.fail_at(start, "duplicate score for " + format(l));
    } else {
      Literal a = p.literal();
      lx.expect(Tok::Gt);
      Literal b = p.literal();
      rel.edges.insert({a, b});
    }
    lx.expect(Tok::Dot);
  }
  return rel;
}

std::vector<ConjunctiveQuery> parse_queries(const std::string& text, const std::string& source) {
  Parser p(text, source);
  std::vector<ConjunctiveQuery> out;
  auto& lx = p.lx();
  while (!lx.at(Tok::End)) {
    Token name = lx.expect(Tok::Ident, "a query name");
    std::vector<std::string> head;
    if (lx.accept(Tok::LParen)) {
      if (!lx.at(Tok::RParen)) {
        do head.push_back(lx.expect(Tok::Ident, "an answer variable").text);
        while (lx.accept(Tok::Comma));
      }
      lx.expect(Tok::RParen);
    }
    lx.expect(Tok::If);
    std::vector<Atom> body;
    do body.push_back(p.rule_atom());
    while (lx.accept(Tok::Comma));
    lx.expect(Tok::Dot);
    out.push_back(p.guarded(name, [&] { return ConjunctiveQuery(name.text, head, body); }));
  }
  return out;
}

std::vector<Aic> parse_aics(const std::string& text, const std::string& source) {
  Parser p(text, source);
  std::vector<Aic> out;
  auto& lx = p.lx();
  while (!lx.at(Tok::End)) {
    Token start = lx.peek();
    std::vector<BodyLiteral> lits;
    std::vector<Inequality> ineqs;
    p.body(lits, ineqs, Tok::Arrow);
    lx.expect(Tok::Arrow);
    lx.expect(Tok::LBrace);
    std::vector<UpdateAtom> ups;
    if (!lx.at(Tok::RBrace)) {
      do ups.push_back(p.update_atom());
      while (lx.accept(Tok::Comma));
    }
    lx.expect(Tok::RBrace);
    lx.expect(Tok::Dot);
    out.push_back(p.guarded(start, [&] { return Aic(lits, ineqs, ups); }));
  }
  return out;
}

Schema parse_schema(const std::string& text, const std::string& source) {
  Parser p(text, source);
  Schema s;
  auto& lx = p.lx();
  while (!lx.at(Tok::End)) {
    do {
      Token name = lx.expect(Tok::Ident, "a predicate name");
      lx.expect(Tok::Slash);
      Token n = lx.expect(Tok::Number, "an arity");
      p.guarded(name, [&] {
        s.declare(name.text, std::stoul(n.text));
        return 0;
      });
    } while (lx.accept(Tok::Comma));
    lx.expect(Tok::Dot);
  }
  return s;
}

std::vector<UpdateAction> parse_update_actions(const std::string& text, const std::string& source) {
  Parser p(text, source);
  auto& lx = p.lx();
  std::vector<UpdateAction> out;
  bool braced = lx.accept(Tok::LBrace);
  auto stop = braced ? Tok::RBrace : Tok::End;
  while (!lx.at(stop)) {
    out.push_back(p.action());
    if (!lx.accept(Tok::Comma)) break;
  }
  if (braced) lx.expect(Tok::RBrace);
  lx.accept(Tok::Dot);
  lx.expect(Tok::End);
  return out;
}

// ---- printing

namespace {

bool plain_ident(const std::string& s) {
  if (s.empty() || !ident_start(s[0])) return false;
  for (char c : s)
    if (!ident_char(c)) return false;
  return true;
}

bool plain_number(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

template <class T, class F>
std::string join(const T& xs, const std::string& sep, F&& f) {
  std::string out;
  bool first = true;
  for (const auto& x : xs) {
    if (!first) out += sep;
    first = false;
    out += f(x);
  }
  return out;
}

std::string body_text(const std::vector<BodyLiteral>& lits, const std::vector<Inequality>& ineqs) {
  std::vector<std::string> parts;
  for (const auto& l : lits) parts.push_back((l.positive ? "" : "not ") + format(l.atom));
  for (const auto& q : ineqs) parts.push_back(format(q.lhs) + " != " + format(q.rhs));
  return join(parts, ", ", [](const std::string& s) { return s; });
}

std::string update_atom_text(const UpdateAtom& u) {
  return (u.op == UpdateOp::Add ? "+" : "-") + format(u.atom);
}

}  // namespace

std::string format_constant(const std::string& c) {
  return plain_ident(c) || plain_number(c) ? c : quote(c);
}

std::string format(const Fact& f) {
  if (f.args.empty()) return f.predicate;
  return f.predicate + "(" + join(f.args, ",", format_constant) + ")";
}

std::string format(const Literal& l) { return (l.positive ? "" : "!") + format(l.fact); }

std::string format(const LiteralSet& s) {
  return "{" + join(s, ", ", [](const Literal& l) { return format(l); }) + "}";
}

std::string format(const Term& t) {
  if (t.is_variable()) return t.name;
  return plain_number(t.name) ? t.name : quote(t.name);
}

std::string format(const Atom& a) {
  if (a.args.empty()) return a.predicate;
  return a.predicate + "(" + join(a.args, ",", [](const Term& t) { return format(t); }) + ")";
}

std::string format(const UniversalConstraint& c) {
  std::string b = body_text(c.body(), c.inequalities());
  return (b.empty() ? "" : b + " ") + "-> false.";
}

std::string format(const ConjunctiveQuery& q) {
  return q.name() + "(" + join(q.head(), ",", [](const std::string& s) { return s; }) + ") :- " +
         join(q.body(), ", ", [](const Atom& a) { return format(a); }) + ".";
}

std::string format(const UpdateAction& a) { return (a.op == UpdateOp::Add ? "+" : "-") + format(a.fact); }

std::string format(const Aic& r) {
  std::string b = body_text(r.body(), r.inequalities());
  return (b.empty() ? "" : b + " ") + "-> {" + join(r.updates(), ", ", update_atom_text) + "}.";
}

std::string format_database(const Database& db) {
  std::string out;
  for (const auto& f : db) out += format(f) + ".\n";
  return out;
}

std::string format_constraints(const std::vector<UniversalConstraint>& cs) {
  std::string out;
  for (const auto& c : cs) out += format(c) + "\n";
  return out;
}

std::string format_priority(const PriorityRelation& p) {
  std::string out;
  for (const auto& [l, s] : p.scores) out += "score " + format(l) + " = " + std::to_string(s) + ".\n";
  for (const auto& [a, b] : p.edges) out += format(a) + " > " + format(b) + ".\n";
  return out;
}

std::string format_queries(const std::vector<ConjunctiveQuery>& qs) {
  std::string out;
  for (const auto& q : qs) out += format(q) + "\n";
  return out;
}

std::string format_aics(const std::vector<Aic>& rules) {
  std::string out;
  for (const auto& r : rules) out += format(r) + "\n";
  return out;
}

std::string format_schema(const Schema& s) {
  std::string out;
  for (const auto& [p, n] : s.predicates()) out += p + "/" + std::to_string(n) + ".\n";
  return out;
}

}  // namespace optrepair
