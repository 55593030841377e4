// Copyright 2026 The Tempo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cctype>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tempo/error.hpp"
#include "tempo/structure.hpp"

namespace tempo {

enum class Kind {
  True,
  False,
  Eq,
  Rel,
  Member,
  Not,
  And,
  Or,
  Implies,
  Iff,
  ExistsElem,
  ForallElem,
  ExistsSet,
  ForallSet,
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// name: relation name, bound variable of a quantifier, or the set of a
// membership atom. args: element terms (variable names).
struct Formula {
  Kind kind = Kind::True;
  std::string name;
  std::vector<std::string> args;
  std::optional<Sort> guard;
  std::vector<FormulaPtr> kids;

  bool is_quantifier() const {
    return kind == Kind::ExistsElem || kind == Kind::ForallElem || kind == Kind::ExistsSet ||
           kind == Kind::ForallSet;
  }
  bool is_set_quantifier() const { return kind == Kind::ExistsSet || kind == Kind::ForallSet; }
};

enum class Order { Element, Set };

struct Variable {
  std::string name;
  Order order = Order::Element;
  std::optional<Sort> guard;
};

// Constructors. conj/disj flatten nothing and collapse empty or singleton lists.
namespace fm {

inline FormulaPtr make(Formula f) { return std::make_shared<const Formula>(std::move(f)); }

inline FormulaPtr truth(bool v) { return make({v ? Kind::True : Kind::False, {}, {}, {}, {}}); }
inline FormulaPtr eq(const std::string& a, const std::string& b) {
  return make({Kind::Eq, {}, {a, b}, {}, {}});
}
inline FormulaPtr rel(const std::string& name, std::vector<std::string> args) {
  return make({Kind::Rel, name, std::move(args), {}, {}});
}
inline FormulaPtr mem(const std::string& x, const std::string& set) {
  return make({Kind::Member, set, {x}, {}, {}});
}
inline FormulaPtr neg(FormulaPtr f) { return make({Kind::Not, {}, {}, {}, {std::move(f)}}); }
inline FormulaPtr neq(const std::string& a, const std::string& b) { return neg(eq(a, b)); }
inline FormulaPtr notin(const std::string& x, const std::string& set) { return neg(mem(x, set)); }

inline FormulaPtr nary(Kind k, std::vector<FormulaPtr> kids) {
  if (kids.empty()) return truth(k == Kind::And);
  if (kids.size() == 1) return kids.front();
  return make({k, {}, {}, {}, std::move(kids)});
}
inline FormulaPtr conj(std::vector<FormulaPtr> kids) { return nary(Kind::And, std::move(kids)); }
inline FormulaPtr disj(std::vector<FormulaPtr> kids) { return nary(Kind::Or, std::move(kids)); }
inline FormulaPtr implies(FormulaPtr a, FormulaPtr b) {
  return make({Kind::Implies, {}, {}, {}, {std::move(a), std::move(b)}});
}
inline FormulaPtr iff(FormulaPtr a, FormulaPtr b) {
  return make({Kind::Iff, {}, {}, {}, {std::move(a), std::move(b)}});
}
inline FormulaPtr quant(Kind k, const std::string& v, std::optional<Sort> g, FormulaPtr body) {
  return make({k, v, {}, g, {std::move(body)}});
}
inline FormulaPtr exists(const std::string& v, std::optional<Sort> g, FormulaPtr body) {
  return quant(Kind::ExistsElem, v, g, std::move(body));
}
inline FormulaPtr forall(const std::string& v, std::optional<Sort> g, FormulaPtr body) {
  return quant(Kind::ForallElem, v, g, std::move(body));
}
inline FormulaPtr exists_set(const std::string& v, std::optional<Sort> g, FormulaPtr body) {
  return quant(Kind::ExistsSet, v, g, std::move(body));
}
inline FormulaPtr forall_set(const std::string& v, std::optional<Sort> g, FormulaPtr body) {
  return quant(Kind::ForallSet, v, g, std::move(body));
}
// exists x1..xk : S . body
inline FormulaPtr exists_all(const std::vector<std::string>& vs, std::optional<Sort> g,
                             FormulaPtr body) {
  for (auto it = vs.rbegin(); it != vs.rend(); ++it) body = exists(*it, g, body);
  return body;
}
inline FormulaPtr forall_all(const std::vector<std::string>& vs, std::optional<Sort> g,
                             FormulaPtr body) {
  for (auto it = vs.rbegin(); it != vs.rend(); ++it) body = forall(*it, g, body);
  return body;
}

}  // namespace fm

inline bool structurally_equal(const Formula& a, const Formula& b) {
  if (a.kind != b.kind || a.name != b.name || a.args != b.args || a.guard != b.guard ||
      a.kids.size() != b.kids.size())
    return false;
  for (std::size_t i = 0; i < a.kids.size(); ++i)
    if (!structurally_equal(*a.kids[i], *b.kids[i])) return false;
  return true;
}

inline std::size_t formula_size(const Formula& f) {
  std::size_t n = 1;
  for (auto& k : f.kids) n += formula_size(*k);
  return n;
}

inline int count_nodes(const Formula& f, Kind k) {
  int n = f.kind == k ? 1 : 0;
  for (auto& c : f.kids) n += count_nodes(*c, k);
  return n;
}

namespace detail {

inline void collect_free(const Formula& f, std::vector<std::string>& bound,
                         std::vector<Variable>& out) {
  auto note = [&](const std::string& v, Order o) {
    for (auto it = bound.rbegin(); it != bound.rend(); ++it)
      if (*it == v) return;
    for (auto& x : out)
      if (x.name == v) {
        if (o == Order::Set) x.order = Order::Set;
        return;
      }
    out.push_back({v, o, std::nullopt});
  };
  switch (f.kind) {
    case Kind::Eq:
    case Kind::Rel:
      for (auto& a : f.args) note(a, Order::Element);
      return;
    case Kind::Member:
      note(f.args[0], Order::Element);
      note(f.name, Order::Set);
      return;
    default:
      break;
  }
  if (f.is_quantifier()) {
    bound.push_back(f.name);
    collect_free(*f.kids[0], bound, out);
    bound.pop_back();
    return;
  }
  for (auto& k : f.kids) collect_free(*k, bound, out);
}

inline void collect_shadowed(const Formula& f, std::vector<std::string>& bound,
                             std::set<std::string>& out) {
  if (f.is_quantifier()) {
    for (auto& b : bound)
      if (b == f.name) out.insert(f.name);
    bound.push_back(f.name);
    collect_shadowed(*f.kids[0], bound, out);
    bound.pop_back();
    return;
  }
  for (auto& k : f.kids) collect_shadowed(*k, bound, out);
}

}  // namespace detail

// Free variables in order of first occurrence. A name used as the right-hand
// side of "in" is a set variable, anything else an element variable.
inline std::vector<Variable> free_variables(const Formula& f) {
  std::vector<std::string> bound;
  std::vector<Variable> out;
  detail::collect_free(f, bound, out);
  return out;
}

inline bool is_fo(const Formula& f) {
  if (f.is_set_quantifier() || f.kind == Kind::Member) return false;
  for (auto& k : f.kids)
    if (!is_fo(*k)) return false;
  return true;
}

// Bound variables that shadow an enclosing binder of the same name.
inline std::set<std::string> shadowed_variables(const Formula& f) {
  std::vector<std::string> bound;
  std::set<std::string> out;
  detail::collect_shadowed(f, bound, out);
  return out;
}

// ---------------------------------------------------------------------------
// Text DSL

namespace detail {

enum class Tok { Ident, LParen, RParen, Comma, Dot, Colon, Eq, Bang, Amp, Bar, Arrow, DArrow, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1;
  int col = 1;
};

inline bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

inline std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < s.size()) {
    char c = s[i];
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      t.kind = Tok::Ident;
      t.text = s.substr(i, j - i);
      advance(j - i);
      out.push_back(t);
      continue;
    }
    auto two = s.compare(i, 2, "->") == 0;
    auto three = s.compare(i, 3, "<->") == 0;
    if (three) {
      t.kind = Tok::DArrow;
      t.text = "<->";
      advance(3);
    } else if (two) {
      t.kind = Tok::Arrow;
      t.text = "->";
      advance(2);
    } else {
      switch (c) {
        case '(': t.kind = Tok::LParen; break;
        case ')': t.kind = Tok::RParen; break;
        case ',': t.kind = Tok::Comma; break;
        case '.': t.kind = Tok::Dot; break;
        case ':': t.kind = Tok::Colon; break;
        case '=': t.kind = Tok::Eq; break;
        case '!': t.kind = Tok::Bang; break;
        case '&': t.kind = Tok::Amp; break;
        case '|': t.kind = Tok::Bar; break;
        default:
          fail(ErrorCode::SyntaxError, "line " + std::to_string(line) + ", column " +
                                           std::to_string(col) + ": unexpected character '" +
                                           std::string(1, c) + "'");
      }
      t.text = std::string(1, c);
      advance(1);
    }
    out.push_back(t);
  }
  Token end;
  end.kind = Tok::End;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

inline bool is_keyword(const std::string& s) {
  return s == "exists" || s == "forall" || s == "Exists" || s == "Forall" || s == "in" ||
         s == "sub" || s == "true" || s == "false";
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

  FormulaPtr parse() {
    auto f = formula();
    if (peek().kind != Tok::End) error("unexpected '" + peek().text + "'");
    return f;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  Token take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void error(const std::string& msg) const {
    auto& t = peek();
    fail(ErrorCode::SyntaxError, "line " + std::to_string(t.line) + ", column " +
                                     std::to_string(t.col) + ": " + msg);
  }

  void expect(Tok k, const char* what) {
    if (peek().kind != k) error(std::string("expected ") + what);
    take();
  }

  bool at_keyword(const char* kw) const { return peek().kind == Tok::Ident && peek().text == kw; }

  std::string ident(const char* what) {
    if (peek().kind != Tok::Ident || is_keyword(peek().text))
      error(std::string("expected ") + what);
    return take().text;
  }

  FormulaPtr formula() { return iff_level(); }

  FormulaPtr iff_level() {
    auto f = imp_level();
    while (peek().kind == Tok::DArrow) {
      take();
      f = fm::iff(f, imp_level());
    }
    return f;
  }

  FormulaPtr imp_level() {
    auto f = or_level();
    while (peek().kind == Tok::Arrow) {
      take();
      f = fm::implies(f, or_level());
    }
    return f;
  }

  FormulaPtr or_level() {
    std::vector<FormulaPtr> kids{and_level()};
    while (peek().kind == Tok::Bar) {
      take();
      kids.push_back(and_level());
    }
    return kids.size() == 1 ? kids[0] : fm::make({Kind::Or, {}, {}, {}, kids});
  }

  FormulaPtr and_level() {
    std::vector<FormulaPtr> kids{unary()};
    while (peek().kind == Tok::Amp) {
      take();
      kids.push_back(unary());
    }
    return kids.size() == 1 ? kids[0] : fm::make({Kind::And, {}, {}, {}, kids});
  }

  FormulaPtr unary() {
    if (peek().kind == Tok::Bang) {
      take();
      return fm::neg(unary());
    }
    if (at_keyword("exists") || at_keyword("forall") || at_keyword("Exists") ||
        at_keyword("Forall"))
      return quantifier();
    return primary();
  }

  FormulaPtr quantifier() {
    std::string q = take().text;
    bool set = q == "Exists" || q == "Forall";
    std::string var = ident("variable name");
    std::optional<Sort> guard;
    if (set ? at_keyword("sub") : peek().kind == Tok::Colon) {
      take();
      if (peek().kind != Tok::Ident) error("expected sort name");
      auto s = parse_sort(peek().text);
      if (!s) {
        auto& t = peek();
        fail(ErrorCode::UnknownSort, "line " + std::to_string(t.line) + ", column " +
                                         std::to_string(t.col) + ": unknown sort '" + t.text + "'");
      }
      take();
      guard = s;
    }
    expect(Tok::Dot, "'.'");
    auto body = formula();
    Kind k = q == "exists" ? Kind::ExistsElem
             : q == "forall" ? Kind::ForallElem
             : q == "Exists" ? Kind::ExistsSet
                             : Kind::ForallSet;
    return fm::quant(k, var, guard, body);
  }

  FormulaPtr primary() {
    if (peek().kind == Tok::LParen) {
      take();
      auto f = formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (at_keyword("true")) {
      take();
      return fm::truth(true);
    }
    if (at_keyword("false")) {
      take();
      return fm::truth(false);
    }
    std::string a = ident("formula");
    if (peek().kind == Tok::LParen) {
      take();
      std::vector<std::string> args{ident("term")};
      while (peek().kind == Tok::Comma) {
        take();
        args.push_back(ident("term"));
      }
      expect(Tok::RParen, "')'");
      return fm::rel(a, args);
    }
    if (peek().kind == Tok::Eq) {
      take();
      return fm::eq(a, ident("term"));
    }
    if (at_keyword("in")) {
      take();
      return fm::mem(a, ident("set variable"));
    }
    error("expected '(', '=' or 'in' after '" + a + "'");
  }
};

// Precedence: iff 1, implies 2, or 3, and 4, not 5, atoms 6.
inline int level(const Formula& f) {
  switch (f.kind) {
    case Kind::Iff: return 1;
    case Kind::Implies: return 2;
    case Kind::Or: return 3;
    case Kind::And: return 4;
    case Kind::Not: return 5;
    default: return f.is_quantifier() ? 0 : 6;
  }
}

// rightmost: nothing follows this subformula before the end of the enclosing
// parenthesis, so a quantifier here may stay unbracketed.
inline void print_rec(const Formula& f, int need, bool rightmost, std::string& out) {
  if (f.is_quantifier()) {
    bool wrap = !rightmost;
    if (wrap) out += '(';
    switch (f.kind) {
      case Kind::ExistsElem: out += "exists "; break;
      case Kind::ForallElem: out += "forall "; break;
      case Kind::ExistsSet: out += "Exists "; break;
      default: out += "Forall "; break;
    }
    out += f.name;
    if (f.guard) {
      out += f.is_set_quantifier() ? " sub " : " : ";
      out += sort_name(*f.guard);
    }
    out += " . ";
    print_rec(*f.kids[0], 0, true, out);
    if (wrap) out += ')';
    return;
  }
  int lv = level(f);
  bool wrap = lv < need;
  if (wrap) {
    out += '(';
    rightmost = true;
  }
  switch (f.kind) {
    case Kind::True: out += "true"; break;
    case Kind::False: out += "false"; break;
    case Kind::Eq: out += f.args[0] + " = " + f.args[1]; break;
    case Kind::Member: out += f.args[0] + " in " + f.name; break;
    case Kind::Rel: {
      out += f.name + "(";
      for (std::size_t i = 0; i < f.args.size(); ++i) {
        if (i) out += ", ";
        out += f.args[i];
      }
      out += ")";
      break;
    }
    case Kind::Not:
      out += "!";
      print_rec(*f.kids[0], 5, rightmost, out);
      break;
    case Kind::And:
    case Kind::Or: {
      const char* op = f.kind == Kind::And ? " & " : " | ";
      for (std::size_t i = 0; i < f.kids.size(); ++i) {
        if (i) out += op;
        print_rec(*f.kids[i], lv + 1, rightmost && i + 1 == f.kids.size(), out);
      }
      break;
    }
    case Kind::Implies:
    case Kind::Iff: {
      print_rec(*f.kids[0], lv, false, out);
      out += f.kind == Kind::Implies ? " -> " : " <-> ";
      print_rec(*f.kids[1], lv + 1, rightmost, out);
      break;
    }
    default: break;
  }
  if (wrap) out += ')';
}

}  // namespace detail

inline FormulaPtr parse_formula(const std::string& text) { return detail::Parser(text).parse(); }

inline std::string print_formula(const Formula& f) {
  std::string out;
  detail::print_rec(f, 0, true, out);
  return out;
}

inline std::string print_formula(const FormulaPtr& f) { return print_formula(*f); }

}  // namespace tempo
