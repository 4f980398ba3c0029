/*
 * Copyright 2026 The clott Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "clott/syntax/parse.hpp"

#include "lexer.hpp"

#include <cctype>
#include <optional>
#include <set>

namespace clott::syntax {

namespace {

using detail::Token;

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Term term() { return level0(); }

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  bool at_end() const { return peek().type == Token::Type::End; }

  bool is_sym(const char* s, std::size_t k = 0) const {
    return peek(k).type == Token::Type::Symbol && peek(k).text == s;
  }
  bool is_kw(const char* s, std::size_t k = 0) const {
    return peek(k).type == Token::Type::Keyword && peek(k).text == s;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    std::string got = t.type == Token::Type::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(msg + ", got " + got, t.line, t.col);
  }

  Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  void expect_sym(const char* s) {
    if (!is_sym(s)) fail(std::string("expected '") + s + "'");
    next();
  }
  void expect_kw(const char* s) {
    if (!is_kw(s)) fail(std::string("expected '") + s + "'");
    next();
  }

  std::string ident(const char* what = "identifier") {
    if (peek().type != Token::Type::Ident) fail(std::string("expected ") + what);
    return next().text;
  }

  ClockSet clock_set() {
    expect_sym("{");
    std::vector<std::string> names;
    if (!is_sym("}")) {
      names.push_back(ident("clock name"));
      while (is_sym(",")) {
        next();
        names.push_back(ident("clock name"));
      }
    }
    expect_sym("}");
    return make_clock_set(std::move(names));
  }

 private:
  // Binder forms and arrows.
  Term level0() {
    const Token& t = peek();
    if (t.type == Token::Type::Keyword) {
      const std::string& k = t.text;
      if (k == "fun") return lambda();
      if (k == "tick") {
        next();
        std::string a = ident("tick name");
        std::string clk;
        if (is_sym(":")) {
          next();
          clk = ident("clock name");
        }
        expect_sym("->");
        return tick_lam(a, clk, level0());
      }
      if (k == "clock") {
        next();
        std::string c = ident("clock name");
        expect_sym("->");
        return clock_lam(c, level0());
      }
      if (k == "forall-clk" || k == "forall-clk^" || k == "force") {
        next();
        std::string c = ident("clock name");
        expect_sym(".");
        Term body = level0();
        if (k == "forall-clk") return forall_clk(c, body);
        if (k == "forall-clk^") return code_forall(c, body);
        return force(c, body);
      }
      if ((k == "later" || k == "later^") && is_sym("(", 1)) {
        next();
        expect_sym("(");
        std::string a = ident("tick name");
        expect_sym(":");
        std::string c = ident("clock name");
        expect_sym(")");
        expect_sym(".");
        Term body = level0();
        return k == "later" ? later(a, c, body) : code_later(a, c, body);
      }
      if (k == "Pi^" || k == "Sigma^" || k == "exists^" || k == "all^") {
        next();
        expect_sym("(");
        std::string x = binder_name();
        expect_sym(":");
        Term a = level0();
        expect_sym(")");
        expect_sym(".");
        Term b = level0();
        if (k == "Pi^") return code_pi(x, a, b);
        if (k == "Sigma^") return code_sigma(x, a, b);
        if (k == "exists^") return p_exists(x, a, b);
        return p_all(x, a, b);
      }
      if (k == "case") {
        next();
        Term s = level0();
        expect_kw("of");
        expect_kw("inl");
        std::string x = binder_name();
        expect_sym("->");
        Term l = level0();
        expect_sym("|");
        expect_kw("inr");
        std::string y = binder_name();
        expect_sym("->");
        Term r = level0();
        return case_of(s, x, l, y, r);
      }
    }
    Term lhs = level1();
    if (is_sym("->")) {
      next();
      Term rhs = level0();
      if (auto b = take_binder(lhs)) return pi(b->first, b->second, rhs);
      return arrow(lhs, rhs);
    }
    return lhs;
  }

  Term lambda() {
    expect_kw("fun");
    std::vector<std::pair<std::string, Term>> binders;
    while (!is_sym("->")) {
      if (is_sym("(")) {
        next();
        std::string x = binder_name();
        expect_sym(":");
        Term a = level0();
        expect_sym(")");
        binders.emplace_back(x, a);
      } else {
        binders.emplace_back(binder_name(), nullptr);
      }
    }
    if (binders.empty()) fail("expected a binder after 'fun'");
    next();
    Term body = level0();
    for (auto it = binders.rbegin(); it != binders.rend(); ++it) body = lam(it->first, it->second, body);
    return body;
  }

  std::string binder_name() {
    if (peek().type != Token::Type::Ident) fail("expected binder name");
    return next().text;
  }

  Term level1() {
    Term lhs = level2();
    if (is_sym("+")) {
      next();
      return sum(lhs, level1());
    }
    if (is_sym("+^")) {
      next();
      return code_sum(lhs, level1());
    }
    if (is_sym("\\/")) {
      next();
      return p_or(lhs, level1());
    }
    return lhs;
  }

  Term level2() {
    Term lhs = level3();
    if (is_sym("*")) {
      next();
      Term rhs = level2();
      if (auto b = take_binder(lhs)) return sigma(b->first, b->second, rhs);
      return product(lhs, rhs);
    }
    if (is_sym("/\\")) {
      next();
      return p_and(lhs, level2());
    }
    return lhs;
  }

  bool atom_start() const {
    const Token& t = peek();
    if (t.type == Token::Type::Ident) return true;
    if (t.type == Token::Type::Symbol) return t.text == "(";
    if (t.type != Token::Type::Keyword) return false;
    static const std::set<std::string> atoms = {"tt",  "refl", "Unit", "Empty", "fix",    "U",      "Prop",
                                                "El",  "Prf",  "In",   "Unit^", "Empty^", "Top^",   "Bot^"};
    return atoms.count(t.text) > 0;
  }

  bool binder_start() const {
    const Token& t = peek();
    if (t.type != Token::Type::Keyword) return false;
    static const std::set<std::string> words = {"fun",  "tick",   "clock",   "forall-clk", "forall-clk^", "force",
                                                "Pi^",  "Sigma^", "exists^", "all^",       "case"};
    if (words.count(t.text)) return true;
    return (t.text == "later" || t.text == "later^") && is_sym("(", 1);
  }

  Term level3() {
    // A binder form in operand position extends as far right as possible.
    if (binder_start()) return level0();
    Term head;
    const Token& t = peek();
    if (t.type == Token::Type::Keyword) {
      const std::string k = t.text;
      if (k == "inl" || k == "inr" || k == "fst" || k == "snd" || k == "abort" || k == "tirr" || k == "cirr") {
        next();
        Term a = postfix_atom();
        if (k == "inl") head = inl(a);
        else if (k == "inr") head = inr(a);
        else if (k == "fst") head = fst(a);
        else if (k == "snd") head = snd(a);
        else if (k == "abort") head = abort_of(a);
        else if (k == "tirr") head = tirr(a);
        else head = cirr(a);
      } else if (k == "later" || k == "later^") {
        next();
        std::string c = ident("clock name");
        Term a = postfix_atom();
        head = k == "later" ? later(c, a) : code_later(kAnon, c, a);
      } else if (k == "Id" || k == "Id^" || k == "eq^") {
        next();
        Term a = postfix_atom();
        Term u = postfix_atom();
        Term v = postfix_atom();
        head = k == "Id" ? id_type(a, u, v) : k == "Id^" ? code_id(a, u, v) : p_eq(a, u, v);
      }
    }
    if (!head) {
      if (!atom_start()) fail("expected a term");
      head = postfix_atom();
    }
    while (atom_start()) head = app(head, postfix_atom());
    return head;
  }

  Term postfix_atom() {
    Term t = atom();
    for (;;) {
      if (is_sym("[")) {
        next();
        std::string a = ident("tick name");
        expect_sym("]");
        t = tick_app(t, a);
      } else if (is_sym("{")) {
        next();
        std::string c = ident("clock name");
        expect_sym("}");
        t = clock_app(t, c);
      } else {
        return t;
      }
    }
  }

  Term braced_arg() {
    expect_sym("(");
    Term t = level0();
    expect_sym(")");
    return t;
  }

  Term atom() {
    const Token t = peek();
    if (t.type == Token::Type::Ident) {
      next();
      if (t.text == kAnon) throw ParseError("'_' cannot be used as a variable", t.line, t.col);
      return var(t.text);
    }
    if (t.type == Token::Type::Keyword) {
      const std::string& k = t.text;
      next();
      if (k == "tt") return tt();
      if (k == "refl") return refl();
      if (k == "Unit") return unit_type();
      if (k == "Empty") return empty_type();
      if (k == "Unit^") return code_unit();
      if (k == "Empty^") return code_empty();
      if (k == "Top^") return p_top();
      if (k == "Bot^") return p_bot();
      if (k == "fix") {
        if (is_sym("{")) {
          next();
          std::string c = ident("clock name");
          expect_sym("}");
          return fix(c);
        }
        return fix();
      }
      if (k == "U") return univ(clock_set());
      if (k == "Prop") return prop_univ(clock_set());
      if (k == "El" || k == "Prf") {
        ClockSet d = clock_set();
        Term a = braced_arg();
        return k == "El" ? el(d, a) : pel(d, a);
      }
      if (k == "In") {
        expect_sym("{");
        std::vector<std::string> from, to;
        while (!is_sym("=>")) {
          from.push_back(ident("clock name"));
          if (is_sym(",")) next();
        }
        next();
        while (!is_sym("}")) {
          to.push_back(ident("clock name"));
          if (is_sym(",")) next();
        }
        next();
        Term a = braced_arg();
        return incl(make_clock_set(from), make_clock_set(to), a);
      }
      --pos_;
      fail("unexpected keyword");
    }
    if (is_sym("(")) {
      next();
      Term inner = level0();
      if (is_sym(",")) {
        next();
        Term second = level0();
        expect_sym(")");
        return pair(inner, second);
      }
      if (is_sym(":")) {
        next();
        Term type = level0();
        expect_sym(")");
        Term a = ann(inner, type);
        if (inner->kind == Kind::Var) binder_candidates_.insert(a.get());
        return a;
      }
      expect_sym(")");
      binder_candidates_.erase(inner.get());
      return inner;
    }
    fail("expected a term");
  }

  std::optional<std::pair<std::string, Term>> take_binder(const Term& t) {
    if (!binder_candidates_.count(t.get())) return std::nullopt;
    binder_candidates_.erase(t.get());
    return std::make_pair(t->args[0]->name, t->args[1]);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::set<const Node*> binder_candidates_;
};

}  // namespace

Term parse_term(std::string_view text) {
  Parser p(detail::lex(text));
  Term t = p.term();
  if (!p.at_end()) p.fail("unexpected trailing input");
  return t;
}

namespace {

bool is_decl_start(std::string_view line) {
  static const char* words[] = {"clock", "tick", "var", "def", "check", "conv", "fail"};
  for (const char* w : words) {
    std::string_view sv(w);
    if (line.substr(0, sv.size()) == sv && (line.size() == sv.size() || std::isspace(static_cast<unsigned char>(line[sv.size()]))))
      return true;
  }
  return false;
}

Decl parse_decl(Parser& p, int line) {
  Decl d{};
  d.line = line;
  if (p.is_kw("fail")) {
    p.next();
    d = parse_decl(p, line);
    d.expect_failure = true;
    return d;
  }
  if (p.is_kw("clock")) {
    p.next();
    d.kind = Decl::Kind::Clock;
    d.name = p.ident("clock name");
  } else if (p.is_kw("tick")) {
    p.next();
    d.kind = Decl::Kind::Tick;
    d.name = p.ident("tick name");
    p.expect_sym(":");
    d.clock = p.ident("clock name");
  } else if (p.is_kw("var")) {
    p.next();
    d.kind = Decl::Kind::Var;
    d.name = p.ident("variable name");
    p.expect_sym(":");
    d.type = p.term();
  } else if (p.is_kw("def")) {
    p.next();
    d.kind = Decl::Kind::Def;
    d.name = p.ident("definition name");
    p.expect_sym(":");
    d.type = p.term();
    p.expect_sym(":=");
    d.term = p.term();
  } else if (p.is_kw("check")) {
    p.next();
    d.kind = Decl::Kind::Check;
    d.term = p.term();
    if (p.is_sym(":")) {
      p.next();
      d.type = p.term();
    }
  } else if (p.is_kw("conv")) {
    p.next();
    d.kind = Decl::Kind::Conv;
    d.term = p.term();
    p.expect_sym("==");
    d.term2 = p.term();
    if (p.is_sym(":")) {
      p.next();
      d.type = p.term();
    }
  } else {
    p.fail("expected a declaration");
  }
  if (!p.at_end()) p.fail("unexpected trailing input in declaration");
  return d;
}

}  // namespace

std::vector<Decl> parse_program(std::string_view text) {
  std::vector<std::pair<int, std::string>> chunks;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (is_decl_start(line)) {
      chunks.emplace_back(line_no, std::string(line));
    } else {
      std::size_t first = line.find_first_not_of(" \t\r");
      bool blank = first == std::string_view::npos || line.substr(first, 2) == "--";
      if (!blank) {
        if (chunks.empty() || first == 0)
          throw ParseError("expected a declaration keyword at the start of the line", line_no, 1);
      }
      if (!chunks.empty()) chunks.back().second += "\n" + std::string(line);
    }
    start = end + 1;
  }
  std::vector<Decl> out;
  for (const auto& [ln, chunk] : chunks) {
    Parser p(detail::lex(chunk, ln));
    out.push_back(parse_decl(p, ln));
  }
  return out;
}

}  // namespace clott::syntax
