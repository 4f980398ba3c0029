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

#include "clott/coalgebra/functor.hpp"

#include "clott/core/errors.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

namespace clott::coalgebra {

Functor f_const(ValueSet c) {
  auto f = std::make_shared<FunctorExpr>();
  f->kind = FunctorExpr::Kind::Const;
  normalize(c);
  f->constant = std::move(c);
  return f;
}

Functor f_id() {
  static const Functor id = std::make_shared<FunctorExpr>();
  return id;
}

Functor f_prod(Functor a, Functor b) {
  auto f = std::make_shared<FunctorExpr>();
  f->kind = FunctorExpr::Kind::Prod;
  f->args = {std::move(a), std::move(b)};
  return f;
}

Functor f_sum(Functor a, Functor b) {
  auto f = std::make_shared<FunctorExpr>();
  f->kind = FunctorExpr::Kind::Sum;
  f->args = {std::move(a), std::move(b)};
  return f;
}

Functor f_monad(theories::Builtin b, Functor inner, theories::Budget budget) {
  if (b == theories::Builtin::Custom) throw std::invalid_argument("functor monads must be builtin");
  auto f = std::make_shared<FunctorExpr>();
  f->kind = FunctorExpr::Kind::Monad;
  f->monad = b;
  f->budget = budget;
  f->args = {std::move(inner)};
  return f;
}

namespace {

const theories::FreeModel& model_for(const FunctorExpr& f) {
  // one model instance per (theory, budget) pair
  static thread_local std::map<std::tuple<int, int, int>, std::unique_ptr<theories::FreeModel>> cache;
  auto key = std::make_tuple(static_cast<int>(f.monad), f.budget.max_length, f.budget.denominator);
  auto& slot = cache[key];
  if (!slot) slot = theories::make_free_model(theories::builtin_theory(f.monad), f.budget);
  return *slot;
}

struct Parser {
  std::string_view s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, 1, static_cast<int>(pos) + 1); }
  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  std::string word() {
    skip();
    std::size_t b = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' || s[pos] == '-' || s[pos] == '*' ||
                              s[pos] == '\''))
      ++pos;
    if (b == pos) fail("expected identifier");
    return std::string(s.substr(b, pos - b));
  }
  int number() {
    std::string w = word();
    try {
      return std::stoi(w);
    } catch (const std::exception&) {
      fail("expected number");
    }
  }

  Functor parse() {
    std::string head = word();
    if (head == "id") return f_id();
    if (head == "const") {
      expect('{');
      ValueSet c;
      if (!eat('}')) {
        do c.push_back(parse_atom(word()));
        while (eat(','));
        expect('}');
      }
      return f_const(std::move(c));
    }
    if (head == "fin") {
      expect('(');
      int n = number();
      expect(')');
      return f_const(theories::standard_set(static_cast<std::size_t>(n)));
    }
    if (head == "prod" || head == "sum") {
      expect('(');
      Functor a = parse();
      expect(',');
      Functor b = parse();
      expect(')');
      return head == "prod" ? f_prod(a, b) : f_sum(a, b);
    }
    theories::Builtin b;
    if (head == "pf") b = theories::Builtin::Semilattice;
    else if (head == "df") b = theories::Builtin::Convex;
    else if (head == "list") b = theories::Builtin::Monoid;
    else if (head == "bag") b = theories::Builtin::CommutativeMonoid;
    else if (head == "trunc") b = theories::Builtin::Truncation;
    else fail("unknown functor '" + head + "'");
    theories::Budget budget;
    if (eat('[')) {
      int n = number();
      expect(']');
      if (b == theories::Builtin::Convex) budget.denominator = n;
      else budget.max_length = n;
    }
    expect('(');
    Functor inner = parse();
    expect(')');
    return f_monad(b, inner, budget);
  }
};

std::string atom_text(const Value& v) {
  if (v.tag() == Value::Tag::Sym) return v.name();
  return v.str();
}

}  // namespace

Value parse_atom(std::string_view text) {
  std::string t(text);
  if (!t.empty() && (std::isdigit(static_cast<unsigned char>(t[0])) || t[0] == '-')) {
    try {
      std::size_t used = 0;
      long long n = std::stoll(t, &used);
      if (used == t.size()) return Value::integer(n);
    } catch (const std::exception&) {
    }
  }
  return Value::symbol(t);
}

Functor parse_functor_at(std::string_view text, std::size_t& pos) {
  Parser p{text, pos};
  Functor f = p.parse();
  pos = p.pos;
  return f;
}

Functor parse_functor(std::string_view text) {
  Parser p{text};
  Functor f = p.parse();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  return f;
}

std::string print(const Functor& f) {
  switch (f->kind) {
    case FunctorExpr::Kind::Id: return "id";
    case FunctorExpr::Kind::Const: {
      std::string out = "const{";
      for (std::size_t i = 0; i < f->constant.size(); ++i) out += (i ? "," : "") + atom_text(f->constant[i]);
      return out + "}";
    }
    case FunctorExpr::Kind::Prod: return "prod(" + print(f->args[0]) + ", " + print(f->args[1]) + ")";
    case FunctorExpr::Kind::Sum: return "sum(" + print(f->args[0]) + ", " + print(f->args[1]) + ")";
    case FunctorExpr::Kind::Monad: {
      std::string inner = "(" + print(f->args[0]) + ")";
      theories::Budget def;
      switch (f->monad) {
        case theories::Builtin::Semilattice: return "pf" + inner;
        case theories::Builtin::Convex:
          return f->budget.denominator == def.denominator ? "df" + inner
                                                          : "df[" + std::to_string(f->budget.denominator) + "]" + inner;
        case theories::Builtin::Monoid:
        case theories::Builtin::CommutativeMonoid: {
          std::string name = f->monad == theories::Builtin::Monoid ? "list" : "bag";
          return f->budget.max_length == def.max_length
                     ? name + inner
                     : name + "[" + std::to_string(f->budget.max_length) + "]" + inner;
        }
        case theories::Builtin::Truncation: return "trunc" + inner;
        case theories::Builtin::Custom: break;
      }
    }
  }
  return "?";
}

std::optional<std::size_t> functor_size(const Functor& f, std::size_t n) {
  constexpr std::size_t cap = std::size_t(1) << 62;
  switch (f->kind) {
    case FunctorExpr::Kind::Id: return n;
    case FunctorExpr::Kind::Const: return f->constant.size();
    case FunctorExpr::Kind::Prod:
    case FunctorExpr::Kind::Sum: {
      auto a = functor_size(f->args[0], n), b = functor_size(f->args[1], n);
      if (!a || !b) return std::nullopt;
      if (f->kind == FunctorExpr::Kind::Sum) return std::min(cap, *a + *b);
      if (*a != 0 && *b > cap / *a) return cap;
      return *a * *b;
    }
    case FunctorExpr::Kind::Monad: {
      auto a = functor_size(f->args[0], n);
      if (!a) return std::nullopt;
      return model_for(*f).predicted_size(*a);
    }
  }
  return std::nullopt;
}

ValueSet functor_eval(const Functor& f, const ValueSet& X, std::size_t max_elements) {
  if (auto p = functor_size(f, X.size()); p && *p > max_elements)
    throw BudgetExceeded(print(f) + " on " + std::to_string(X.size()) + " elements has " + std::to_string(*p) +
                         " elements, over the budget of " + std::to_string(max_elements));
  ValueSet out;
  switch (f->kind) {
    case FunctorExpr::Kind::Id: out = X; break;
    case FunctorExpr::Kind::Const: out = f->constant; break;
    case FunctorExpr::Kind::Prod: {
      ValueSet a = functor_eval(f->args[0], X, max_elements), b = functor_eval(f->args[1], X, max_elements);
      for (const Value& x : a)
        for (const Value& y : b) out.push_back(Value::tuple({x, y}));
      break;
    }
    case FunctorExpr::Kind::Sum: {
      for (const Value& x : functor_eval(f->args[0], X, max_elements)) out.push_back(Value::inl(x));
      for (const Value& y : functor_eval(f->args[1], X, max_elements)) out.push_back(Value::inr(y));
      break;
    }
    case FunctorExpr::Kind::Monad: {
      ValueSet inner = functor_eval(f->args[0], X, max_elements);
      theories::Budget b = f->budget;
      b.max_elements = max_elements;
      out = theories::make_free_model(theories::builtin_theory(f->monad), b)->carrier(inner);
      break;
    }
  }
  normalize(out);
  if (out.size() > max_elements) throw BudgetExceeded(print(f) + " exceeds the element budget");
  return out;
}

Value functor_map(const Functor& F, const SetFn& f, const Value& t) {
  switch (F->kind) {
    case FunctorExpr::Kind::Id: return f(t);
    case FunctorExpr::Kind::Const: return t;
    case FunctorExpr::Kind::Prod:
      return Value::tuple({functor_map(F->args[0], f, t.item(0)), functor_map(F->args[1], f, t.item(1))});
    case FunctorExpr::Kind::Sum:
      return t.tag() == Value::Tag::Inl ? Value::inl(functor_map(F->args[0], f, t.item(0)))
                                        : Value::inr(functor_map(F->args[1], f, t.item(0)));
    case FunctorExpr::Kind::Monad: {
      const Functor& inner = F->args[0];
      SetFn g = [&](const Value& v) { return functor_map(inner, f, v); };
      return model_for(*F).map(g, t, {});
    }
  }
  return t;
}

}  // namespace clott::coalgebra
