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

#include "clott/model/type_expr.hpp"

#include "clott/core/errors.hpp"
#include "clott/theories/free_model.hpp"

#include <cctype>
#include <stdexcept>

namespace clott::model {

namespace {

using K = TypeExprM::Kind;

TypeM node(K kind, std::vector<TypeM> args = {}, std::string name = {}, std::string name2 = {}) {
  auto t = std::make_shared<TypeExprM>();
  t->kind = kind;
  t->args = std::move(args);
  t->name = std::move(name);
  t->name2 = std::move(name2);
  return t;
}

}  // namespace

TypeM m_const(ValueSet c) {
  auto t = std::make_shared<TypeExprM>();
  normalize(c);
  t->constant = std::move(c);
  return t;
}
TypeM m_fin(std::size_t n) { return m_const(theories::standard_set(n)); }
TypeM m_clk() { return node(K::Clk); }
TypeM m_var(std::string name) { return node(K::Var, {}, std::move(name)); }
TypeM m_prod(TypeM a, TypeM b) { return node(K::Prod, {std::move(a), std::move(b)}); }
TypeM m_sum(TypeM a, TypeM b) { return node(K::Sum, {std::move(a), std::move(b)}); }
TypeM m_arrow(TypeM a, TypeM b) { return node(K::Arrow, {std::move(a), std::move(b)}); }
TypeM m_later(std::string clock, TypeM a) { return node(K::Later, {std::move(a)}, std::move(clock)); }
TypeM m_forall(std::string clock, TypeM a) { return node(K::Forall, {std::move(a)}, std::move(clock)); }
TypeM m_mu(std::string clock, coalgebra::Functor f) {
  auto t = std::make_shared<TypeExprM>();
  t->kind = K::Mu;
  t->name = std::move(clock);
  t->functor = std::move(f);
  return t;
}
TypeM m_apply(coalgebra::Functor f, TypeM a) {
  auto t = std::make_shared<TypeExprM>();
  t->kind = K::Apply;
  t->functor = std::move(f);
  t->args = {std::move(a)};
  return t;
}
TypeM m_top() { return node(K::Top); }
TypeM m_bot() { return node(K::Bot); }
TypeM m_and(TypeM a, TypeM b) { return node(K::And, {std::move(a), std::move(b)}); }
TypeM m_or(TypeM a, TypeM b) { return node(K::Or, {std::move(a), std::move(b)}); }
TypeM m_exists(std::string x, TypeM dom, TypeM body) {
  return node(K::Exists, {std::move(dom), std::move(body)}, std::move(x));
}
TypeM m_all(std::string x, TypeM dom, TypeM body) { return node(K::All, {std::move(dom), std::move(body)}, std::move(x)); }
TypeM m_eq(std::string x, std::string y) { return node(K::Eq, {}, std::move(x), std::move(y)); }
TypeM m_atom(std::string pred, std::string x) { return node(K::Atom, {}, std::move(pred), std::move(x)); }

namespace {

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
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' || s[pos] == '\'' ||
                              s[pos] == '*' || s[pos] == '-'))
      ++pos;
    if (b == pos) fail("expected identifier");
    return std::string(s.substr(b, pos - b));
  }
  coalgebra::Functor functor() {
    skip();
    try {
      return coalgebra::parse_functor_at(s, pos);
    } catch (const ParseError& e) {
      throw ParseError(std::string("in functor: ") + e.what(), 1, static_cast<int>(pos) + 1);
    }
  }

  TypeM parse() {
    std::string head = word();
    if (head == "fin") {
      expect('(');
      std::string n = word();
      expect(')');
      try {
        return m_fin(static_cast<std::size_t>(std::stoul(n)));
      } catch (const std::exception&) {
        fail("expected a size");
      }
    }
    if (head == "const") {
      expect('{');
      ValueSet c;
      if (!eat('}')) {
        do c.push_back(coalgebra::parse_atom(word()));
        while (eat(','));
        expect('}');
      }
      return m_const(std::move(c));
    }
    if (head == "clk") return m_clk();
    if (head == "top") return m_top();
    if (head == "bot") return m_bot();
    expect('(');
    TypeM out;
    if (head == "var") {
      out = m_var(word());
    } else if (head == "prod" || head == "sum" || head == "arrow" || head == "and" || head == "or") {
      TypeM a = parse();
      expect(',');
      TypeM b = parse();
      if (head == "prod") out = m_prod(a, b);
      else if (head == "sum") out = m_sum(a, b);
      else if (head == "arrow") out = m_arrow(a, b);
      else if (head == "and") out = m_and(a, b);
      else out = m_or(a, b);
    } else if (head == "later" || head == "forall") {
      std::string k = word();
      expect(',');
      TypeM a = parse();
      out = head == "later" ? m_later(k, a) : m_forall(k, a);
    } else if (head == "mu") {
      std::string k = word();
      expect(',');
      out = m_mu(k, functor());
    } else if (head == "apply") {
      coalgebra::Functor f = functor();
      expect(',');
      out = m_apply(f, parse());
    } else if (head == "exists" || head == "all") {
      std::string x = word();
      expect(',');
      TypeM dom = parse();
      expect(',');
      TypeM body = parse();
      out = head == "exists" ? m_exists(x, dom, body) : m_all(x, dom, body);
    } else if (head == "eq" || head == "atom") {
      std::string a = word();
      expect(',');
      std::string b = word();
      out = head == "eq" ? m_eq(a, b) : m_atom(a, b);
    } else {
      fail("unknown type former '" + head + "'");
    }
    expect(')');
    return out;
  }
};

}  // namespace

TypeM parse_type_m(std::string_view text) {
  Parser p{text};
  TypeM t = p.parse();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  return t;
}

std::string print(const TypeM& t) {
  auto two = [&](const char* h) { return std::string(h) + "(" + print(t->args[0]) + ", " + print(t->args[1]) + ")"; };
  switch (t->kind) {
    case K::Const: {
      std::string out = "const{";
      for (std::size_t i = 0; i < t->constant.size(); ++i) {
        const Value& v = t->constant[i];
        out += (i ? "," : "") + (v.tag() == Value::Tag::Sym ? v.name() : v.str());
      }
      return out + "}";
    }
    case K::Clk: return "clk";
    case K::Var: return "var(" + t->name + ")";
    case K::Prod: return two("prod");
    case K::Sum: return two("sum");
    case K::Arrow: return two("arrow");
    case K::Later: return "later(" + t->name + ", " + print(t->args[0]) + ")";
    case K::Forall: return "forall(" + t->name + ", " + print(t->args[0]) + ")";
    case K::Mu: return "mu(" + t->name + ", " + coalgebra::print(t->functor) + ")";
    case K::Apply: return "apply(" + coalgebra::print(t->functor) + ", " + print(t->args[0]) + ")";
    case K::Top: return "top";
    case K::Bot: return "bot";
    case K::And: return two("and");
    case K::Or: return two("or");
    case K::Exists:
    case K::All:
      return std::string(t->kind == K::Exists ? "exists(" : "all(") + t->name + ", " + print(t->args[0]) + ", " +
             print(t->args[1]) + ")";
    case K::Eq: return "eq(" + t->name + ", " + t->name2 + ")";
    case K::Atom: return "atom(" + t->name + ", " + t->name2 + ")";
  }
  return "?";
}

int forall_depth(const TypeM& t) {
  int d = 0;
  for (const TypeM& a : t->args) d = std::max(d, forall_depth(a));
  return t->kind == K::Forall ? d + 1 : d;
}

std::set<std::string> free_clocks(const TypeM& t) {
  std::set<std::string> out;
  for (const TypeM& a : t->args) {
    auto s = free_clocks(a);
    out.insert(s.begin(), s.end());
  }
  if (t->kind == K::Later || t->kind == K::Mu) out.insert(t->name);
  if (t->kind == K::Forall) out.erase(t->name);
  return out;
}

namespace {

struct Evaluator {
  ModelContext& ctx;
  const EvalEnv& env;

  FinPresheaf run(const TypeM& t, CategoryPtr cat, const std::string& clock,
                  const std::map<std::string, Value>& bound) {
    switch (t->kind) {
      case K::Const: return constant(cat, t->constant);
      case K::Clk: return clocks(cat);
      case K::Var: {
        auto it = env.vars.find(t->name);
        if (it == env.vars.end()) throw std::invalid_argument("unbound type variable " + t->name);
        return it->second(cat);
      }
      case K::Prod: return product(run(t->args[0], cat, clock, bound), run(t->args[1], cat, clock, bound));
      case K::Sum: return sum(run(t->args[0], cat, clock, bound), run(t->args[1], cat, clock, bound));
      case K::Arrow:
        return exponential(run(t->args[0], cat, clock, bound), run(t->args[1], cat, clock, bound),
                           env.exponential_budget);
      case K::Later:
        if (t->name != clock) throw std::invalid_argument("clock " + t->name + " is not in scope");
        return later(run(t->args[0], cat, clock, bound));
      case K::Forall: {
        if (!clock.empty() && clock != t->name && free_clocks(t->args[0]).count(clock))
          throw std::invalid_argument("clock quantification under another clock is limited to bodies without it");
        CategoryPtr slice = ctx.category(Base::Clock, cat->cap() + 1);
        if (slice->cap() != cat->cap() + 1) throw FreshClockExhausted("clock pool too small for nested quantifiers");
        FinPresheaf body = run(t->args[0], slice, t->name, bound);
        FinPresheaf result = forall_clk(body, ctx.category(Base::Time, cat->cap()));
        return cat->base() == Base::Clock ? reindex(result, cat) : result;
      }
      case K::Mu:
        if (t->name != clock) throw std::invalid_argument("clock " + t->name + " is not in scope");
        return guarded_fixpoint(t->functor, cat);
      case K::Apply: return apply_functor(t->functor, run(t->args[0], cat, clock, bound));
      case K::Top: return terminal(cat);
      case K::Bot: return empty(cat);
      case K::And: return squash(product(run(t->args[0], cat, clock, bound), run(t->args[1], cat, clock, bound)));
      case K::Or: return squash(sum(run(t->args[0], cat, clock, bound), run(t->args[1], cat, clock, bound)));
      case K::Exists:
      case K::All: {
        if (!free_clocks(t->args[0]).empty()) throw std::invalid_argument("quantified domains must be clock-free");
        CategoryPtr time = ctx.category(Base::Time, cat->cap());
        FinPresheaf dom = run(t->args[0], time, {}, bound);
        if (!check_invariance(dom).ok) throw std::invalid_argument("quantified domain is not a family");
        std::vector<FinPresheaf> parts;
        for (const Value& a : dom.fiber(0)) {
          auto inner = bound;
          inner[t->name] = a;
          parts.push_back(run(t->args[1], cat, clock, inner));
        }
        bool any = t->kind == K::Exists;
        return build_presheaf(
            cat,
            [&](std::size_t o) {
              bool holds = !any;
              for (const FinPresheaf& p : parts) {
                if (any && !p.fiber(o).empty()) holds = true;
                if (!any && p.fiber(o).empty()) holds = false;
              }
              return holds ? ValueSet{Value::unit()} : ValueSet{};
            },
            [](std::size_t, const Value&) { return Value::unit(); });
      }
      case K::Eq: {
        auto lookup = [&](const std::string& n) {
          auto it = bound.find(n);
          return it != bound.end() ? it->second : coalgebra::parse_atom(n);
        };
        return lookup(t->name) == lookup(t->name2) ? terminal(cat) : empty(cat);
      }
      case K::Atom: {
        auto it = env.predicates.find(t->name);
        if (it == env.predicates.end()) throw std::invalid_argument("unknown predicate " + t->name);
        auto b = bound.find(t->name2);
        return it->second(cat, b != bound.end() ? b->second : coalgebra::parse_atom(t->name2));
      }
    }
    throw std::logic_error("unhandled type former");
  }
};

}  // namespace

FinPresheaf eval_type(ModelContext& ctx, const TypeM& t, const EvalEnv& env, const std::string& clock) {
  auto fc = free_clocks(t);
  if (fc.size() > 1 || (fc.size() == 1 && *fc.begin() != clock))
    throw std::invalid_argument("type mentions clocks other than the one in scope");
  int cap = ctx.pool() - forall_depth(t);
  if (cap < (clock.empty() ? 0 : 1))
    throw FreshClockExhausted("clock pool of " + std::to_string(ctx.pool()) + " is too small for " +
                              std::to_string(forall_depth(t)) + " nested quantifier(s)");
  CategoryPtr cat = ctx.category(clock.empty() ? Base::Time : Base::Clock, cap);
  Evaluator ev{ctx, env};
  return ev.run(t, cat, clock, {});
}

}  // namespace clott::model
