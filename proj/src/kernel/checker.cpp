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

#include "clott/kernel/checker.hpp"

#include "clott/syntax/parse.hpp"

namespace clott::kernel {

using namespace syntax;

namespace {

[[noreturn]] void fail(const std::string& rule, const std::string& msg) { throw TypeError(rule, msg); }

std::string show(const Term& t) { return print(t); }

std::string show_set(const ClockSet& d) {
  std::string s = "{";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? ", " : "") + d[i];
  return s + "}";
}

bool is_code(Kind k) {
  switch (k) {
    case Kind::CodeLater:
    case Kind::CodeForall:
    case Kind::CodePi:
    case Kind::CodeSigma:
    case Kind::CodeSum:
    case Kind::CodeId:
    case Kind::CodeUnit:
    case Kind::CodeEmpty:
    case Kind::PTop:
    case Kind::PBot:
    case Kind::PAnd:
    case Kind::POr:
    case Kind::PExists:
    case Kind::PAll:
    case Kind::PEq:
      return true;
    default:
      return false;
  }
}

Term universe(bool prop, const ClockSet& d) { return prop ? prop_univ(d) : univ(d); }

}  // namespace

std::string Checker::fresh(const Context& ctx, const std::string& base, std::initializer_list<Term> avoid_terms) {
  std::set<std::string> avoid = ctx.names();
  for (const auto& t : avoid_terms) {
    auto f = free_names(t).all();
    avoid.insert(f.begin(), f.end());
  }
  return fresh_name(base, avoid);
}

namespace {

// Chooses a binder name that is fresh for the context and renames the body.
std::pair<std::string, Term> open(const Context& ctx, const std::string& name, const Term& body, const char* base) {
  std::set<std::string> avoid = ctx.names();
  auto fb = free_names(body).all();
  fb.erase(name);
  avoid.insert(fb.begin(), fb.end());
  const bool anon = name == kAnon;
  std::string z = fresh_name(anon ? base : name, avoid);
  if (anon || z == name) return {z, body};
  return {z, rename(body, name, z)};
}

}  // namespace

void Checker::require_clock(const Context& ctx, const std::string& k, const std::string& rule) {
  if (!ctx.has_clock(k)) fail(rule, "'" + k + "' is not a clock in the context");
}

Term Checker::whnf_type(const Context& ctx, const Term& t) {
  Fuel f{opts_.fuel};
  Term w = whnf(ctx, t, &f);
  if (fix_blocked(w))
    throw ConversionUnknown("fuel exhausted while unfolding " + show(t) + " (fuel " + std::to_string(opts_.fuel) + ")");
  return w;
}

void Checker::require_equal(const Context& ctx, const Term& inferred, const Term& expected, const std::string& rule,
                            const Term& subject) {
  const int saved = last_unfoldings_;
  Conv c = convert(ctx, inferred, expected);
  last_unfoldings_ = saved;
  if (c == Conv::Equal) return;
  std::string what = subject ? show(subject) + " has type " : "type ";
  if (c == Conv::Unknown)
    throw ConversionUnknown("could not decide " + show(inferred) + " == " + show(expected) + " within fuel " +
                            std::to_string(opts_.fuel));
  fail(rule, what + show(inferred) + " but " + show(expected) + " was expected");
}

void Checker::check_context(const Context& ctx) {
  Context prefix;
  std::set<std::string> seen;
  for (const auto& e : ctx.entries()) {
    if (!seen.insert(e.name).second) fail("ctx-fresh", "name '" + e.name + "' is declared twice");
    switch (e.sort) {
      case Entry::Sort::Clock:
        prefix = prefix.extend_clock(e.name);
        break;
      case Entry::Sort::Tick:
        if (!prefix.has_clock(e.clock))
          fail("ctx-tick", "tick '" + e.name + "' refers to '" + e.clock + "', which is not an earlier clock");
        prefix = prefix.extend_tick(e.name, e.clock);
        break;
      case Entry::Sort::Var: {
        Term a = check_type(prefix, e.type);
        if (e.value) check(prefix, e.value, a);
        prefix = prefix.extend_var(e.name, a, e.value);
        break;
      }
    }
  }
}

Term Checker::check_type(const Context& ctx, const Term& a) {
  const auto& args = a->args;
  switch (a->kind) {
    case Kind::Univ:
    case Kind::PropUniv:
      for (const auto& k : a->delta) require_clock(ctx, k, a->kind == Kind::Univ ? "univ-form" : "prop-form");
      return a;
    case Kind::Pi:
    case Kind::Sigma: {
      Term d = check_type(ctx, args[0]);
      auto [x, body] = open(ctx, a->name, args[1], "x");
      Term b = check_type(ctx.extend_var(x, d), body);
      return a->kind == Kind::Pi ? pi(x, d, b) : sigma(x, d, b);
    }
    case Kind::Sum:
      return sum(check_type(ctx, args[0]), check_type(ctx, args[1]));
    case Kind::Unit:
    case Kind::Empty:
      return a;
    case Kind::Id: {
      Term t = check_type(ctx, args[0]);
      check(ctx, args[1], t);
      check(ctx, args[2], t);
      return id_type(t, args[1], args[2]);
    }
    case Kind::Later: {
      require_clock(ctx, a->clock, "later-form");
      auto [al, body] = open(ctx, a->name, args[0], "a");
      return later(al, a->clock, check_type(ctx.extend_tick(al, a->clock), body));
    }
    case Kind::Forall: {
      auto [k, body] = open(ctx, a->name, args[0], "k");
      return forall_clk(k, check_type(ctx.extend_clock(k), body));
    }
    case Kind::El:
      for (const auto& k : a->delta) require_clock(ctx, k, "el-form");
      check(ctx, args[0], univ(a->delta));
      return a;
    case Kind::PEl:
      for (const auto& k : a->delta) require_clock(ctx, k, "prf-form");
      check(ctx, args[0], prop_univ(a->delta));
      return a;
    default: {
      Term t = whnf_type(ctx, infer(ctx, a));
      if (t->kind == Kind::Univ) return el(t->delta, a);
      if (t->kind == Kind::PropUniv) return pel(t->delta, a);
      fail("type-form", show(a) + " is not a type (it has type " + show(t) + ")");
    }
  }
}

Term Checker::infer(const Context& ctx, const Term& t) {
  const auto& a = t->args;
  switch (t->kind) {
    case Kind::Var: {
      const Entry* e = ctx.find(t->name);
      if (!e) fail("var", "unbound variable '" + t->name + "'");
      if (e->sort != Entry::Sort::Var)
        fail("var", "'" + t->name + "' is a " + (e->sort == Entry::Sort::Clock ? "clock" : "tick") + ", not a term");
      return e->type;
    }
    case Kind::Ann: {
      Term ty = check_type(ctx, a[1]);
      check(ctx, a[0], ty);
      return ty;
    }
    case Kind::App: {
      if (a[0]->kind == Kind::Fix) {
        Term tf = whnf_type(ctx, infer(ctx, a[1]));
        if (tf->kind != Kind::Pi) fail("fix", "argument of fix must be a function, got " + show(tf));
        Term dom = whnf_type(ctx, tf->args[0]);
        if (dom->kind != Kind::Later) fail("fix", "argument of fix must take a later type, got " + show(dom));
        if (!a[0]->clock.empty() && a[0]->clock != dom->clock)
          fail("fix", "fix{" + a[0]->clock + "} applied at clock " + dom->clock);
        require_clock(ctx, dom->clock, "fix");
        if (dom->name != kAnon && occurs_free(dom->name, dom->args[0]))
          fail("fix", "fix needs a non-dependent later type");
        if (tf->name != kAnon && occurs_free(tf->name, tf->args[1]))
          fail("fix", "fix needs a non-dependent function type");
        require_equal(ctx, tf->args[1], dom->args[0], "fix", nullptr);
        return tf->args[1];
      }
      Term tf = whnf_type(ctx, infer(ctx, a[0]));
      if (tf->kind != Kind::Pi) fail("app", show(a[0]) + " is applied but has type " + show(tf));
      check(ctx, a[1], tf->args[0]);
      return subst(tf->args[1], tf->name, a[1]);
    }
    case Kind::Fst:
    case Kind::Snd: {
      Term tp = whnf_type(ctx, infer(ctx, a[0]));
      if (tp->kind != Kind::Sigma) fail(kind_name(t->kind), show(a[0]) + " is not a pair, it has type " + show(tp));
      if (t->kind == Kind::Fst) return tp->args[0];
      return subst(tp->args[1], tp->name, fst(a[0]));
    }
    case Kind::Pair:
      return product(infer(ctx, a[0]), infer(ctx, a[1]));
    case Kind::Case: {
      Term ts = whnf_type(ctx, infer(ctx, a[0]));
      if (ts->kind != Kind::Sum) fail("case", "scrutinee has type " + show(ts) + ", not a sum");
      auto [x, l] = open(ctx, t->name, a[1], "x");
      Term tl = infer(ctx.extend_var(x, ts->args[0]), l);
      if (occurs_free(x, tl)) fail("case", "branch type depends on the bound variable");
      auto [y, r] = open(ctx, t->name2, a[2], "y");
      check(ctx.extend_var(y, ts->args[1]), r, tl);
      return tl;
    }
    case Kind::Tt:
      return unit_type();
    case Kind::Lam: {
      if (!a[0]) fail("lam", "cannot infer the type of an unannotated function; annotate its argument");
      Term d = check_type(ctx, a[0]);
      auto [x, body] = open(ctx, t->name, a[1], "x");
      return pi(x, d, infer(ctx.extend_var(x, d), body));
    }
    case Kind::TickLam: {
      if (t->clock.empty()) fail("tick-abs", "cannot infer the clock of a tick abstraction; write tick a : k -> ...");
      require_clock(ctx, t->clock, "tick-abs");
      auto [al, body] = open(ctx, t->name, a[0], "a");
      return later(al, t->clock, infer(ctx.extend_tick(al, t->clock), body));
    }
    case Kind::TickApp: {
      const long idx = ctx.index_of(t->name);
      if (idx < 0 || ctx.entries()[idx].sort != Entry::Sort::Tick)
        fail("tick-app", "'" + t->name + "' is not a tick in the context");
      const std::string& k = ctx.entries()[idx].clock;
      Context before = ctx.prefix(static_cast<std::size_t>(idx));
      Term ty;
      try {
        ty = whnf_type(before, infer(before, a[0]));
      } catch (const TypeError& e) {
        fail("tick-app", show(a[0]) + " must be typed in the context before tick '" + t->name + "': " + e.what());
      }
      if (ty->kind != Kind::Later) fail("tick-app", show(a[0]) + " has type " + show(ty) + ", not a later type");
      if (ty->clock != k)
        fail("tick-app", "tick '" + t->name + "' is on clock " + k + " but " + show(a[0]) + " is later on " + ty->clock);
      return subst_tick(ty->args[0], ty->name, t->name);
    }
    case Kind::ClockLam: {
      auto [k, body] = open(ctx, t->name, a[0], "k");
      return forall_clk(k, infer(ctx.extend_clock(k), body));
    }
    case Kind::ClockApp: {
      require_clock(ctx, t->name, "clock-app");
      Term ty = whnf_type(ctx, infer(ctx, a[0]));
      if (ty->kind != Kind::Forall) fail("clock-app", show(a[0]) + " has type " + show(ty) + ", not a clock quantifier");
      return subst_clock(ty->args[0], ty->name, t->name);
    }
    case Kind::Incl: {
      for (const auto& k : t->delta2) require_clock(ctx, k, "incl");
      if (!clock_subset(t->delta, t->delta2))
        fail("incl", show_set(t->delta) + " is not a subset of " + show_set(t->delta2));
      try {
        check(ctx, a[0], univ(t->delta));
        return univ(t->delta2);
      } catch (const TypeError& first) {
        try {
          check(ctx, a[0], prop_univ(t->delta));
          return prop_univ(t->delta2);
        } catch (const TypeError&) {
          throw first;
        }
      }
    }
    case Kind::Tirr: {
      Term ty = whnf_type(ctx, infer(ctx, a[0]));
      if (ty->kind != Kind::Later) fail("tirr", show(a[0]) + " has type " + show(ty) + ", not a later type");
      if (ty->name != kAnon && occurs_free(ty->name, ty->args[0]))
        fail("tirr", "tick irrelevance needs a non-dependent later type");
      const Term& body = ty->args[0];
      std::string a1 = fresh(ctx, "a", {a[0], body});
      std::set<std::string> avoid = ctx.names();
      avoid.insert(a1);
      for (const auto& n : free_names(a[0]).all()) avoid.insert(n);
      for (const auto& n : free_names(body).all()) avoid.insert(n);
      std::string a2 = fresh_name(a1, avoid);
      return later(a1, ty->clock, later(a2, ty->clock, id_type(body, tick_app(a[0], a1), tick_app(a[0], a2))));
    }
    case Kind::Cirr: {
      Term ty = check_type(ctx, a[0]);
      std::string k = fresh(ctx, "k", {ty});
      std::string g = fresh(ctx, "g", {ty});
      std::string x = fresh(ctx, "x", {ty});
      std::string y = fresh(ctx, "y", {ty});
      Term all = forall_clk(k, ty);
      Term left = pi(x, ty, id_type(ty, app(var(g), clock_lam(k, var(x))), var(x)));
      Term right = pi(y, all, id_type(all, clock_lam(k, app(var(g), var(y))), var(y)));
      return sigma(g, arrow(all, ty), product(left, right));
    }
    case Kind::Force: {
      auto [k, body] = open(ctx, t->name, a[0], "k");
      Term ty = check_type(ctx.extend_clock(k), body);
      std::string g = fresh(ctx, "g", {ty});
      std::string x = fresh(ctx, "x", {ty});
      std::string y = fresh(ctx, "y", {ty});
      std::string al = fresh(ctx, "a", {ty});
      Term all = forall_clk(k, ty);
      Term all_later = forall_clk(k, later(k, ty));
      auto can = [&](const Term& u) { return clock_lam(k, tick_lam(al, k, clock_app(u, k))); };
      Term left = pi(x, all, id_type(all, app(var(g), can(var(x))), var(x)));
      Term right = pi(y, all_later, id_type(all_later, can(app(var(g), var(y))), var(y)));
      return sigma(g, arrow(all_later, all), product(left, right));
    }
    case Kind::Fix:
      fail("fix", "fix needs an expected type or an argument");
    case Kind::Inl:
    case Kind::Inr:
    case Kind::Refl:
    case Kind::Abort:
      fail(kind_name(t->kind), "cannot infer the type of " + show(t) + "; add a type annotation");
    case Kind::Univ:
    case Kind::PropUniv:
    case Kind::Pi:
    case Kind::Sigma:
    case Kind::Sum:
    case Kind::Unit:
    case Kind::Empty:
    case Kind::Id:
    case Kind::Later:
    case Kind::Forall:
    case Kind::El:
    case Kind::PEl:
      fail("type-as-term", show(t) + " is a type, not a term; use its code");
    default:
      if (is_code(t->kind)) return infer_code(ctx, t);
      fail("infer", "cannot infer the type of " + show(t));
  }
}

Term Checker::infer_code(const Context& ctx, const Term& t) {
  const auto& a = t->args;
  auto need_univ = [&](const Term& u, const char* rule, bool prop) {
    Term ty = whnf_type(ctx, infer(ctx, u));
    if (ty->kind != (prop ? Kind::PropUniv : Kind::Univ))
      fail(rule, show(u) + " has type " + show(ty) + ", not a " + (prop ? "Prop" : "U") + " universe");
    return ty;
  };
  switch (t->kind) {
    case Kind::CodeLater: {
      require_clock(ctx, t->clock, "code-later");
      auto [al, body] = open(ctx, t->name, a[0], "a");
      Context inner = ctx.extend_tick(al, t->clock);
      Term ty = whnf_type(inner, infer(inner, body));
      if (ty->kind != Kind::Univ && ty->kind != Kind::PropUniv)
        fail("code-later", show(body) + " is not a code, it has type " + show(ty));
      if (!clock_member(ty->delta, t->clock))
        fail("code-later", "clock " + t->clock + " is not in " + show_set(ty->delta));
      return ty;
    }
    case Kind::CodeForall: {
      auto [k, body] = open(ctx, t->name, a[0], "k");
      Context inner = ctx.extend_clock(k);
      Term ty = whnf_type(inner, infer(inner, body));
      if (ty->kind != Kind::Univ && ty->kind != Kind::PropUniv)
        fail("code-forall", show(body) + " is not a code, it has type " + show(ty));
      return universe(ty->kind == Kind::PropUniv, clock_minus(ty->delta, k));
    }
    case Kind::CodePi:
    case Kind::CodeSigma: {
      const char* rule = t->kind == Kind::CodePi ? "code-pi" : "code-sigma";
      Term u = need_univ(a[0], rule, false);
      auto [x, body] = open(ctx, t->name, a[1], "x");
      check(ctx.extend_var(x, el(u->delta, a[0])), body, u);
      return u;
    }
    case Kind::CodeSum: {
      Term u = need_univ(a[0], "code-sum", false);
      check(ctx, a[1], u);
      return u;
    }
    case Kind::CodeId: {
      Term u = need_univ(a[0], "code-id", false);
      check(ctx, a[1], el(u->delta, a[0]));
      check(ctx, a[2], el(u->delta, a[0]));
      return u;
    }
    case Kind::CodeUnit:
    case Kind::CodeEmpty:
      return univ({});
    case Kind::PTop:
    case Kind::PBot:
      return prop_univ({});
    case Kind::PAnd:
    case Kind::POr: {
      Term u = need_univ(a[0], t->kind == Kind::PAnd ? "prop-and" : "prop-or", true);
      check(ctx, a[1], u);
      return u;
    }
    case Kind::PExists:
    case Kind::PAll: {
      Term u = need_univ(a[0], t->kind == Kind::PExists ? "prop-exists" : "prop-all", false);
      auto [x, body] = open(ctx, t->name, a[1], "x");
      check(ctx.extend_var(x, el(u->delta, a[0])), body, prop_univ(u->delta));
      return prop_univ(u->delta);
    }
    case Kind::PEq: {
      Term u = need_univ(a[0], "prop-eq", false);
      check(ctx, a[1], el(u->delta, a[0]));
      check(ctx, a[2], el(u->delta, a[0]));
      return prop_univ(u->delta);
    }
    default:
      fail("code", show(t) + " is not a code");
  }
}

void Checker::check_code(const Context& ctx, const Term& t, bool prop, const ClockSet& delta) {
  const auto& a = t->args;
  auto only = [&](bool want_prop, const char* rule) {
    if (want_prop != prop)
      fail(rule, show(t) + " is a " + (want_prop ? "proposition" : "type") + " code, checked against " +
                     show(universe(prop, delta)));
  };
  switch (t->kind) {
    case Kind::CodeLater: {
      require_clock(ctx, t->clock, "code-later");
      if (!clock_member(delta, t->clock))
        fail("code-later", "clock " + t->clock + " is not in " + show_set(delta));
      auto [al, body] = open(ctx, t->name, a[0], "a");
      check(ctx.extend_tick(al, t->clock), body, universe(prop, delta));
      return;
    }
    case Kind::CodeForall: {
      auto [k, body] = open(ctx, t->name, a[0], "k");
      check(ctx.extend_clock(k), body, universe(prop, clock_union(delta, {k})));
      return;
    }
    case Kind::CodePi:
    case Kind::CodeSigma: {
      only(false, t->kind == Kind::CodePi ? "code-pi" : "code-sigma");
      check(ctx, a[0], univ(delta));
      auto [x, body] = open(ctx, t->name, a[1], "x");
      check(ctx.extend_var(x, el(delta, a[0])), body, univ(delta));
      return;
    }
    case Kind::CodeSum:
      only(false, "code-sum");
      check(ctx, a[0], univ(delta));
      check(ctx, a[1], univ(delta));
      return;
    case Kind::CodeId:
      only(false, "code-id");
      check(ctx, a[0], univ(delta));
      check(ctx, a[1], el(delta, a[0]));
      check(ctx, a[2], el(delta, a[0]));
      return;
    case Kind::CodeUnit:
    case Kind::CodeEmpty:
      only(false, "code-unit");
      return;
    case Kind::PTop:
    case Kind::PBot:
      only(true, "prop-top");
      return;
    case Kind::PAnd:
    case Kind::POr:
      only(true, t->kind == Kind::PAnd ? "prop-and" : "prop-or");
      check(ctx, a[0], prop_univ(delta));
      check(ctx, a[1], prop_univ(delta));
      return;
    case Kind::PExists:
    case Kind::PAll: {
      only(true, t->kind == Kind::PExists ? "prop-exists" : "prop-all");
      check(ctx, a[0], univ(delta));
      auto [x, body] = open(ctx, t->name, a[1], "x");
      check(ctx.extend_var(x, el(delta, a[0])), body, prop_univ(delta));
      return;
    }
    case Kind::PEq:
      only(true, "prop-eq");
      check(ctx, a[0], univ(delta));
      check(ctx, a[1], el(delta, a[0]));
      check(ctx, a[2], el(delta, a[0]));
      return;
    default:
      fail("code", show(t) + " is not a code");
  }
}

void Checker::check_fix_app(const Context& ctx, const Term& fix_node, const Term& f, const Term& type) {
  std::string k = fix_node->clock;
  if (k.empty() && f->kind == Kind::Lam && f->args[0]) {
    Term d = whnf_type(ctx, check_type(ctx, f->args[0]));
    if (d->kind == Kind::Later) k = d->clock;
  }
  if (k.empty()) {
    try {
      Term tf = whnf_type(ctx, infer(ctx, f));
      if (tf->kind == Kind::Pi) {
        Term d = whnf_type(ctx, tf->args[0]);
        if (d->kind == Kind::Later) k = d->clock;
      }
    } catch (const TypeError&) {
    }
  }
  if (k.empty()) fail("fix", "cannot determine the clock of fix; write fix{k}");
  require_clock(ctx, k, "fix");
  check(ctx, f, arrow(later(k, type), type));
}

void Checker::check(const Context& ctx, const Term& t, const Term& type) {
  const auto& a = t->args;
  auto expected = [&] { return whnf_type(ctx, type); };
  switch (t->kind) {
    case Kind::Lam: {
      Term ty = expected();
      if (ty->kind != Kind::Pi) fail("lam", "function checked against " + show(ty));
      if (a[0]) require_equal(ctx, check_type(ctx, a[0]), ty->args[0], "lam", nullptr);
      std::set<std::string> avoid = ctx.names();
      for (const auto& n : free_names(t).all()) avoid.insert(n);
      for (const auto& n : free_names(ty).all()) avoid.insert(n);
      std::string x = fresh_name(t->name == kAnon ? "x" : t->name, avoid);
      check(ctx.extend_var(x, ty->args[0]), rename(a[1], t->name, x), rename(ty->args[1], ty->name, x));
      return;
    }
    case Kind::TickLam: {
      Term ty = expected();
      if (ty->kind != Kind::Later) fail("tick-abs", "tick abstraction checked against " + show(ty));
      if (!t->clock.empty() && t->clock != ty->clock)
        fail("tick-abs", "tick on clock " + t->clock + " checked against a later type on clock " + ty->clock);
      require_clock(ctx, ty->clock, "tick-abs");
      std::set<std::string> avoid = ctx.names();
      for (const auto& n : free_names(t).all()) avoid.insert(n);
      for (const auto& n : free_names(ty).all()) avoid.insert(n);
      std::string al = fresh_name(t->name, avoid);
      check(ctx.extend_tick(al, ty->clock), rename(a[0], t->name, al), rename(ty->args[0], ty->name, al));
      return;
    }
    case Kind::ClockLam: {
      Term ty = expected();
      if (ty->kind != Kind::Forall) fail("clock-abs", "clock abstraction checked against " + show(ty));
      std::set<std::string> avoid = ctx.names();
      for (const auto& n : free_names(t).all()) avoid.insert(n);
      for (const auto& n : free_names(ty).all()) avoid.insert(n);
      std::string k = fresh_name(t->name, avoid);
      check(ctx.extend_clock(k), rename(a[0], t->name, k), rename(ty->args[0], ty->name, k));
      return;
    }
    case Kind::Pair: {
      Term ty = expected();
      if (ty->kind != Kind::Sigma) fail("pair", "pair checked against " + show(ty));
      check(ctx, a[0], ty->args[0]);
      check(ctx, a[1], subst(ty->args[1], ty->name, a[0]));
      return;
    }
    case Kind::Inl:
    case Kind::Inr: {
      Term ty = expected();
      if (ty->kind != Kind::Sum) fail(kind_name(t->kind), "injection checked against " + show(ty));
      check(ctx, a[0], ty->args[t->kind == Kind::Inl ? 0 : 1]);
      return;
    }
    case Kind::Case: {
      Term ts = whnf_type(ctx, infer(ctx, a[0]));
      if (ts->kind != Kind::Sum) fail("case", "scrutinee has type " + show(ts) + ", not a sum");
      auto [x, l] = open(ctx, t->name, a[1], "x");
      check(ctx.extend_var(x, ts->args[0]), l, type);
      auto [y, r] = open(ctx, t->name2, a[2], "y");
      check(ctx.extend_var(y, ts->args[1]), r, type);
      return;
    }
    case Kind::Abort:
      check(ctx, a[0], empty_type());
      return;
    case Kind::Refl: {
      Term ty = expected();
      if (ty->kind != Kind::Id) fail("refl", "refl checked against " + show(ty));
      require_equal(ctx, ty->args[1], ty->args[2], "refl", nullptr);
      return;
    }
    case Kind::Fix: {
      Term ty = expected();
      if (ty->kind != Kind::Pi) fail("fix", "fix checked against " + show(ty));
      if (ty->name != kAnon && occurs_free(ty->name, ty->args[1]))
        fail("fix", "fix needs a non-dependent function type");
      Term f = whnf_type(ctx, ty->args[0]);
      if (f->kind != Kind::Pi) fail("fix", "fix takes a function, not " + show(f));
      if (f->name != kAnon && occurs_free(f->name, f->args[1])) fail("fix", "fix needs a non-dependent function type");
      Term dom = whnf_type(ctx, f->args[0]);
      if (dom->kind != Kind::Later) fail("fix", "fix takes a function on a later type, not on " + show(dom));
      require_clock(ctx, dom->clock, "fix");
      if (!t->clock.empty() && t->clock != dom->clock)
        fail("fix", "fix{" + t->clock + "} used at clock " + dom->clock);
      if (dom->name != kAnon && occurs_free(dom->name, dom->args[0]))
        fail("fix", "fix needs a non-dependent later type");
      require_equal(ctx, dom->args[0], f->args[1], "fix", nullptr);
      require_equal(ctx, f->args[1], ty->args[1], "fix", nullptr);
      return;
    }
    case Kind::App:
      if (a[0]->kind == Kind::Fix) {
        check_fix_app(ctx, a[0], a[1], type);
        return;
      }
      break;
    default:
      if (is_code(t->kind)) {
        Term ty = expected();
        if (ty->kind != Kind::Univ && ty->kind != Kind::PropUniv)
          fail("code", show(t) + " is a code but was checked against " + show(ty));
        check_code(ctx, t, ty->kind == Kind::PropUniv, ty->delta);
        return;
      }
      break;
  }
  Term inferred = infer(ctx, t);
  require_equal(ctx, inferred, type, "conversion", t);
}

std::vector<AxiomInfo> axioms() {
  return {
      {"tirr", "t : later k A  gives  tirr t : later (a : k) . later (a' : k) . Id A (t [a]) (t [a'])"},
      {"cirr", "A type  gives  cirr A : (g : (forall-clk k . A) -> A) * ((x : A) -> Id A (g (clock k -> x)) x) * "
               "((y : forall-clk k . A) -> Id (forall-clk k . A) (clock k -> g y) y)"},
      {"force", "A type under k  gives  force k . A : inverse data for the canonical map "
                "(forall-clk k . A) -> forall-clk k . later k A, fun x -> clock k -> tick a : k -> x {k}"},
  };
}

}  // namespace clott::kernel
