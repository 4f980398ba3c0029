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

#include "clott/syntax/term.hpp"

#include <algorithm>
#include <functional>

namespace clott::syntax {

ClockSet make_clock_set(std::vector<std::string> names) {
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

ClockSet clock_union(const ClockSet& a, const ClockSet& b) {
  ClockSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ClockSet clock_minus(const ClockSet& a, const std::string& k) {
  ClockSet out;
  for (const auto& c : a)
    if (c != k) out.push_back(c);
  return out;
}

bool clock_subset(const ClockSet& a, const ClockSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool clock_member(const ClockSet& a, const std::string& k) {
  return std::binary_search(a.begin(), a.end(), k);
}

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Var: return "var";
    case Kind::Lam: return "lam";
    case Kind::App: return "app";
    case Kind::Ann: return "ann";
    case Kind::Pi: return "pi";
    case Kind::Sigma: return "sigma";
    case Kind::Pair: return "pair";
    case Kind::Fst: return "fst";
    case Kind::Snd: return "snd";
    case Kind::Sum: return "sum";
    case Kind::Inl: return "inl";
    case Kind::Inr: return "inr";
    case Kind::Case: return "case";
    case Kind::Unit: return "Unit";
    case Kind::Tt: return "tt";
    case Kind::Empty: return "Empty";
    case Kind::Abort: return "abort";
    case Kind::Id: return "Id";
    case Kind::Refl: return "refl";
    case Kind::Later: return "later";
    case Kind::TickLam: return "tick-lam";
    case Kind::TickApp: return "tick-app";
    case Kind::Forall: return "forall-clk";
    case Kind::ClockLam: return "clock-lam";
    case Kind::ClockApp: return "clock-app";
    case Kind::Fix: return "fix";
    case Kind::Univ: return "U";
    case Kind::PropUniv: return "Prop";
    case Kind::El: return "El";
    case Kind::PEl: return "Prf";
    case Kind::Incl: return "In";
    case Kind::CodeLater: return "later^";
    case Kind::CodeForall: return "forall-clk^";
    case Kind::CodePi: return "Pi^";
    case Kind::CodeSigma: return "Sigma^";
    case Kind::CodeSum: return "+^";
    case Kind::CodeId: return "Id^";
    case Kind::CodeUnit: return "Unit^";
    case Kind::CodeEmpty: return "Empty^";
    case Kind::PTop: return "Top^";
    case Kind::PBot: return "Bot^";
    case Kind::PAnd: return "/\\";
    case Kind::POr: return "\\/";
    case Kind::PExists: return "exists^";
    case Kind::PAll: return "all^";
    case Kind::PEq: return "eq^";
    case Kind::Tirr: return "tirr";
    case Kind::Cirr: return "cirr";
    case Kind::Force: return "force";
  }
  return "?";
}

namespace {

Term mk(Kind k, std::vector<Term> args = {}, std::string name = {}, std::string clock = {}) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->name = std::move(name);
  n->clock = std::move(clock);
  n->args = std::move(args);
  return n;
}

}  // namespace

Term var(std::string x) { return mk(Kind::Var, {}, std::move(x)); }
Term lam(std::string x, Term dom, Term body) { return mk(Kind::Lam, {std::move(dom), std::move(body)}, std::move(x)); }
Term app(Term f, Term a) { return mk(Kind::App, {std::move(f), std::move(a)}); }
Term app(Term f, std::initializer_list<Term> args) {
  for (const auto& a : args) f = app(f, a);
  return f;
}
Term ann(Term t, Term type) { return mk(Kind::Ann, {std::move(t), std::move(type)}); }
Term pi(std::string x, Term a, Term b) { return mk(Kind::Pi, {std::move(a), std::move(b)}, std::move(x)); }
Term arrow(Term a, Term b) { return pi(kAnon, std::move(a), std::move(b)); }
Term sigma(std::string x, Term a, Term b) { return mk(Kind::Sigma, {std::move(a), std::move(b)}, std::move(x)); }
Term product(Term a, Term b) { return sigma(kAnon, std::move(a), std::move(b)); }
Term pair(Term a, Term b) { return mk(Kind::Pair, {std::move(a), std::move(b)}); }
Term fst(Term p) { return mk(Kind::Fst, {std::move(p)}); }
Term snd(Term p) { return mk(Kind::Snd, {std::move(p)}); }
Term sum(Term a, Term b) { return mk(Kind::Sum, {std::move(a), std::move(b)}); }
Term inl(Term a) { return mk(Kind::Inl, {std::move(a)}); }
Term inr(Term a) { return mk(Kind::Inr, {std::move(a)}); }
Term case_of(Term s, std::string x, Term l, std::string y, Term r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Case;
  n->name = std::move(x);
  n->name2 = std::move(y);
  n->args = {std::move(s), std::move(l), std::move(r)};
  return n;
}
Term unit_type() { return mk(Kind::Unit); }
Term tt() { return mk(Kind::Tt); }
Term empty_type() { return mk(Kind::Empty); }
Term abort_of(Term t) { return mk(Kind::Abort, {std::move(t)}); }
Term id_type(Term a, Term x, Term y) { return mk(Kind::Id, {std::move(a), std::move(x), std::move(y)}); }
Term refl() { return mk(Kind::Refl); }
Term later(std::string tick, std::string clock, Term a) {
  return mk(Kind::Later, {std::move(a)}, std::move(tick), std::move(clock));
}
Term later(std::string clock, Term a) { return later(kAnon, std::move(clock), std::move(a)); }
Term tick_lam(std::string tick, std::string clock, Term body) {
  return mk(Kind::TickLam, {std::move(body)}, std::move(tick), std::move(clock));
}
Term tick_app(Term t, std::string tick) { return mk(Kind::TickApp, {std::move(t)}, std::move(tick)); }
Term forall_clk(std::string clock, Term a) { return mk(Kind::Forall, {std::move(a)}, std::move(clock)); }
Term clock_lam(std::string clock, Term body) { return mk(Kind::ClockLam, {std::move(body)}, std::move(clock)); }
Term clock_app(Term t, std::string clock) { return mk(Kind::ClockApp, {std::move(t)}, std::move(clock)); }
Term fix(std::string clock) { return mk(Kind::Fix, {}, {}, std::move(clock)); }

namespace {
Term mk_delta(Kind k, ClockSet d, std::vector<Term> args = {}) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->delta = make_clock_set(std::move(d));
  n->args = std::move(args);
  return n;
}
}  // namespace

Term univ(ClockSet delta) { return mk_delta(Kind::Univ, std::move(delta)); }
Term prop_univ(ClockSet delta) { return mk_delta(Kind::PropUniv, std::move(delta)); }
Term el(ClockSet delta, Term t) { return mk_delta(Kind::El, std::move(delta), {std::move(t)}); }
Term pel(ClockSet delta, Term t) { return mk_delta(Kind::PEl, std::move(delta), {std::move(t)}); }
Term incl(ClockSet from, ClockSet to, Term t) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Incl;
  n->delta = make_clock_set(std::move(from));
  n->delta2 = make_clock_set(std::move(to));
  n->args = {std::move(t)};
  return n;
}
Term code_later(std::string tick, std::string clock, Term a) {
  return mk(Kind::CodeLater, {std::move(a)}, std::move(tick), std::move(clock));
}
Term code_forall(std::string clock, Term a) { return mk(Kind::CodeForall, {std::move(a)}, std::move(clock)); }
Term code_pi(std::string x, Term a, Term b) { return mk(Kind::CodePi, {std::move(a), std::move(b)}, std::move(x)); }
Term code_sigma(std::string x, Term a, Term b) {
  return mk(Kind::CodeSigma, {std::move(a), std::move(b)}, std::move(x));
}
Term code_sum(Term a, Term b) { return mk(Kind::CodeSum, {std::move(a), std::move(b)}); }
Term code_id(Term a, Term u, Term v) { return mk(Kind::CodeId, {std::move(a), std::move(u), std::move(v)}); }
Term code_unit() { return mk(Kind::CodeUnit); }
Term code_empty() { return mk(Kind::CodeEmpty); }
Term p_top() { return mk(Kind::PTop); }
Term p_bot() { return mk(Kind::PBot); }
Term p_and(Term p, Term q) { return mk(Kind::PAnd, {std::move(p), std::move(q)}); }
Term p_or(Term p, Term q) { return mk(Kind::POr, {std::move(p), std::move(q)}); }
Term p_exists(std::string x, Term a, Term p) { return mk(Kind::PExists, {std::move(a), std::move(p)}, std::move(x)); }
Term p_all(std::string x, Term a, Term p) { return mk(Kind::PAll, {std::move(a), std::move(p)}, std::move(x)); }
Term p_eq(Term a, Term u, Term v) { return mk(Kind::PEq, {std::move(a), std::move(u), std::move(v)}); }
Term tirr(Term t) { return mk(Kind::Tirr, {std::move(t)}); }
Term cirr(Term a) { return mk(Kind::Cirr, {std::move(a)}); }
Term force(std::string clock, Term a) { return mk(Kind::Force, {std::move(a)}, std::move(clock)); }

Term with_args(const Term& t, std::vector<Term> args) {
  auto n = std::make_shared<Node>(*t);
  n->args = std::move(args);
  return n;
}

BinderInfo binder_info(Kind k) {
  using S = BinderInfo::Sort;
  switch (k) {
    case Kind::Lam:
      return {S::Var, 1};
    case Kind::Pi:
    case Kind::Sigma:
    case Kind::CodePi:
    case Kind::CodeSigma:
    case Kind::PExists:
    case Kind::PAll:
      return {S::Var, 1};
    case Kind::Case:
      return {S::Var, 1, S::Var, 2};
    case Kind::Later:
    case Kind::TickLam:
    case Kind::CodeLater:
      return {S::Tick, 0};
    case Kind::Forall:
    case Kind::ClockLam:
    case Kind::CodeForall:
    case Kind::Force:
      return {S::Clock, 0};
    default:
      return {};
  }
}

std::set<std::string> FreeNames::all() const {
  std::set<std::string> out = vars;
  out.insert(clocks.begin(), clocks.end());
  out.insert(ticks.begin(), ticks.end());
  return out;
}

namespace {

// Names referenced (not bound) directly by a node, by sort.
void collect_refs(const Node& n, const std::function<void(const std::string&, BinderInfo::Sort)>& f) {
  using S = BinderInfo::Sort;
  switch (n.kind) {
    case Kind::Var: f(n.name, S::Var); break;
    case Kind::TickApp: f(n.name, S::Tick); break;
    case Kind::ClockApp: f(n.name, S::Clock); break;
    default: break;
  }
  if (!n.clock.empty()) f(n.clock, S::Clock);
  for (const auto& c : n.delta) f(c, S::Clock);
  for (const auto& c : n.delta2) f(c, S::Clock);
}

void free_rec(const Term& t, std::vector<std::string>& bound, FreeNames& out) {
  if (!t) return;
  auto is_bound = [&](const std::string& x) { return std::find(bound.begin(), bound.end(), x) != bound.end(); };
  collect_refs(*t, [&](const std::string& x, BinderInfo::Sort s) {
    if (is_bound(x)) return;
    switch (s) {
      case BinderInfo::Sort::Var: out.vars.insert(x); break;
      case BinderInfo::Sort::Tick: out.ticks.insert(x); break;
      case BinderInfo::Sort::Clock: out.clocks.insert(x); break;
      default: break;
    }
  });
  const BinderInfo b = binder_info(t->kind);
  for (int i = 0; i < static_cast<int>(t->args.size()); ++i) {
    std::size_t pushed = 0;
    if (b.first_scope == i) {
      bound.push_back(t->name);
      ++pushed;
    }
    if (b.second_scope == i) {
      bound.push_back(t->name2);
      ++pushed;
    }
    free_rec(t->args[i], bound, out);
    bound.resize(bound.size() - pushed);
  }
}

}  // namespace

FreeNames free_names(const Term& t) {
  FreeNames out;
  std::vector<std::string> bound;
  free_rec(t, bound, out);
  return out;
}

bool occurs_free(const std::string& name, const Term& t) { return free_names(t).contains(name); }

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  if (!avoid.count(base) && base != kAnon) return base;
  std::string stem = base == kAnon ? std::string("x") : base;
  while (!stem.empty() && std::isdigit(static_cast<unsigned char>(stem.back()))) stem.pop_back();
  if (stem.empty()) stem = "x";
  for (int i = 1;; ++i) {
    std::string cand = stem + std::to_string(i);
    if (!avoid.count(cand)) return cand;
  }
}

namespace {

std::string rename_ref(const std::string& x, const Subst& s) {
  auto it = s.find(x);
  if (it == s.end()) return x;
  if (const auto* n = std::get_if<std::string>(&it->second)) return *n;
  return x;
}

Term subst_rec(const Term& t, const Subst& s) {
  if (!t || s.empty()) return t;
  if (t->kind == Kind::Var) {
    auto it = s.find(t->name);
    if (it == s.end()) return t;
    if (const auto* u = std::get_if<Term>(&it->second)) return *u;
    return var(std::get<std::string>(it->second));
  }
  auto n = std::make_shared<Node>(*t);
  if (n->kind == Kind::TickApp || n->kind == Kind::ClockApp) n->name = rename_ref(n->name, s);
  if (!n->clock.empty()) n->clock = rename_ref(n->clock, s);
  if (!n->delta.empty()) {
    for (auto& c : n->delta) c = rename_ref(c, s);
    n->delta = make_clock_set(std::move(n->delta));
  }
  if (!n->delta2.empty()) {
    for (auto& c : n->delta2) c = rename_ref(c, s);
    n->delta2 = make_clock_set(std::move(n->delta2));
  }
  const BinderInfo b = binder_info(t->kind);
  if (b.first_scope < 0) {
    for (auto& a : n->args) a = subst_rec(a, s);
    return n;
  }
  std::set<std::string> range;
  for (const auto& [k, r] : s) {
    if (const auto* u = std::get_if<Term>(&r)) {
      auto f = free_names(*u).all();
      range.insert(f.begin(), f.end());
    } else {
      range.insert(std::get<std::string>(r));
    }
  }
  for (int i = 0; i < static_cast<int>(n->args.size()); ++i) {
    std::vector<std::string*> binders;
    if (b.first_scope == i) binders.push_back(&n->name);
    if (b.second_scope == i) binders.push_back(&n->name2);
    if (binders.empty()) {
      n->args[i] = subst_rec(n->args[i], s);
      continue;
    }
    Subst inner = s;
    for (auto* x : binders) inner.erase(*x);
    if (inner.empty()) continue;
    for (auto* x : binders) {
      if (*x == kAnon || !range.count(*x)) continue;
      std::set<std::string> avoid = range;
      auto body_free = free_names(n->args[i]).all();
      avoid.insert(body_free.begin(), body_free.end());
      for (const auto& [k, r] : inner) avoid.insert(k);
      std::string y = fresh_name(*x, avoid);
      inner[*x] = y;
      *x = y;
    }
    n->args[i] = subst_rec(n->args[i], inner);
  }
  return n;
}

}  // namespace

Term apply_subst(const Term& t, const Subst& s) { return subst_rec(t, s); }

Term subst(const Term& t, const std::string& x, const Term& u) { return subst_rec(t, Subst{{x, u}}); }

Term subst_tick(const Term& t, const std::string& from, const std::string& to) {
  if (from == to) return t;
  return subst_rec(t, Subst{{from, to}});
}

Term subst_clock(const Term& t, const std::string& from, const std::string& to) {
  if (from == to) return t;
  return subst_rec(t, Subst{{from, to}});
}

Term rename(const Term& t, const std::string& from, const std::string& to) {
  if (from == to) return t;
  return subst_rec(t, Subst{{from, to}});
}

namespace {

struct AlphaEnv {
  std::map<std::string, std::vector<int>> left, right;
  int depth = 0;

  std::string key(const std::map<std::string, std::vector<int>>& env, const std::string& x) const {
    auto it = env.find(x);
    if (it == env.end() || it->second.empty()) return "f:" + x;
    return "b:" + std::to_string(it->second.back());
  }
};

bool alpha_rec(const Term& a, const Term& b, AlphaEnv& env) {
  if (!a || !b) return !a && !b;
  if (a->kind != b->kind) return false;
  if (a->args.size() != b->args.size()) return false;
  if (a->delta.size() != b->delta.size() || a->delta2.size() != b->delta2.size()) return false;
  const BinderInfo info = binder_info(a->kind);
  auto ref_eq = [&](const std::string& x, const std::string& y) {
    return env.key(env.left, x) == env.key(env.right, y);
  };
  switch (a->kind) {
    case Kind::Var:
    case Kind::TickApp:
    case Kind::ClockApp:
      if (!ref_eq(a->name, b->name)) return false;
      break;
    default:
      break;
  }
  if (a->clock.empty() != b->clock.empty()) return false;
  if (!a->clock.empty() && !ref_eq(a->clock, b->clock)) return false;
  auto set_eq = [&](const ClockSet& x, const ClockSet& y) {
    std::vector<std::string> kx, ky;
    for (const auto& c : x) kx.push_back(env.key(env.left, c));
    for (const auto& c : y) ky.push_back(env.key(env.right, c));
    std::sort(kx.begin(), kx.end());
    std::sort(ky.begin(), ky.end());
    return kx == ky;
  };
  if (!set_eq(a->delta, b->delta) || !set_eq(a->delta2, b->delta2)) return false;
  for (int i = 0; i < static_cast<int>(a->args.size()); ++i) {
    std::vector<std::pair<std::string, std::string>> pushed;
    if (info.first_scope == i) pushed.emplace_back(a->name, b->name);
    if (info.second_scope == i) pushed.emplace_back(a->name2, b->name2);
    for (const auto& [x, y] : pushed) {
      env.left[x].push_back(env.depth);
      env.right[y].push_back(env.depth);
      ++env.depth;
    }
    const bool ok = alpha_rec(a->args[i], b->args[i], env);
    for (const auto& [x, y] : pushed) {
      env.left[x].pop_back();
      env.right[y].pop_back();
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace

bool alpha_eq(const Term& a, const Term& b) {
  if (a == b) return true;
  AlphaEnv env;
  return alpha_rec(a, b, env);
}

std::size_t term_size(const Term& t) {
  if (!t) return 0;
  std::size_t n = 1;
  for (const auto& a : t->args) n += term_size(a);
  return n;
}

}  // namespace clott::syntax
