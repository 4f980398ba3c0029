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

#include <functional>

namespace clott::kernel {

using namespace syntax;

const char* to_string(Conv c) {
  switch (c) {
    case Conv::Equal: return "equal";
    case Conv::Apart: return "apart";
    case Conv::Unknown: return "unknown";
  }
  return "?";
}

Checker::Checker(Options opts) : opts_(opts) {}

void Checker::tick() {
  if (++steps_ > opts_.step_limit) throw StepLimitReached("step limit of " + std::to_string(opts_.step_limit) + " reached");
}

bool Checker::fix_blocked(const Term& t) {
  Term cur = t;
  for (;;) {
    switch (cur->kind) {
      case Kind::App:
        if (cur->args[0]->kind == Kind::Fix) return true;
        cur = cur->args[0];
        break;
      case Kind::Fst:
      case Kind::Snd:
      case Kind::Case:
      case Kind::TickApp:
      case Kind::ClockApp:
      case Kind::El:
      case Kind::PEl:
      case Kind::Incl:
      case Kind::Abort:
        cur = cur->args[0];
        break;
      default:
        return false;
    }
  }
}

namespace {

// Renames a bound clock away from the clocks of an annotation it is about to
// be merged with.
std::pair<std::string, Term> clock_binder_away(const std::string& k, const Term& body, const ClockSet& d1,
                                              const ClockSet& d2 = {}) {
  if (!clock_member(d1, k) && !clock_member(d2, k)) return {k, body};
  std::set<std::string> avoid = free_names(body).all();
  avoid.insert(d1.begin(), d1.end());
  avoid.insert(d2.begin(), d2.end());
  std::string z = fresh_name(k, avoid);
  return {z, rename(body, k, z)};
}

Term decode_el(const ClockSet& d, const Term& c) {
  const auto& a = c->args;
  switch (c->kind) {
    case Kind::CodeLater: return later(c->name, c->clock, el(d, a[0]));
    case Kind::CodeForall: {
      auto [k, body] = clock_binder_away(c->name, a[0], d);
      return forall_clk(k, el(clock_union(d, {k}), body));
    }
    case Kind::CodePi: return pi(c->name, el(d, a[0]), el(d, a[1]));
    case Kind::CodeSigma: return sigma(c->name, el(d, a[0]), el(d, a[1]));
    case Kind::CodeSum: return sum(el(d, a[0]), el(d, a[1]));
    case Kind::CodeId: return id_type(el(d, a[0]), a[1], a[2]);
    case Kind::CodeUnit: return unit_type();
    case Kind::CodeEmpty: return empty_type();
    default: return nullptr;
  }
}

Term decode_prf(const ClockSet& d, const Term& c) {
  const auto& a = c->args;
  switch (c->kind) {
    case Kind::PTop: return unit_type();
    case Kind::PBot: return empty_type();
    case Kind::PAnd: return product(pel(d, a[0]), pel(d, a[1]));
    case Kind::PAll: return pi(c->name, el(d, a[0]), pel(d, a[1]));
    case Kind::PEq: return id_type(el(d, a[0]), a[1], a[2]);
    case Kind::CodeLater: return later(c->name, c->clock, pel(d, a[0]));
    case Kind::CodeForall: {
      auto [k, body] = clock_binder_away(c->name, a[0], d);
      return forall_clk(k, pel(clock_union(d, {k}), body));
    }
    default: return nullptr;
  }
}

Term push_incl(const ClockSet& from, const ClockSet& to, const Term& c) {
  auto in = [&](const Term& x) { return incl(from, to, x); };
  const auto& a = c->args;
  switch (c->kind) {
    case Kind::CodeLater: return code_later(c->name, c->clock, in(a[0]));
    case Kind::CodeForall: {
      auto [k, body] = clock_binder_away(c->name, a[0], from, to);
      return code_forall(k, incl(clock_union(from, {k}), clock_union(to, {k}), body));
    }
    case Kind::CodePi: return code_pi(c->name, in(a[0]), in(a[1]));
    case Kind::CodeSigma: return code_sigma(c->name, in(a[0]), in(a[1]));
    case Kind::CodeSum: return code_sum(in(a[0]), in(a[1]));
    case Kind::CodeId: return code_id(in(a[0]), a[1], a[2]);
    case Kind::CodeUnit:
    case Kind::CodeEmpty:
    case Kind::PTop:
    case Kind::PBot:
      return c;
    case Kind::PAnd: return p_and(in(a[0]), in(a[1]));
    case Kind::POr: return p_or(in(a[0]), in(a[1]));
    case Kind::PExists: return p_exists(c->name, in(a[0]), in(a[1]));
    case Kind::PAll: return p_all(c->name, in(a[0]), in(a[1]));
    case Kind::PEq: return p_eq(in(a[0]), a[1], a[2]);
    default: return nullptr;
  }
}

Term unfold_fix(const Term& fix_node, const Term& f) {
  std::string a = fresh_name("a", free_names(f).all());
  return app(f, tick_lam(a, fix_node->clock, app(fix_node, f)));
}

}  // namespace

Term Checker::whnf(const Context& ctx, const Term& t0, Fuel* fuel) {
  Term t = t0;
  for (;;) {
    tick();
    const auto& a = t->args;
    switch (t->kind) {
      case Kind::Var: {
        const Entry* e = ctx.find(t->name);
        if (e && e->sort == Entry::Sort::Var && e->value) {
          t = e->value;
          continue;
        }
        return t;
      }
      case Kind::Ann:
        t = a[0];
        continue;
      case Kind::App: {
        Term h = whnf(ctx, a[0], fuel);
        if (h->kind == Kind::Lam) {
          t = subst(h->args[1], h->name, a[1]);
          continue;
        }
        if (h->kind == Kind::Fix && fuel && fuel->remaining > 0) {
          --fuel->remaining;
          t = unfold_fix(h, a[1]);
          continue;
        }
        return h == a[0] ? t : app(h, a[1]);
      }
      case Kind::Fst:
      case Kind::Snd: {
        Term p = whnf(ctx, a[0], fuel);
        if (p->kind == Kind::Pair) {
          t = p->args[t->kind == Kind::Fst ? 0 : 1];
          continue;
        }
        return p == a[0] ? t : with_args(t, {p});
      }
      case Kind::Case: {
        Term s = whnf(ctx, a[0], fuel);
        if (s->kind == Kind::Inl) {
          t = subst(a[1], t->name, s->args[0]);
          continue;
        }
        if (s->kind == Kind::Inr) {
          t = subst(a[2], t->name2, s->args[0]);
          continue;
        }
        return s == a[0] ? t : with_args(t, {s, a[1], a[2]});
      }
      case Kind::TickApp: {
        Term h = whnf(ctx, a[0], fuel);
        if (h->kind == Kind::TickLam) {
          t = subst_tick(h->args[0], h->name, t->name);
          continue;
        }
        return h == a[0] ? t : with_args(t, {h});
      }
      case Kind::ClockApp: {
        Term h = whnf(ctx, a[0], fuel);
        if (h->kind == Kind::ClockLam) {
          t = subst_clock(h->args[0], h->name, t->name);
          continue;
        }
        return h == a[0] ? t : with_args(t, {h});
      }
      case Kind::El:
      case Kind::PEl: {
        Term c = whnf(ctx, a[0], fuel);
        if (c->kind == Kind::Incl) {
          t = t->kind == Kind::El ? el(c->delta, c->args[0]) : pel(c->delta, c->args[0]);
          continue;
        }
        Term d = t->kind == Kind::El ? decode_el(t->delta, c) : decode_prf(t->delta, c);
        if (d) return d;
        return c == a[0] ? t : with_args(t, {c});
      }
      case Kind::Incl: {
        if (t->delta == t->delta2) {
          t = a[0];
          continue;
        }
        Term c = whnf(ctx, a[0], fuel);
        if (c->kind == Kind::Incl) {
          t = incl(c->delta, t->delta2, c->args[0]);
          continue;
        }
        if (Term p = push_incl(t->delta, t->delta2, c)) return p;
        return c == a[0] ? t : with_args(t, {c});
      }
      default:
        return t;
    }
  }
}

Term Checker::normalize(const Context& ctx, const Term& t, int fuel) {
  Fuel f{fuel};
  std::function<Term(const Term&, std::set<std::string>&)> rec = [&](const Term& u,
                                                                      std::set<std::string>& bound) -> Term {
    Term w = whnf(ctx, u, &f);
    const BinderInfo info = binder_info(w->kind);
    auto n = std::make_shared<Node>(*w);
    for (int i = 0; i < static_cast<int>(n->args.size()); ++i) {
      if (!n->args[i]) continue;
      Term child = n->args[i];
      std::vector<std::string> added;
      for (std::string* b : {info.first_scope == i ? &n->name : nullptr, info.second_scope == i ? &n->name2 : nullptr}) {
        if (!b || *b == kAnon) continue;
        std::set<std::string> avoid = ctx.names();
        avoid.insert(bound.begin(), bound.end());
        auto fb = free_names(child).all();
        fb.erase(*b);
        avoid.insert(fb.begin(), fb.end());
        std::string z = fresh_name(*b, avoid);
        if (z != *b) child = rename(child, *b, z);
        *b = z;
        if (bound.insert(z).second) added.push_back(z);
      }
      n->args[i] = rec(child, bound);
      for (const auto& z : added) bound.erase(z);
    }
    return n;
  };
  std::set<std::string> bound;
  return rec(t, bound);
}

}  // namespace clott::kernel
