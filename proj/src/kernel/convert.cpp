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

namespace clott::kernel {

using namespace syntax;

namespace {

Conv combine(Conv a, Conv b) {
  if (a == Conv::Apart || b == Conv::Apart) return Conv::Apart;
  if (a == Conv::Unknown || b == Conv::Unknown) return Conv::Unknown;
  return Conv::Equal;
}

std::string common_fresh(const Context& ctx, const std::string& base, const Term& a, const Term& b) {
  std::set<std::string> avoid = ctx.names();
  auto fa = free_names(a).all();
  auto fb = free_names(b).all();
  avoid.insert(fa.begin(), fa.end());
  avoid.insert(fb.begin(), fb.end());
  return fresh_name(base == kAnon ? "z" : base, avoid);
}

bool is_eta_kind(Kind k) {
  return k == Kind::Lam || k == Kind::TickLam || k == Kind::ClockLam || k == Kind::Pair;
}

}  // namespace

Conv Checker::convert(const Context& ctx, const Term& t, const Term& u) { return convert(ctx, t, u, opts_.fuel); }

Conv Checker::convert(const Context& ctx, const Term& t, const Term& u, int fuel) {
  Fuel f{fuel};
  last_unfoldings_ = 0;
  const long saved = steps_;
  steps_ = 0;
  Conv r;
  try {
    r = conv(ctx, t, u, f);
  } catch (const StepLimitReached&) {
    r = Conv::Unknown;
  }
  steps_ = saved;
  return r;
}

Conv Checker::conv(const Context& ctx, const Term& t, const Term& u, Fuel& fuel) {
  if (alpha_eq(t, u)) return Conv::Equal;
  Term a = whnf(ctx, t);
  Term b = whnf(ctx, u);
  for (;;) {
    Conv r = alpha_eq(a, b) ? Conv::Equal : structural(ctx, a, b, fuel);
    if (r == Conv::Equal) return r;
    const bool ba = fix_blocked(a);
    const bool bb = fix_blocked(b);
    if (!ba && !bb) return r;
    if (fuel.remaining <= 0) return Conv::Unknown;
    if (ba) {
      Fuel one{1};
      a = whnf(ctx, a, &one);
      --fuel.remaining;
      ++last_unfoldings_;
    }
    if (bb && fuel.remaining > 0) {
      Fuel one{1};
      b = whnf(ctx, b, &one);
      --fuel.remaining;
      ++last_unfoldings_;
    }
  }
}

Conv Checker::structural(const Context& ctx, const Term& a, const Term& b, Fuel& fuel) {
  // Eta for functions, tick and clock abstractions, and pairs.
  if (a->kind != b->kind && (is_eta_kind(a->kind) || is_eta_kind(b->kind))) {
    const bool left = is_eta_kind(a->kind);
    const Term& abs = left ? a : b;
    const Term& other = left ? b : a;
    auto side = [&](const Term& x, const Term& y) { return left ? conv(ctx, x, y, fuel) : conv(ctx, y, x, fuel); };
    switch (abs->kind) {
      case Kind::Lam: {
        std::string z = common_fresh(ctx, abs->name, abs, other);
        return side(rename(abs->args[1], abs->name, z), app(other, var(z)));
      }
      case Kind::TickLam: {
        std::string z = common_fresh(ctx, abs->name, abs, other);
        return side(rename(abs->args[0], abs->name, z), tick_app(other, z));
      }
      case Kind::ClockLam: {
        std::string z = common_fresh(ctx, abs->name, abs, other);
        return side(rename(abs->args[0], abs->name, z), clock_app(other, z));
      }
      case Kind::Pair: {
        Conv c = side(abs->args[0], fst(other));
        if (c == Conv::Apart) return c;
        return combine(c, side(abs->args[1], snd(other)));
      }
      default:
        break;
    }
  }
  if (a->kind != b->kind) return Conv::Apart;
  switch (a->kind) {
    case Kind::Var:
    case Kind::TickApp:
    case Kind::ClockApp:
      if (a->name != b->name) return Conv::Apart;
      break;
    case Kind::Fix:
      if (!a->clock.empty() && !b->clock.empty() && a->clock != b->clock) return Conv::Apart;
      return Conv::Equal;
    case Kind::Later:
    case Kind::CodeLater:
      if (a->clock != b->clock) return Conv::Apart;
      break;
    case Kind::Univ:
    case Kind::PropUniv:
      return a->delta == b->delta ? Conv::Equal : Conv::Apart;
    case Kind::Incl:
      if (a->delta != b->delta || a->delta2 != b->delta2) return Conv::Apart;
      break;
    default:
      break;
  }
  const BinderInfo info = binder_info(a->kind);
  Conv acc = Conv::Equal;
  for (int i = 0; i < static_cast<int>(a->args.size()); ++i) {
    if (a->kind == Kind::Lam && i == 0) continue;
    Term x = a->args[i];
    Term y = b->args[i];
    if (!x || !y) {
      if (x != y) return Conv::Apart;
      continue;
    }
    auto bind = [&](const std::string& na, const std::string& nb) {
      std::string z = common_fresh(ctx, na, x, y);
      if (na != kAnon) x = rename(x, na, z);
      if (nb != kAnon) y = rename(y, nb, z);
    };
    if (info.first_scope == i) bind(a->name, b->name);
    if (info.second_scope == i) bind(a->name2, b->name2);
    Conv c = conv(ctx, x, y, fuel);
    if (c == Conv::Apart) return c;
    acc = combine(acc, c);
  }
  return acc;
}

}  // namespace clott::kernel
