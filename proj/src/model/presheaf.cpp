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

#include "clott/model/presheaf.hpp"

#include "clott/core/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace clott::model {

const Value& FinPresheaf::act(std::size_t mor, const Value& x) const {
  const TimeMor& m = cat->morphisms()[mor];
  long i = index_of(fibers[m.src], x);
  if (i < 0) throw std::logic_error("element " + x.str() + " is not in the fiber at " + cat->describe(m.src));
  return fibers[m.tgt][action[mor][static_cast<std::size_t>(i)]];
}

std::vector<std::size_t> FinPresheaf::sizes() const {
  std::vector<std::size_t> out;
  for (const ValueSet& f : fibers) out.push_back(f.size());
  return out;
}

bool FinPresheaf::is_subsingleton() const {
  return std::all_of(fibers.begin(), fibers.end(), [](const ValueSet& f) { return f.size() <= 1; });
}

FinPresheaf build_presheaf(CategoryPtr cat, const FiberFn& fiber, const ActionFn& act) {
  FinPresheaf x;
  x.cat = cat;
  x.fibers.resize(cat->objects().size());
  for (std::size_t o = 0; o < x.fibers.size(); ++o) {
    x.fibers[o] = fiber(o);
    normalize(x.fibers[o]);
  }
  x.action.resize(cat->morphisms().size());
  for (std::size_t m = 0; m < x.action.size(); ++m) {
    const TimeMor& mor = cat->morphisms()[m];
    const ValueSet& src = x.fibers[mor.src];
    const ValueSet& tgt = x.fibers[mor.tgt];
    auto& table = x.action[m];
    table.reserve(src.size());
    for (const Value& v : src) {
      Value img = act(m, v);
      long i = index_of(tgt, img);
      if (i < 0)
        throw std::invalid_argument("action of " + cat->describe_morphism(m) + " sends " + v.str() + " to " +
                                    img.str() + ", outside the target fiber");
      table.push_back(static_cast<std::uint32_t>(i));
    }
  }
  return x;
}

FinPresheaf constant(CategoryPtr cat, ValueSet c) {
  normalize(c);
  return build_presheaf(cat, [&](std::size_t) { return c; }, [](std::size_t, const Value& v) { return v; });
}

FinPresheaf terminal(CategoryPtr cat) { return constant(cat, {Value::unit()}); }
FinPresheaf empty(CategoryPtr cat) { return constant(cat, {}); }

FinPresheaf clocks(CategoryPtr cat) {
  const Category& C = *cat;
  return build_presheaf(
      cat,
      [&](std::size_t o) {
        ValueSet out;
        for (int c = 0; c < C.pool(); ++c)
          if (C.objects()[o].has(c)) out.push_back(Value::symbol(C.clock_name(c)));
        return out;
      },
      [&](std::size_t m, const Value& v) {
        int c = std::stoi(v.name().substr(1));
        return Value::symbol(C.clock_name(C.morphisms()[m].sigma[c]));
      });
}

namespace {

void same_category(const FinPresheaf& a, const FinPresheaf& b) {
  if (a.cat != b.cat) throw std::invalid_argument("presheaves live on different categories");
}

}  // namespace

FinPresheaf product(const FinPresheaf& a, const FinPresheaf& b) {
  same_category(a, b);
  return build_presheaf(
      a.cat,
      [&](std::size_t o) {
        ValueSet out;
        for (const Value& x : a.fiber(o))
          for (const Value& y : b.fiber(o)) out.push_back(Value::tuple({x, y}));
        return out;
      },
      [&](std::size_t m, const Value& v) { return Value::tuple({a.act(m, v.item(0)), b.act(m, v.item(1))}); });
}

FinPresheaf sum(const FinPresheaf& a, const FinPresheaf& b) {
  same_category(a, b);
  return build_presheaf(
      a.cat,
      [&](std::size_t o) {
        ValueSet out;
        for (const Value& x : a.fiber(o)) out.push_back(Value::inl(x));
        for (const Value& y : b.fiber(o)) out.push_back(Value::inr(y));
        return out;
      },
      [&](std::size_t m, const Value& v) {
        return v.tag() == Value::Tag::Inl ? Value::inl(a.act(m, v.item(0))) : Value::inr(b.act(m, v.item(0)));
      });
}

FinPresheaf squash(const FinPresheaf& a) {
  return build_presheaf(
      a.cat, [&](std::size_t o) { return a.fiber(o).empty() ? ValueSet{} : ValueSet{Value::unit()}; },
      [](std::size_t, const Value& v) { return v; });
}

FinPresheaf apply_functor(const coalgebra::Functor& f, const FinPresheaf& a) {
  return build_presheaf(
      a.cat, [&](std::size_t o) { return coalgebra::functor_eval(f, a.fiber(o)); },
      [&](std::size_t m, const Value& v) {
        return coalgebra::functor_map(f, [&](const Value& x) { return a.act(m, x); }, v);
      });
}

FinPresheaf exponential(const FinPresheaf& a, const FinPresheaf& b, std::size_t budget) {
  same_category(a, b);
  const Category& C = *a.cat;
  // variables of the fiber at c: pairs (f : c -> d, x in a(d)), laid out by out(c)
  auto offsets = [&](std::size_t c) {
    std::vector<std::size_t> off{0};
    for (std::size_t f : C.out(c)) off.push_back(off.back() + a.fiber(C.morphisms()[f].tgt).size());
    return off;
  };
  std::vector<std::vector<std::size_t>> offs(C.objects().size());
  for (std::size_t c = 0; c < offs.size(); ++c) offs[c] = offsets(c);

  auto fiber = [&](std::size_t c) {
    const auto& outs = C.out(c);
    const auto& off = offs[c];
    std::size_t nvars = off.back();
    std::vector<std::pair<std::size_t, std::size_t>> var(nvars);  // (position in out, index in a(d))
    for (std::size_t p = 0; p < outs.size(); ++p)
      for (std::size_t i = off[p]; i < off[p + 1]; ++i) var[i] = {p, i - off[p]};

    ValueSet out;
    std::vector<int> assign(nvars, -1);
    auto propagate = [&](std::vector<int>& as, std::size_t v0) {
      std::vector<std::size_t> queue{v0};
      while (!queue.empty()) {
        std::size_t v = queue.back();
        queue.pop_back();
        auto [p, ai] = var[v];
        std::size_t f = outs[p];
        std::size_t d = C.morphisms()[f].tgt;
        for (std::size_t g : C.out(d)) {
          std::size_t gf = C.compose(f, g);
          std::size_t w = off[C.out_position(gf)] + a.act_index(g, ai);
          int val = static_cast<int>(b.act_index(g, static_cast<std::size_t>(as[v])));
          if (as[w] < 0) {
            as[w] = val;
            queue.push_back(w);
          } else if (as[w] != val) {
            return false;
          }
        }
      }
      return true;
    };
    std::function<void(std::size_t, std::vector<int>&)> search = [&](std::size_t v, std::vector<int>& as) {
      while (v < nvars && as[v] >= 0) ++v;
      if (v == nvars) {
        std::vector<Value> items;
        items.reserve(nvars);
        for (std::size_t i = 0; i < nvars; ++i) {
          std::size_t d = C.morphisms()[outs[var[i].first]].tgt;
          items.push_back(b.fiber(d)[static_cast<std::size_t>(as[i])]);
        }
        out.push_back(Value::tuple(std::move(items)));
        if (out.size() > budget) throw BudgetExceeded("exponential fiber exceeds " + std::to_string(budget));
        return;
      }
      std::size_t d = C.morphisms()[outs[var[v].first]].tgt;
      for (std::size_t bi = 0; bi < b.fiber(d).size(); ++bi) {
        std::vector<int> next = as;
        next[v] = static_cast<int>(bi);
        if (propagate(next, v)) search(v + 1, next);
      }
    };
    search(0, assign);
    return out;
  };
  auto act = [&](std::size_t h, const Value& phi) {
    const TimeMor& hm = C.morphisms()[h];
    std::size_t c2 = hm.tgt;
    const auto& outs2 = C.out(c2);
    std::vector<Value> items;
    for (std::size_t p = 0; p < outs2.size(); ++p) {
      std::size_t fh = C.compose(h, outs2[p]);
      std::size_t base = offs[hm.src][C.out_position(fh)];
      std::size_t n = a.fiber(C.morphisms()[outs2[p]].tgt).size();
      for (std::size_t i = 0; i < n; ++i) items.push_back(phi.item(base + i));
    }
    return Value::tuple(std::move(items));
  };
  return build_presheaf(a.cat, fiber, act);
}

std::size_t restriction(const Category& cat, std::size_t obj, int clock, int stage) {
  TimeObj o = cat.objects()[obj];
  if (stage > o.theta[clock]) throw std::logic_error("restriction to a later stage");
  o.theta[clock] = stage;
  auto tgt = cat.find_object(o);
  std::vector<int> sigma(cat.pool(), -1);
  for (int c = 0; c < cat.pool(); ++c)
    if (o.has(c)) sigma[c] = c;
  auto m = tgt ? cat.find_morphism(obj, *tgt, sigma) : std::nullopt;
  if (!m) throw std::logic_error("restriction morphism missing");
  return *m;
}

namespace {

std::size_t at_stage(const Category& cat, std::size_t obj, int clock, int stage) {
  TimeObj o = cat.objects()[obj];
  o.theta[clock] = stage;
  auto idx = cat.find_object(o);
  if (!idx) throw std::logic_error("stage object missing");
  return *idx;
}

}  // namespace

Value next_element(const FinPresheaf& x, std::size_t obj, const Value& v) {
  const Category& C = *x.cat;
  const TimeObj& o = C.objects()[obj];
  std::vector<Value> items;
  for (int b = 0; b < o.theta[o.lambda]; ++b) items.push_back(x.act(restriction(C, obj, o.lambda, b), v));
  return Value::tuple(std::move(items));
}

FinPresheaf later(const FinPresheaf& x) {
  if (x.cat->base() != Base::Clock) throw std::invalid_argument("later needs a presheaf over the clock slice");
  const Category& C = *x.cat;
  auto fiber = [&](std::size_t obj) {
    const TimeObj& o = C.objects()[obj];
    int k = o.theta[o.lambda];
    if (k == 0) return ValueSet{Value::tuple({})};
    std::size_t top = at_stage(C, obj, o.lambda, k - 1);
    ValueSet out;
    for (const Value& a : x.fiber(top)) {
      std::vector<Value> fam;
      for (int b = 0; b < k; ++b) fam.push_back(x.act(restriction(C, top, o.lambda, b), a));
      out.push_back(Value::tuple(std::move(fam)));
    }
    return out;
  };
  auto act = [&](std::size_t m, const Value& v) {
    const TimeMor& mor = C.morphisms()[m];
    const TimeObj& t = C.objects()[mor.tgt];
    const TimeObj& s = C.objects()[mor.src];
    int k2 = t.theta[t.lambda];
    std::vector<Value> fam;
    for (int b = 0; b < k2; ++b) {
      std::size_t sb = at_stage(C, mor.src, s.lambda, b), tb = at_stage(C, mor.tgt, t.lambda, b);
      auto mb = C.find_morphism(sb, tb, mor.sigma);
      if (!mb) throw std::logic_error("stage morphism missing");
      fam.push_back(x.act(*mb, v.item(static_cast<std::size_t>(b))));
    }
    return Value::tuple(std::move(fam));
  };
  return build_presheaf(x.cat, fiber, act);
}

FinPresheaf forall_clk(const FinPresheaf& x, CategoryPtr target) {
  if (x.cat->base() != Base::Clock || target->base() != Base::Time)
    throw std::invalid_argument("clock quantification goes from the clock slice to the time category");
  const Category& S = *x.cat;
  const Category& T = *target;
  const int N = S.bound();
  auto stage_obj = [&](std::size_t tobj, int alpha) {
    TimeObj o = T.objects()[tobj];
    int l = fresh_clock(o, S.pool());
    if (l < 0) throw FreshClockExhausted("no fresh clock for " + T.describe(tobj));
    o.clocks |= 1u << l;
    o.theta[l] = alpha;
    o.lambda = l;
    auto idx = S.find_object(o);
    if (!idx) throw FreshClockExhausted("object " + T.describe(tobj) + " plus a fresh clock exceeds the pool");
    return std::make_pair(*idx, l);
  };
  auto fiber = [&](std::size_t tobj) {
    auto [top, l] = stage_obj(tobj, N - 1);
    ValueSet out;
    for (const Value& a : x.fiber(top)) {
      std::vector<Value> fam;
      for (int al = 0; al < N; ++al) fam.push_back(x.act(restriction(S, top, l, al), a));
      out.push_back(Value::tuple(std::move(fam)));
    }
    return out;
  };
  auto act = [&](std::size_t m, const Value& v) {
    const TimeMor& mor = T.morphisms()[m];
    std::vector<Value> fam;
    for (int al = 0; al < N; ++al) {
      auto [s, l] = stage_obj(mor.src, al);
      auto [t, l2] = stage_obj(mor.tgt, al);
      std::vector<int> sigma = mor.sigma;
      sigma[l] = l2;
      auto mb = S.find_morphism(s, t, sigma);
      if (!mb) throw std::logic_error("extended morphism missing");
      fam.push_back(x.act(*mb, v.item(static_cast<std::size_t>(al))));
    }
    return Value::tuple(std::move(fam));
  };
  return build_presheaf(target, fiber, act);
}

FinPresheaf reindex(const FinPresheaf& x, CategoryPtr slice) {
  if (x.cat->base() != Base::Time || slice->base() != Base::Clock)
    throw std::invalid_argument("reindexing goes from the time category to the clock slice");
  const Category& T = *x.cat;
  const Category& S = *slice;
  auto proj = [&](std::size_t obj) {
    TimeObj o = S.objects()[obj];
    o.lambda = -1;
    auto idx = T.find_object(o);
    if (!idx) throw std::invalid_argument("reindexing needs a time category with capacity " + std::to_string(S.cap()));
    return *idx;
  };
  return build_presheaf(
      slice, [&](std::size_t obj) { return x.fiber(proj(obj)); },
      [&](std::size_t m, const Value& v) {
        const TimeMor& mor = S.morphisms()[m];
        auto tm = T.find_morphism(proj(mor.src), proj(mor.tgt), mor.sigma);
        return x.act(*tm, v);
      });
}

FinPresheaf guarded_fixpoint(const coalgebra::Functor& f, CategoryPtr slice) {
  FinPresheaf x = terminal(slice);
  for (int i = 0; i <= slice->bound() + 2; ++i) {
    FinPresheaf y = apply_functor(f, later(x));
    if (y.fibers == x.fibers && y.action == x.action) return y;
    x = std::move(y);
  }
  throw NotConverged("guarded fixed point of " + coalgebra::print(f) + " did not stabilise");
}

FinPresheaf stage_predicate(CategoryPtr slice, const std::function<bool(int)>& holds) {
  const Category& S = *slice;
  try {
    return build_presheaf(
        slice,
        [&](std::size_t obj) {
          const TimeObj& o = S.objects()[obj];
          return holds(o.theta[o.lambda]) ? ValueSet{Value::unit()} : ValueSet{};
        },
        [](std::size_t, const Value& v) { return v; });
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("stage predicate is not downward closed");
  }
}

std::optional<std::string> check_functoriality(const FinPresheaf& x) {
  const Category& C = *x.cat;
  for (std::size_t o = 0; o < C.objects().size(); ++o) {
    const auto& t = x.action[C.identity(o)];
    for (std::size_t i = 0; i < t.size(); ++i)
      if (t[i] != i) return "identity at " + C.describe(o) + " moves element " + std::to_string(i);
  }
  for (std::size_t f = 0; f < C.morphisms().size(); ++f) {
    const TimeMor& mf = C.morphisms()[f];
    for (std::size_t g : C.out(mf.tgt)) {
      std::size_t gf = C.compose(f, g);
      for (std::size_t i = 0; i < x.fibers[mf.src].size(); ++i)
        if (x.action[gf][i] != x.action[g][x.action[f][i]])
          return "composition fails for " + C.describe_morphism(f) + " then " + C.describe_morphism(g);
    }
  }
  return std::nullopt;
}

}  // namespace clott::model
