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

#include "clott/model/checks.hpp"

#include "clott/core/errors.hpp"

#include <set>
#include <sstream>

namespace clott::model {

std::string InvarianceFailure::describe(const Category& cat) const {
  std::ostringstream os;
  os << "adding " << cat.clock_name(fresh) << " at stage " << alpha << " to " << cat.describe(object) << " maps "
     << source_size << " element(s) to " << target_size << (injective ? "" : " non-injectively");
  return os.str();
}

InvarianceResult check_invariance(const FinPresheaf& x) {
  const Category& C = *x.cat;
  InvarianceResult r;
  for (std::size_t o = 0; o < C.objects().size(); ++o) {
    const TimeObj& obj = C.objects()[o];
    if (obj.size() >= C.cap()) continue;
    for (int c = 0; c < C.pool(); ++c) {
      if (obj.has(c)) continue;
      for (int al = 0; al < C.bound(); ++al) {
        TimeObj ext = obj;
        ext.clocks |= 1u << c;
        ext.theta[c] = al;
        auto t = C.find_object(ext);
        std::vector<int> sigma(C.pool(), -1);
        for (int e = 0; e < C.pool(); ++e)
          if (obj.has(e)) sigma[e] = e;
        auto m = t ? C.find_morphism(o, *t, sigma) : std::nullopt;
        if (!m) throw std::logic_error("clock introduction morphism missing");
        ++r.checked;
        const auto& table = x.action[*m];
        std::set<std::uint32_t> image(table.begin(), table.end());
        bool injective = image.size() == table.size();
        if (!injective || table.size() != x.fibers[*t].size()) {
          r.ok = false;
          r.failure = InvarianceFailure{o, c, al, table.size(), x.fibers[*t].size(), injective};
          return r;
        }
      }
    }
  }
  return r;
}

std::optional<std::string> check_natural_iso(const FinPresheaf& x, const FinPresheaf& y,
                                             const std::function<Value(std::size_t, const Value&)>& fn) {
  if (x.cat != y.cat) return "presheaves live on different categories";
  const Category& C = *x.cat;
  for (std::size_t o = 0; o < C.objects().size(); ++o) {
    if (x.fibers[o].size() != y.fibers[o].size())
      return "fibers at " + C.describe(o) + " have sizes " + std::to_string(x.fibers[o].size()) + " and " +
             std::to_string(y.fibers[o].size());
    std::set<Value> seen;
    for (const Value& v : x.fibers[o]) {
      Value img = fn(o, v);
      if (index_of(y.fibers[o], img) < 0) return "image of " + v.str() + " leaves the fiber at " + C.describe(o);
      if (!seen.insert(img).second) return "map is not injective at " + C.describe(o);
    }
  }
  for (std::size_t m = 0; m < C.morphisms().size(); ++m) {
    const TimeMor& mor = C.morphisms()[m];
    for (const Value& v : x.fibers[mor.src])
      if (fn(mor.tgt, x.act(m, v)) != y.act(m, fn(mor.src, v))) return "map is not natural at " + C.describe_morphism(m);
  }
  return std::nullopt;
}

std::optional<std::string> check_forall_sum(const FinPresheaf& a, const FinPresheaf& b, CategoryPtr target) {
  FinPresheaf lhs = sum(forall_clk(a, target), forall_clk(b, target));
  FinPresheaf rhs = forall_clk(sum(a, b), target);
  return check_natural_iso(lhs, rhs, [](std::size_t, const Value& v) {
    bool left = v.tag() == Value::Tag::Inl;
    std::vector<Value> fam;
    for (const Value& e : v.item(0).items()) fam.push_back(left ? Value::inl(e) : Value::inr(e));
    return Value::tuple(std::move(fam));
  });
}

std::optional<std::string> check_forall_product(const FinPresheaf& a, const FinPresheaf& b, CategoryPtr target) {
  FinPresheaf lhs = forall_clk(product(a, b), target);
  FinPresheaf rhs = product(forall_clk(a, target), forall_clk(b, target));
  return check_natural_iso(lhs, rhs, [](std::size_t, const Value& v) {
    std::vector<Value> first, second;
    for (const Value& e : v.items()) {
      first.push_back(e.item(0));
      second.push_back(e.item(1));
    }
    return Value::tuple({Value::tuple(std::move(first)), Value::tuple(std::move(second))});
  });
}

std::optional<std::string> check_forall_functor(const coalgebra::Functor& f, const FinPresheaf& a, CategoryPtr target) {
  FinPresheaf lhs = apply_functor(f, forall_clk(a, target));
  FinPresheaf rhs = forall_clk(apply_functor(f, a), target);
  const int N = a.cat->bound();
  return check_natural_iso(lhs, rhs, [&](std::size_t, const Value& v) {
    std::vector<Value> fam;
    for (int al = 0; al < N; ++al)
      fam.push_back(coalgebra::functor_map(f, [al](const Value& e) { return e.item(static_cast<std::size_t>(al)); }, v));
    return Value::tuple(std::move(fam));
  });
}

std::optional<std::string> check_clock_irrelevance(const FinPresheaf& a, CategoryPtr slice) {
  // a lives on the time category of the same capacity as slice; the
  // comparison is made on the time category one clock smaller.
  const Category& T1 = *a.cat;
  if (T1.base() != Base::Time || slice->base() != Base::Clock || T1.cap() != slice->cap())
    throw std::invalid_argument("clock irrelevance needs matching time and slice categories");
  auto T0 = std::make_shared<const Category>(Base::Time, T1.pool(), T1.bound(), T1.cap() - 1);
  FinPresheaf a0 = build_presheaf(
      T0, [&](std::size_t o) { return a.fiber(*T1.find_object(T0->objects()[o])); },
      [&](std::size_t m, const Value& v) {
        const TimeMor& mor = T0->morphisms()[m];
        auto m1 = T1.find_morphism(*T1.find_object(T0->objects()[mor.src]), *T1.find_object(T0->objects()[mor.tgt]),
                                   mor.sigma);
        return a.act(*m1, v);
      });
  FinPresheaf all = forall_clk(reindex(a, slice), T0);
  return check_natural_iso(a0, all, [&](std::size_t o, const Value& v) {
    const TimeObj& obj = T0->objects()[o];
    std::size_t src = *T1.find_object(obj);
    int l = fresh_clock(obj, T1.pool());
    std::vector<int> sigma(T1.pool(), -1);
    for (int c = 0; c < T1.pool(); ++c)
      if (obj.has(c)) sigma[c] = c;
    std::vector<Value> fam;
    for (int al = 0; al < T1.bound(); ++al) {
      TimeObj ext = obj;
      ext.clocks |= 1u << l;
      ext.theta[l] = al;
      auto m = T1.find_morphism(src, *T1.find_object(ext), sigma);
      fam.push_back(a.act(*m, v));
    }
    return Value::tuple(std::move(fam));
  });
}

ForceResult check_force(const FinPresheaf& a, CategoryPtr target) {
  const Category& S = *a.cat;
  const int N = S.bound();
  ForceResult r;
  FinPresheaf fa = forall_clk(a, target);
  FinPresheaf fla = forall_clk(later(a), target);
  auto stage_obj = [&](std::size_t tobj, int al) {
    TimeObj o = target->objects()[tobj];
    int l = fresh_clock(o, S.pool());
    o.clocks |= 1u << l;
    o.theta[l] = al;
    o.lambda = l;
    return *S.find_object(o);
  };
  auto mismatch = check_natural_iso(fa, fla, [&](std::size_t o, const Value& fam) {
    std::vector<Value> out;
    for (int al = 0; al < N; ++al)
      out.push_back(next_element(a, stage_obj(o, al), fam.item(static_cast<std::size_t>(al))));
    return Value::tuple(std::move(out));
  });
  r.iso = !mismatch;

  // the stage chain at a fresh clock over the empty clock set
  for (int al = 0; al < N; ++al) r.stage_sizes.push_back(a.fiber(stage_obj(0, al)).size());
  for (int al = 0; al + 1 < N; ++al) {
    std::size_t upper = stage_obj(0, al + 1);
    const auto& table = a.action[restriction(S, upper, S.objects()[upper].lambda, al)];
    std::set<std::uint32_t> img(table.begin(), table.end());
    bool bij = img.size() == table.size() && table.size() == a.fiber(stage_obj(0, al)).size();
    if (!bij && !r.first_failure_stage) r.first_failure_stage = al;
    if (al == N - 2) r.stabilized = bij;
  }
  r.truncation_artifact = !r.iso;
  std::ostringstream os;
  if (r.iso)
    os << "canonical map is a bijection; the stage chain is stable from stage " << N - 2;
  else
    os << "canonical map is not a bijection (" << *mismatch << "); the stage chain is still growing at stage "
       << N - 2 << ", which a limit-ordinal index would absorb";
  r.explanation = os.str();
  return r;
}

namespace {

FinPresheaf exists_pred(CategoryPtr slice, const std::vector<FinPresheaf>& preds) {
  return build_presheaf(
      slice,
      [&](std::size_t o) {
        for (const FinPresheaf& p : preds)
          if (!p.fiber(o).empty()) return ValueSet{Value::unit()};
        return ValueSet{};
      },
      [](std::size_t, const Value& v) { return v; });
}

}  // namespace

ExistsForallResult exists_forall_experiment(ModelContext& ctx, const ValueSet& X, const PredicateFamily& phi) {
  CategoryPtr T = ctx.category(Base::Time, ctx.pool() - 1);
  CategoryPtr S = ctx.category(Base::Clock, ctx.pool());
  ExistsForallResult r;
  std::vector<FinPresheaf> preds, alls;
  for (const Value& x : X) {
    preds.push_back(phi(S, x));
    if (!preds.back().is_subsingleton()) throw std::invalid_argument("predicate has a fiber with several elements");
    if (!check_invariance(preds.back()).ok) r.invariant = false;
    alls.push_back(forall_clk(preds.back(), T));
  }
  FinPresheaf rhs = forall_clk(exists_pred(S, preds), T);
  for (std::size_t o = 0; o < T->objects().size(); ++o) {
    ExistsForallRow row;
    row.object = o;
    row.rhs = !rhs.fiber(o).empty();
    for (std::size_t i = 0; i < X.size(); ++i)
      if (!alls[i].fiber(o).empty()) {
        row.lhs = true;
        row.min_uniform_witness = X[i];
        break;
      }
    if (row.lhs != row.rhs) r.commutes = false;
    r.rows.push_back(std::move(row));
  }
  return r;
}

UniqueExistsResult unique_exists_check(ModelContext& ctx, const ValueSet& X, const PredicateFamily& phi, int n) {
  CategoryPtr S = ctx.category(Base::Clock, ctx.pool());
  UniqueExistsResult r;
  std::vector<FinPresheaf> preds;
  for (const Value& x : X) preds.push_back(phi(S, x));
  for (std::size_t o = 0; o < S->objects().size() && r.hypothesis_holds; ++o) {
    const TimeObj& obj = S->objects()[o];
    for (std::size_t i = 0; i < X.size() && r.hypothesis_holds; ++i)
      for (std::size_t j = i + 1; j < X.size(); ++j)
        if (!preds[i].fiber(o).empty() && !preds[j].fiber(o).empty() && obj.theta[obj.lambda] >= n) {
          r.hypothesis_holds = false;
          r.detail = X[i].str() + " and " + X[j].str() + " both satisfy the predicate at " + S->describe(o);
          break;
        }
  }
  r.commutes = exists_forall_experiment(ctx, X, phi).commutes;
  return r;
}

std::pair<std::size_t, std::size_t> brute_force_category_size(int pool, int bound, bool slice) {
  struct Obj {
    std::vector<int> theta;
    int lambda;
  };
  std::vector<Obj> objs;
  std::vector<int> theta(pool, -1);
  std::function<void(int)> gen = [&](int i) {
    if (i == pool) {
      if (!slice) {
        objs.push_back({theta, -1});
      } else {
        for (int l = 0; l < pool; ++l)
          if (theta[l] >= 0) objs.push_back({theta, l});
      }
      return;
    }
    for (int v = -1; v < bound; ++v) {
      theta[i] = v;
      gen(i + 1);
    }
  };
  gen(0);
  std::size_t mors = 0;
  for (const Obj& a : objs)
    for (const Obj& b : objs) {
      std::vector<int> sigma(pool, -1);
      std::function<void(int)> rec = [&](int i) {
        if (i == pool) {
          if (slice && sigma[a.lambda] != b.lambda) return;
          ++mors;
          return;
        }
        if (a.theta[i] < 0) {
          sigma[i] = -1;
          rec(i + 1);
          return;
        }
        for (int t = 0; t < pool; ++t)
          if (b.theta[t] >= 0 && b.theta[t] <= a.theta[i]) {
            sigma[i] = t;
            rec(i + 1);
          }
      };
      rec(0);
    }
  return {objs.size(), mors};
}

}  // namespace clott::model
