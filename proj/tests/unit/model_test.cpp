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
#include "clott/model/checks.hpp"
#include "clott/model/type_expr.hpp"
#include "clott/theories/free_model.hpp"

#include <gtest/gtest.h>

using namespace clott;
using namespace clott::model;
using theories::standard_set;

namespace {

std::size_t stage_object(const Category& S, int k) {
  for (std::size_t o = 0; o < S.objects().size(); ++o) {
    const TimeObj& t = S.objects()[o];
    if (t.size() == 1 && t.theta[t.lambda] == k) return o;
  }
  throw std::logic_error("no stage object");
}

FinPresheaf delay_one(CategoryPtr S) { return guarded_fixpoint(coalgebra::parse_functor("sum(const{*}, id)"), S); }

FinPresheaf eval(ModelContext& ctx, const std::string& text, const std::string& clock = {}, const EvalEnv& env = {}) {
  return eval_type(ctx, parse_type_m(text), env, clock);
}

}  // namespace

TEST(Category, SingleClockBoundTwo) {
  Category T(Base::Time, 1, 2, 1);
  ASSERT_EQ(T.objects().size(), 3u);
  EXPECT_EQ(T.describe(0), "({})");
  EXPECT_EQ(T.morphisms().size(), 6u);
  for (std::size_t o = 0; o < T.objects().size(); ++o) {
    const TimeMor& id = T.morphisms()[T.identity(o)];
    EXPECT_EQ(id.src, o);
    EXPECT_EQ(id.tgt, o);
  }
  TimeObj one{1u, {1}, -1}, zero{1u, {0}, -1};
  auto a = T.find_object(one), b = T.find_object(zero);
  ASSERT_TRUE(a && b);
  EXPECT_TRUE(T.find_morphism(*a, *b, {0}));
  EXPECT_FALSE(T.find_morphism(*b, *a, {0}));
}

TEST(Category, MatchesDirectCount) {
  for (int pool = 1; pool <= 2; ++pool)
    for (int N = 2; N <= 4; ++N)
      for (Base base : {Base::Time, Base::Clock}) {
        Category C(base, pool, N, pool);
        auto brute = brute_force_category_size(pool, N, base == Base::Clock);
        EXPECT_EQ(C.objects().size(), brute.first) << pool << " " << N;
        EXPECT_EQ(C.morphisms().size(), brute.second) << pool << " " << N;
      }
}

TEST(Category, CompositionTableIsClosed) {
  Category C(Base::Clock, 2, 3, 2);
  for (std::size_t f = 0; f < C.morphisms().size(); ++f) {
    const TimeMor& m = C.morphisms()[f];
    EXPECT_EQ(C.compose(C.identity(m.src), f), f);
    EXPECT_EQ(C.compose(f, C.identity(m.tgt)), f);
    for (std::size_t g : C.out(m.tgt)) {
      std::size_t gf = C.compose(f, g);
      EXPECT_EQ(C.morphisms()[gf].src, m.src);
      EXPECT_EQ(C.morphisms()[gf].tgt, C.morphisms()[g].tgt);
      for (std::size_t h : C.out(C.morphisms()[g].tgt)) EXPECT_EQ(C.compose(gf, h), C.compose(f, C.compose(g, h)));
    }
  }
}

TEST(Later, StageZeroIsSingletonAndConstantsShift) {
  ModelContext ctx(2, 4);
  auto S = ctx.category(Base::Clock, 2);
  FinPresheaf L = later(constant(S, standard_set(3)));
  for (int k = 0; k < 4; ++k) EXPECT_EQ(L.fiber(stage_object(*S, k)).size(), k == 0 ? 1u : 3u);
  FinPresheaf D = delay_one(S);
  FinPresheaf LD = later(D);
  for (int k = 1; k < 4; ++k)
    EXPECT_EQ(LD.fiber(stage_object(*S, k)).size(), D.fiber(stage_object(*S, k - 1)).size());
  EXPECT_FALSE(check_functoriality(L));
  EXPECT_FALSE(check_functoriality(LD));
}

TEST(Forall, ConstantIsIrrelevantAndSumsDistribute) {
  ModelContext ctx(2, 4);
  auto S = ctx.category(Base::Clock, 2);
  auto T = ctx.category(Base::Time, 1);
  EXPECT_FALSE(check_clock_irrelevance(constant(ctx.time(), standard_set(3)), S));
  FinPresheaf D = delay_one(S), C = constant(S, standard_set(2)), L = later(C);
  EXPECT_FALSE(check_forall_sum(D, C, T));
  EXPECT_FALSE(check_forall_sum(L, D, T));
  EXPECT_FALSE(check_forall_product(D, C, T));
  EXPECT_FALSE(check_forall_product(L, D, T));
  FinPresheaf FL = forall_clk(L, T);
  EXPECT_FALSE(check_functoriality(FL));
  EXPECT_EQ(FL.fiber(0).size(), 2u);
}

TEST(Forall, CommutesWithFreeModelMonads) {
  ModelContext ctx(2, 3);
  auto S = ctx.category(Base::Clock, 2);
  auto T = ctx.category(Base::Time, 1);
  FinPresheaf D = delay_one(S);
  for (const char* f : {"pf(id)", "list(id)", "bag(id)", "df(id)", "trunc(id)"})
    EXPECT_FALSE(check_forall_functor(coalgebra::parse_functor(f), D, T)) << f;
}

TEST(Forall, NeedsAFreshClock) {
  ModelContext ctx(1, 3);
  auto S = ctx.category(Base::Clock, 1);
  EXPECT_THROW(forall_clk(constant(S, standard_set(1)), ctx.category(Base::Time, 1)), FreshClockExhausted);
}

TEST(Eval, Examples) {
  ModelContext ctx(2, 4);
  for (std::size_t s : eval(ctx, "prod(fin(2), fin(3))").sizes()) EXPECT_EQ(s, 6u);
  for (std::size_t s : eval(ctx, "arrow(fin(2), fin(3))").sizes()) EXPECT_EQ(s, 9u);
  FinPresheaf D = eval(ctx, "mu(k, sum(const{*}, id))", "k");
  for (int k = 0; k < 4; ++k) EXPECT_EQ(D.fiber(stage_object(*D.cat, k)).size(), static_cast<std::size_t>(k) + 2);
  for (std::size_t s : eval(ctx, "forall(k, mu(k, sum(const{*}, id)))").sizes()) EXPECT_EQ(s, 5u);
}

TEST(Eval, ExistsIsUnionOfFibers) {
  ModelContext ctx(2, 4);
  EvalEnv env;
  env.predicates["below"] = [](CategoryPtr s, const Value& x) {
    return stage_predicate(s, [x](int b) { return b < x.as_int(); });
  };
  FinPresheaf e = eval(ctx, "exists(x, fin(3), atom(below, x))", "k", env);
  FinPresheaf a = eval(ctx, "all(x, fin(3), atom(below, x))", "k", env);
  for (int k = 0; k < 4; ++k) {
    std::size_t o = stage_object(*e.cat, k);
    EXPECT_EQ(e.fiber(o).size(), k < 2 ? 1u : 0u);
    EXPECT_EQ(a.fiber(o).size(), 0u);
  }
  FinPresheaf lhs = eval(ctx, "forall(k, all(x, fin(3), atom(below, x)))", "", env);
  FinPresheaf rhs = eval(ctx, "all(x, fin(3), forall(k, atom(below, x)))", "", env);
  EXPECT_EQ(lhs.sizes(), rhs.sizes());
}

TEST(Eval, ParsePrintRoundTrip) {
  for (const char* t : {"prod(const{0,1}, const{a})", "forall(k, later(k, const{0,1}))", "mu(k, pf(prod(const{l}, id)))",
                        "exists(x, const{0,1}, and(eq(x, 1), top))", "apply(df(id), const{0,1})"})
    EXPECT_EQ(print(parse_type_m(t)), t);
  EXPECT_THROW(parse_type_m("prod(fin(2)"), ParseError);
  EXPECT_THROW(parse_type_m("frob(x)"), ParseError);
}

TEST(Eval, ScopeAndPoolErrors) {
  ModelContext ctx(2, 3);
  EXPECT_THROW(eval(ctx, "later(j, fin(1))", "k"), std::invalid_argument);
  EXPECT_THROW(eval(ctx, "later(k, fin(1))"), std::invalid_argument);
  EXPECT_NO_THROW(eval(ctx, "forall(k, forall(j, fin(1)))"));
  EXPECT_THROW(eval(ctx, "forall(k, forall(j, forall(i, fin(1))))"), FreshClockExhausted);
}

TEST(Invariance, ConstantsPassAndClkFails) {
  ModelContext ctx(2, 4);
  EXPECT_TRUE(check_invariance(constant(ctx.time(), standard_set(2))).ok);
  auto r = check_invariance(clocks(ctx.time()));
  ASSERT_FALSE(r.ok);
  ASSERT_TRUE(r.failure);
  EXPECT_FALSE(r.failure->describe(*ctx.time()).empty());
}

TEST(Invariance, EvaluatedTypesAreInvariantAndFunctorial) {
  ModelContext ctx(2, 4);
  const std::vector<std::pair<std::string, std::string>> corpus{
      {"prod(fin(2), fin(3))", ""},
      {"sum(fin(1), fin(2))", ""},
      {"arrow(fin(2), fin(2))", ""},
      {"apply(pf(id), fin(2))", ""},
      {"forall(k, later(k, fin(2)))", ""},
      {"forall(k, mu(k, sum(const{*}, id)))", ""},
      {"exists(x, fin(3), eq(x, 1))", ""},
      {"or(bot, top)", ""},
      {"mu(k, sum(const{*}, id))", "k"},
      {"mu(k, prod(const{a,b}, id))", "k"},
      {"later(k, mu(k, sum(const{*}, id)))", "k"},
      {"arrow(mu(k, sum(const{*}, id)), fin(2))", "k"},
      {"sum(later(k, fin(2)), clk)", "k"},
  };
  for (const auto& [t, k] : corpus) {
    FinPresheaf x = eval(ctx, t, k);
    EXPECT_FALSE(check_functoriality(x)) << t;
    auto inv = check_invariance(x);
    EXPECT_EQ(inv.ok, t.find("clk") == std::string::npos) << t;
  }
}

TEST(Force, Verdicts) {
  ModelContext ctx(2, 4);
  auto S = ctx.category(Base::Clock, 2);
  auto T = ctx.category(Base::Time, 1);
  ForceResult d = check_force(delay_one(S), T);
  EXPECT_FALSE(d.iso);
  EXPECT_TRUE(d.truncation_artifact);
  ASSERT_TRUE(d.first_failure_stage);
  EXPECT_FALSE(d.explanation.empty());
  ForceResult c = check_force(constant(S, standard_set(2)), T);
  EXPECT_TRUE(c.iso);
  EXPECT_FALSE(c.truncation_artifact);
  ForceResult s = check_force(later(constant(S, standard_set(2))), T);
  EXPECT_TRUE(s.iso);
  EXPECT_TRUE(s.stabilized);
}

TEST(ExistsForall, StageOrdinalFamilyNeedsWitnessNMinusOne) {
  for (int N = 3; N <= 8; ++N) {
    ModelContext ctx(2, N);
    auto r = exists_forall_experiment(ctx, standard_set(static_cast<std::size_t>(N)), [](CategoryPtr s, const Value& a) {
      return stage_predicate(s, [a](int b) { return b <= a.as_int(); });
    });
    ASSERT_FALSE(r.rows.empty());
    for (const auto& row : r.rows) {
      EXPECT_TRUE(row.rhs);
      ASSERT_TRUE(row.min_uniform_witness);
      EXPECT_EQ(row.min_uniform_witness->as_int(), N - 1);
    }
    EXPECT_TRUE(r.invariant);
  }
}

TEST(ExistsForall, DownwardClosedFamiliesCommute) {
  for (int N = 3; N <= 8; ++N) {
    ModelContext ctx(2, N);
    for (int t0 = 0; t0 <= N; ++t0)
      for (int t1 = 0; t1 <= N; ++t1) {
        std::vector<int> t{t0, t1};
        auto r = exists_forall_experiment(ctx, standard_set(2), [&t](CategoryPtr s, const Value& x) {
          int th = t[static_cast<std::size_t>(x.as_int())];
          return stage_predicate(s, [th](int b) { return b < th; });
        });
        EXPECT_TRUE(r.commutes) << N << " " << t0 << " " << t1;
      }
  }
}

TEST(ExistsForall, ConstantlyTrue) {
  ModelContext ctx(2, 4);
  auto r = exists_forall_experiment(ctx, standard_set(3), [](CategoryPtr s, const Value&) {
    return stage_predicate(s, [](int) { return true; });
  });
  EXPECT_TRUE(r.rows.front().lhs);
  EXPECT_EQ(*r.rows.front().min_uniform_witness, Value::integer(0));
}

TEST(ExistsForall, NonDownwardClosedIsRejected) {
  ModelContext ctx(2, 4);
  auto S = ctx.category(Base::Clock, 2);
  EXPECT_THROW(stage_predicate(S, [](int b) { return b >= 2; }), std::invalid_argument);
}

TEST(UniqueExists, Instances) {
  ModelContext ctx(2, 4);
  ValueSet X = standard_set(2);
  for (int n = 1; n < 4; ++n) {
    auto phi = [n](CategoryPtr s, const Value& y) {
      return stage_predicate(s, [n, y](int b) { return y.as_int() == 0 || b < n; });
    };
    auto r = unique_exists_check(ctx, X, phi, n);
    EXPECT_TRUE(r.hypothesis_holds) << r.detail;
    EXPECT_TRUE(r.commutes);
  }
  auto both = [](CategoryPtr s, const Value&) { return stage_predicate(s, [](int) { return true; }); };
  EXPECT_FALSE(unique_exists_check(ctx, X, both, 2).hypothesis_holds);
  auto none = [](CategoryPtr s, const Value&) { return stage_predicate(s, [](int) { return false; }); };
  auto e = unique_exists_check(ctx, X, none, 0);
  EXPECT_TRUE(e.hypothesis_holds);
  EXPECT_TRUE(e.commutes);
  auto rows = exists_forall_experiment(ctx, X, none).rows;
  EXPECT_FALSE(rows.front().lhs);
  EXPECT_FALSE(rows.front().rhs);
}

TEST(Presheaf, ConstructionsAreFunctorial) {
  ModelContext ctx(2, 3);
  auto S = ctx.category(Base::Clock, 2);
  FinPresheaf D = delay_one(S), C = constant(S, standard_set(2));
  EXPECT_FALSE(check_functoriality(product(D, C)));
  EXPECT_FALSE(check_functoriality(sum(D, C)));
  EXPECT_FALSE(check_functoriality(squash(D)));
  EXPECT_FALSE(check_functoriality(exponential(D, C)));
  EXPECT_FALSE(check_functoriality(apply_functor(coalgebra::parse_functor("list[2](id)"), D)));
  EXPECT_FALSE(check_functoriality(reindex(forall_clk(D, ctx.category(Base::Time, 1)), ctx.category(Base::Clock, 1))));
}

TEST(Presheaf, RejectsActionsLeavingTheFiber) {
  ModelContext ctx(1, 2);
  auto T = ctx.time();
  EXPECT_THROW(build_presheaf(
                   T, [](std::size_t o) { return o == 0 ? ValueSet{Value::integer(0)} : ValueSet{Value::integer(1)}; },
                   [](std::size_t, const Value& v) { return v; }),
               std::invalid_argument);
}
