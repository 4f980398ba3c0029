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

#include "clott/core/errors.hpp"
#include "clott/theories/checks.hpp"
#include "clott/theories/free_model.hpp"
#include "clott/theories/theory.hpp"

#include <gtest/gtest.h>

using namespace clott;
using namespace clott::theories;

namespace {

std::string sample(const std::string& name) { return std::string(CLOTT_SAMPLES) + "/" + name; }

Value v(std::int64_t n) { return Value::integer(n); }

}  // namespace

TEST(Drop, BuiltinTheories) {
  EXPECT_FALSE(has_drop_equations(semilattice_theory()));
  EXPECT_FALSE(has_drop_equations(convex_theory()));
  EXPECT_FALSE(has_drop_equations(monoid_theory()));
  EXPECT_FALSE(has_drop_equations(commutative_monoid_theory()));
  EXPECT_TRUE(has_drop_equations(truncation_theory()));
  EXPECT_EQ(drop_equations(truncation_theory()), std::vector<std::size_t>{0});
}

TEST(Drop, Examples) {
  Theory t = parse_theory("op f/2\nop c/0\neq f(x, y) = x\neq f(x, x) = x\neq f(c, x) = f(x, c)\neq f(x, c) = c\n");
  EXPECT_EQ(drop_equations(t), (std::vector<std::size_t>{0, 3}));
  EXPECT_TRUE(is_drop_equation(t.equations[0]));
  EXPECT_FALSE(is_drop_equation(t.equations[1]));
  EXPECT_FALSE(is_drop_equation(t.equations[2]));
}

TEST(Theory, SamplesLoad) {
  for (const char* f : {"semilattice.thy", "convex.thy", "truncation.thy", "monoid.thy", "custom-semilattice.thy"}) {
    Theory t = load_theory(sample(f));
    EXPECT_FALSE(t.name.empty()) << f;
  }
  EXPECT_EQ(load_theory(sample("semilattice.thy")).builtin, Builtin::Semilattice);
  EXPECT_EQ(load_theory(sample("custom-semilattice.thy")).builtin, Builtin::Custom);
  EXPECT_EQ(load_theory(sample("convex.thy")).builtin, Builtin::Convex);
}

TEST(Theory, ParseErrors) {
  EXPECT_THROW(parse_theory("op f/2\neq f(x) = x\n"), ParseError);
  EXPECT_THROW(parse_theory("eq g(x) = x\n"), ParseError);
  EXPECT_THROW(parse_theory("op f/two\n"), ParseError);
  EXPECT_THROW(parse_theory("builtin lattice\n"), ParseError);
  EXPECT_THROW(load_theory(sample("missing.thy")), std::runtime_error);
}

TEST(FreeModel, Counts) {
  auto sl = make_free_model(semilattice_theory());
  for (std::size_t n = 0; n <= 4; ++n) EXPECT_EQ(sl->carrier(standard_set(n)).size(), std::size_t{1} << n);
  auto mon = make_free_model(monoid_theory());
  EXPECT_EQ(mon->carrier({}).size(), 1u);
  EXPECT_EQ(mon->carrier(standard_set(2)).size(), 1u + 2u + 4u + 8u);
  auto cmon = make_free_model(commutative_monoid_theory());
  EXPECT_EQ(cmon->carrier(standard_set(2)).size(), 1u + 2u + 3u + 4u);
  auto cx = make_free_model(convex_theory());
  EXPECT_EQ(cx->carrier(standard_set(2)).size(), 7u);
  EXPECT_EQ(cx->carrier({}).size(), 0u);
  auto tr = make_free_model(truncation_theory());
  EXPECT_EQ(tr->carrier({}).size(), 0u);
  EXPECT_EQ(tr->carrier(standard_set(3)).size(), 1u);
}

TEST(FreeModel, BudgetIsEnforced) {
  Budget b;
  b.max_elements = 100;
  auto sl = make_free_model(semilattice_theory(), b);
  EXPECT_THROW(sl->carrier(standard_set(8)), BudgetExceeded);
}

TEST(FreeModel, UnitMapAndMultiply) {
  auto sl = make_free_model(semilattice_theory());
  ValueSet Y = standard_set(2);
  Value t = Value::set({v(0), v(1), v(2)});
  Value img = sl->map([](const Value& x) { return v(x.as_int() % 2); }, t, Y);
  EXPECT_EQ(img, Value::set({v(0), v(1)}));
  EXPECT_EQ(sl->unit(v(1)), Value::set({v(1)}));
  Value tt = Value::set({Value::set({v(0)}), Value::set({v(1), v(2)})});
  EXPECT_EQ(sl->multiply(tt), t);
  auto cx = make_free_model(convex_theory());
  Value d = Value::dist({{v(0), Rational(1, 2)}, {v(1), Rational(1, 2)}});
  Value collapsed = cx->map([](const Value&) { return v(0); }, d, standard_set(1));
  EXPECT_EQ(collapsed, cx->unit(v(0)));
}

TEST(FreeModel, LawsHold) {
  for (Builtin b : {Builtin::Semilattice, Builtin::Convex, Builtin::Monoid, Builtin::CommutativeMonoid}) {
    auto m = make_free_model(builtin_theory(b));
    auto fl = check_functor_laws(*m, 3);
    EXPECT_TRUE(fl.ok) << to_string(b) << ": " << fl.failure;
    EXPECT_GT(fl.instances, 0u);
    auto ml = check_monad_laws(*m, 2, 100, 11);
    EXPECT_TRUE(ml.ok) << to_string(b) << ": " << ml.failure;
    auto sn = check_support_naturality(*m, 3);
    EXPECT_TRUE(sn.ok) << to_string(b) << ": " << sn.failure;
  }
}

TEST(Support, LeastSupportMatchesSearch) {
  for (Builtin b : {Builtin::Semilattice, Builtin::Convex, Builtin::Monoid, Builtin::CommutativeMonoid})
    for (std::size_t n = 0; n <= 3; ++n) {
      auto m = make_free_model(builtin_theory(b));
      ValueSet X = standard_set(n);
      for (const Value& t : m->carrier(X)) {
        auto brute = minimal_supports_brute(*m, t, X);
        ASSERT_EQ(brute.size(), 1u) << t.str();
        EXPECT_EQ(minimal_support(*m, t, X), brute.front()) << t.str();
        EXPECT_TRUE(m->contains(t, brute.front(), X));
      }
    }
}

TEST(Support, Examples) {
  auto sl = make_free_model(semilattice_theory());
  EXPECT_EQ(minimal_support(*sl, Value::set({v(0), v(2)}), standard_set(3)), (ValueSet{v(0), v(2)}));
  EXPECT_TRUE(minimal_support(*sl, Value::set({}), standard_set(3)).empty());
  auto mon = make_free_model(monoid_theory());
  EXPECT_EQ(minimal_support(*mon, Value::list({v(1), v(1)}), standard_set(2)), ValueSet{v(1)});
}

TEST(Support, TruncationHasNoLeastSupport) {
  auto tr = make_free_model(truncation_theory());
  ValueSet X = standard_set(2);
  Value t = tr->carrier(X).front();
  EXPECT_EQ(minimal_supports_brute(*tr, t, X).size(), 2u);
  EXPECT_FALSE(least_support(*tr, t, X));
  EXPECT_THROW(minimal_support(*tr, t, X), NoLeastSupport);
  EXPECT_EQ(minimal_support(*tr, tr->carrier(standard_set(1)).front(), standard_set(1)), ValueSet{v(0)});
}

TEST(Preservation, MonosAndPullbacks) {
  for (Builtin b : {Builtin::Semilattice, Builtin::Convex, Builtin::Monoid, Builtin::CommutativeMonoid}) {
    auto m = make_free_model(builtin_theory(b));
    auto mo = check_preserves_monos(*m, 3);
    EXPECT_TRUE(mo.ok && mo.exact) << to_string(b);
    EXPECT_GT(mo.injections_checked, 0u);
    auto pb = check_preserves_pullbacks_of_monos(*m, 3);
    EXPECT_TRUE(pb.ok && pb.exact) << to_string(b);
    EXPECT_GT(pb.squares_checked, 0u);
  }
  auto tr = make_free_model(truncation_theory());
  EXPECT_TRUE(check_preserves_monos(*tr, 3).ok);
  auto pb = check_preserves_pullbacks_of_monos(*tr, 3);
  ASSERT_FALSE(pb.ok);
  ASSERT_TRUE(pb.counterexample);
  EXPECT_TRUE(is_disjoint_points_square(*pb.counterexample));
  EXPECT_EQ(pb.counterexample->tp_size, 0u);
  EXPECT_EQ(pb.counterexample->pullback_size, 1u);
  EXPECT_FALSE(pb.counterexample->describe().empty());
}

TEST(Preservation, DisjointPointsSquareByHand) {
  auto tr = make_free_model(truncation_theory());
  PullbackSquare sq = pullback_square(*tr, 1, 2, FinMap{0}, {1});
  EXPECT_TRUE(is_disjoint_points_square(sq));
  EXPECT_FALSE(sq.surjective);
  auto sl = make_free_model(semilattice_theory());
  PullbackSquare ok = pullback_square(*sl, 1, 2, FinMap{0}, {1});
  EXPECT_TRUE(ok.injective && ok.surjective);
  EXPECT_EQ(ok.tp_size, ok.pullback_size);
}

TEST(Maps, Enumeration) {
  EXPECT_EQ(all_maps(2, 3).size(), 9u);
  EXPECT_EQ(all_maps(0, 0).size(), 1u);
  EXPECT_EQ(all_injections(2, 3).size(), 6u);
  EXPECT_TRUE(all_injections(3, 2).empty());
}

TEST(Custom, AgreesWithBuiltinSemilattice) {
  Theory t = load_theory(sample("custom-semilattice.thy"));
  CustomModel cm(t, Budget{});
  EXPECT_FALSE(cm.exact());
  for (std::size_t n = 0; n <= 3; ++n) EXPECT_EQ(cm.carrier(standard_set(n)).size(), std::size_t{1} << n) << n;
}

TEST(Custom, NeverWronglyApart) {
  Theory t = load_theory(sample("custom-semilattice.thy"));
  CustomModel cm(t, Budget{});
  ValueSet X = standard_set(2);
  auto var = [](const char* x) { return syntax::AlgTerm::variable(x); };
  auto join = [](syntax::AlgTerm a, syntax::AlgTerm b) { return syntax::AlgTerm::op("join", {std::move(a), std::move(b)}); };
  std::map<std::string, Value> env{{"x", cm.unit(v(0))}, {"y", cm.unit(v(1))}};
  Value a = to_value(join(var("x"), var("y")), env);
  Value b = to_value(join(var("y"), var("x")), env);
  Value c = to_value(var("x"), env);
  EXPECT_NE(cm.equal(a, b, X), Verdict::Apart);
  EXPECT_NE(cm.equal(a, c, X), Verdict::Equal);
  EXPECT_EQ(cm.equal(c, c, X), Verdict::Equal);
  auto sl = make_free_model(semilattice_theory());
  for (const Value& p : cm.carrier(X))
    for (const Value& q : cm.carrier(X)) {
      Verdict d = cm.equal(p, q, X);
      EXPECT_EQ(d == Verdict::Equal, p == q);
    }
  Value big = to_value(join(join(var("x"), var("y")), join(var("y"), var("x"))), env);
  EXPECT_NE(cm.equal(big, a, X), Verdict::Apart);
}

TEST(Custom, TermBudget) {
  Theory t = parse_theory("op f/1\nop e/0\neq f(f(x)) = x\n");
  Budget b;
  b.term_size = 3;
  CustomModel cm(t, b);
  ValueSet X = standard_set(1);
  EXPECT_EQ(cm.carrier(X).size(), 4u);
  EXPECT_EQ(cm.term_count(X), 6u);
}
