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
#include "clott/kernel/checker.hpp"
#include "clott/kernel/corpus.hpp"
#include "clott/kernel/program.hpp"
#include "clott/syntax/parse.hpp"

#include <gtest/gtest.h>

#include <chrono>
#include <set>

using namespace clott::kernel;
using clott::syntax::parse_program;
using clott::syntax::parse_term;
using clott::syntax::Term;

namespace {

const char* kDelay =
    "clock k\nvar A : U{k}\n"
    "def D : U{k} := fix (fun (x : later k U{k}) -> A +^ later^ (a : k) . x [a])\n";

Context context_of(const std::string& text, Checker& ch) {
  ProgramResult r = run_program(text, ch);
  EXPECT_TRUE(r.ok()) << text;
  return r.context;
}

class Golden : public ::testing::TestWithParam<std::size_t> {};

}  // namespace

TEST_P(Golden, Case) {
  const GoldenCase& c = golden_corpus()[GetParam()];
  GoldenVerdict v = run_golden(c);
  EXPECT_TRUE(v.pass) << c.id << ": " << v.detail;
}

INSTANTIATE_TEST_SUITE_P(Corpus, Golden, ::testing::Range<std::size_t>(0, golden_corpus().size()),
                         [](const ::testing::TestParamInfo<std::size_t>& info) {
                           std::string id = golden_corpus()[info.param].id;
                           for (char& ch : id)
                             if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
                           return id;
                         });

TEST(Coverage, EveryRuleHasAcceptingAndRejectingCases) {
  std::map<std::string, std::pair<int, int>> seen;
  for (const GoldenCase& c : golden_corpus()) (c.accept ? seen[c.rule].first : seen[c.rule].second)++;
  for (const auto* rules : {&core_rules(), &universe_rules()})
    for (const std::string& r : *rules) {
      EXPECT_GT(seen[r].first, 0) << r;
      EXPECT_GT(seen[r].second, 0) << r;
    }
}

TEST(Coverage, CorpusRunsQuickly) {
  auto t0 = std::chrono::steady_clock::now();
  for (const GoldenCase& c : golden_corpus()) run_golden(c);
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), 5.0);
}

TEST(Context, Formation) {
  Checker ch;
  EXPECT_NO_THROW(ch.check_context(Context().extend_clock("k").extend_tick("a", "k")));
  EXPECT_THROW(ch.check_context(Context().extend_tick("a", "k")), clott::TypeError);
  Context c = Context().extend_clock("k");
  c = c.extend_var("x", parse_term("U{k}"));
  EXPECT_NO_THROW(ch.check_context(c));
  EXPECT_THROW(ch.check_context(Context().extend_clock("k").extend_clock("k")), clott::TypeError);
}

TEST(Typing, NextAndApplicativeAction) {
  Checker ch;
  Context ctx = context_of("clock k\nvar A : U{k}\nvar B : El{k}(A) -> U{k}", ch);
  EXPECT_NO_THROW(ch.check(ctx, parse_term("fun x -> tick a : k -> x"), parse_term("El{k}(A) -> later k El{k}(A)")));
  EXPECT_NO_THROW(ch.check(ctx, parse_term("fun f x -> tick a : k -> f [a] (x [a])"),
                           parse_term("later k ((x : El{k}(A)) -> El{k}(B x)) -> (y : later k El{k}(A)) -> "
                                      "later (a : k) . El{k}(B (y [a]))")));
  EXPECT_NO_THROW(ch.check(ctx, parse_term("fix"), parse_term("(later k El{k}(A) -> El{k}(A)) -> El{k}(A)")));
  EXPECT_THROW(ch.check(ctx, parse_term("later^ k A"), parse_term("U{}")), clott::TypeError);
}

TEST(Typing, ErrorsNameTheRule) {
  Checker ch;
  Context ctx = context_of("clock k\ntick a : k\nvar x : later k Unit", ch);
  try {
    ch.check(ctx, parse_term("x [a]"), parse_term("Unit"));
    FAIL();
  } catch (const clott::TypeError& e) {
    EXPECT_NE(std::string(e.what()).find("tick-app"), std::string::npos) << e.what();
  }
}

TEST(Convert, DelayUnfoldsWithinOneStep) {
  Checker ch;
  Context ctx = context_of(kDelay, ch);
  Term lhs = parse_term("D"), rhs = parse_term("A +^ later^ (a : k) . D");
  EXPECT_EQ(ch.convert(ctx, lhs, rhs, 1), Conv::Equal);
  EXPECT_LE(ch.last_unfoldings(), 1);
  EXPECT_EQ(ch.convert(ctx, lhs, rhs, 0), Conv::Unknown);
}

TEST(Convert, FuelOracle) {
  Checker ch;
  Context ctx = context_of(kDelay, ch);
  std::string rhs = "D";
  for (int depth = 1; depth <= 3; ++depth) {
    rhs = "A +^ later^ (a : k) . " + (depth == 1 ? rhs : "(" + rhs + ")");
    Term u = parse_term(rhs);
    int needed = -1;
    for (int fuel = 0; fuel <= 6 && needed < 0; ++fuel) {
      Conv c = ch.convert(ctx, parse_term("D"), u, fuel);
      EXPECT_NE(c, Conv::Apart);
      if (c == Conv::Equal) needed = fuel;
    }
    EXPECT_EQ(needed, depth) << rhs;
    EXPECT_EQ(ch.convert(ctx, parse_term("D"), u, depth - 1), Conv::Unknown);
  }
}

TEST(Convert, AlphaAndApart) {
  Checker ch;
  Context ctx = context_of("clock k\nvar a : U{k}", ch);
  EXPECT_EQ(ch.convert(ctx, parse_term("fun x -> x"), parse_term("fun y -> y")), Conv::Equal);
  EXPECT_EQ(ch.convert(ctx, parse_term("later^ k a"), parse_term("a")), Conv::Apart);
}

TEST(Convert, ReflexiveAndSymmetricOnCorpus) {
  for (const GoldenCase& c : golden_corpus()) {
    if (!c.accept) continue;
    Checker ch;
    ProgramResult r = run_program(c.program, ch);
    if (!r.ok()) continue;
    std::vector<Term> types;
    for (const auto& d : parse_program(c.program))
      if (d.type && d.kind != clott::syntax::Decl::Kind::Var) types.push_back(d.type);
    for (const Term& t : types) {
      for (int fuel : {0, 2}) EXPECT_EQ(ch.convert(r.context, t, t, fuel), Conv::Equal) << c.id;
      for (const Term& u : types)
        EXPECT_EQ(ch.convert(r.context, t, u, 2), ch.convert(r.context, u, t, 2)) << c.id;
    }
  }
}

TEST(Whnf, Examples) {
  Checker ch;
  Context ctx = context_of("var y : Unit\nclock k", ch);
  Term r = ch.whnf(ctx, parse_term("(fun x -> x) y"));
  EXPECT_EQ(clott::syntax::print(r), "y");
  Term el = ch.whnf(ctx, parse_term("El{}(forall-clk^ k . later^ k Unit^)"));
  EXPECT_EQ(el->kind, clott::syntax::Kind::Forall);
  Term f = parse_term("fix (fun (x : later k Unit) -> tt)");
  EXPECT_TRUE(Checker::fix_blocked(ch.whnf(ctx, f)));
  Fuel fuel{1};
  EXPECT_EQ(ch.whnf(ctx, f, &fuel)->kind, clott::syntax::Kind::Tt);
  EXPECT_EQ(fuel.remaining, 0);
  Term once = ch.whnf(ctx, parse_term("(fun x -> x) y"));
  EXPECT_EQ(clott::syntax::print(ch.whnf(ctx, once)), clott::syntax::print(once));
}

TEST(Properties, SubjectReduction) {
  std::size_t checked = 0;
  for (const GoldenCase& c : golden_corpus()) {
    if (!c.accept) continue;
    auto decls = parse_program(c.program);
    const auto& last = decls.back();
    if (last.kind != clott::syntax::Decl::Kind::Check || !last.type) continue;
    Checker ch;
    ProgramResult r = run_program(c.program, ch);
    ASSERT_TRUE(r.ok()) << c.id;
    Term w = ch.whnf(r.context, last.term);
    EXPECT_NO_THROW(ch.check(r.context, w, last.type)) << c.id << ": " << clott::syntax::print(w);
    ++checked;
  }
  EXPECT_GT(checked, 15u);
}

TEST(Properties, DeltaMonotonicity) {
  std::size_t checked = 0;
  for (const GoldenCase& c : golden_corpus()) {
    if (!c.accept) continue;
    auto decls = parse_program(c.program);
    const auto& last = decls.back();
    if (last.kind != clott::syntax::Decl::Kind::Check || !last.type) continue;
    if (last.type->kind != clott::syntax::Kind::Univ && last.type->kind != clott::syntax::Kind::PropUniv) continue;
    Checker ch;
    ProgramResult r = run_program(c.program, ch);
    Context ctx = r.context.extend_clock("m");
    auto bigger = clott::syntax::clock_union(last.type->delta, {"m"});
    Term code = clott::syntax::incl(last.type->delta, bigger, last.term);
    Term univ = last.type->kind == clott::syntax::Kind::Univ ? clott::syntax::univ(bigger)
                                                              : clott::syntax::prop_univ(bigger);
    EXPECT_NO_THROW(ch.check(ctx, code, univ)) << c.id;
    ++checked;
  }
  EXPECT_GT(checked, 5u);
}

TEST(Axioms, Registered) {
  std::set<std::string> names;
  for (const auto& a : axioms()) names.insert(a.name);
  EXPECT_EQ(names, (std::set<std::string>{"tirr", "cirr", "force"}));
}

TEST(Program, ExitOutcomes) {
  Checker ch;
  EXPECT_TRUE(run_program("clock k\ncheck tick a : k -> tt : later k Unit", ch).ok());
  EXPECT_TRUE(run_program("check y : Unit", ch).any_failed());
  Checker low(Options{0, 1'000'000});
  auto r = run_program(std::string(kDelay) + "conv D == A +^ later^ (a : k) . D : U{k}", low);
  EXPECT_TRUE(r.any_unknown());
  EXPECT_FALSE(r.any_failed());
}
