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
#include "clott/kernel/corpus.hpp"
#include "clott/syntax/alg_term.hpp"
#include "clott/syntax/parse.hpp"
#include "clott/syntax/term.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace clott::syntax;

namespace {

std::vector<Term> program_terms(const std::string& text) {
  std::vector<Term> out;
  for (const Decl& d : parse_program(text))
    for (const Term& t : {d.type, d.term, d.term2})
      if (t) out.push_back(t);
  return out;
}

/// Random well-scoped terms over a fixed pool of free names.
class TermGen {
 public:
  explicit TermGen(std::uint64_t seed) : rng_(seed) {}

  Term gen(int depth) {
    static const std::vector<std::string> vars{"x", "y", "z", "w"};
    static const std::vector<std::string> clocks{"k", "j"};
    static const std::vector<std::string> ticks{"a", "b"};
    int choice = depth <= 0 ? pick(3) : pick(12);
    switch (choice) {
      case 0: return var(vars[pick(4)]);
      case 1: return tt();
      case 2: return unit_type();
      case 3: return lam(vars[pick(4)], nullptr, gen(depth - 1));
      case 4: return app(gen(depth - 1), gen(depth - 1));
      case 5: return pair(gen(depth - 1), gen(depth - 1));
      case 6: return pi(vars[pick(4)], gen(depth - 1), gen(depth - 1));
      case 7: return tick_lam(ticks[pick(2)], clocks[pick(2)], gen(depth - 1));
      case 8: return tick_app(gen(depth - 1), ticks[pick(2)]);
      case 9: return later(ticks[pick(2)], clocks[pick(2)], gen(depth - 1));
      case 10: return clock_lam(clocks[pick(2)], gen(depth - 1));
      default: return case_of(gen(depth - 1), vars[pick(4)], gen(depth - 1), vars[pick(4)], gen(depth - 1));
    }
  }

 private:
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  std::mt19937_64 rng_;
};

}  // namespace

TEST(Parse, IdentityFunction) {
  EXPECT_TRUE(alpha_eq(parse_term("fun x -> x"), lam("x", nullptr, var("x"))));
}

TEST(Parse, NextTerm) {
  Term t = parse_term("fun x -> tick a : k -> x");
  EXPECT_TRUE(alpha_eq(t, lam("x", nullptr, tick_lam("a", "k", var("x")))));
}

TEST(Parse, FixConstantInTypedPosition) {
  auto decls = parse_program("clock k\nvar A : U{k}\ncheck fix : (later k El{k}(A) -> El{k}(A)) -> El{k}(A)");
  ASSERT_EQ(decls.size(), 3u);
  EXPECT_EQ(decls[2].term->kind, Kind::Fix);
  EXPECT_EQ(decls[2].type->kind, Kind::Pi);
}

TEST(Parse, ErrorsCarryPositions) {
  try {
    parse_term("fun -> x");
    FAIL() << "expected a parse error";
  } catch (const clott::ParseError& e) {
    EXPECT_NE(std::string(e.what()).find(':'), std::string::npos);
  }
  EXPECT_THROW(parse_term("(x"), clott::ParseError);
  EXPECT_THROW(parse_program("clock"), clott::ParseError);
}

TEST(Parse, PrinterRoundTripsOnCorpus) {
  std::size_t checked = 0;
  for (const auto& c : clott::kernel::golden_corpus())
    for (const Term& t : program_terms(c.program)) {
      Term back = parse_term(print(t));
      EXPECT_TRUE(alpha_eq(t, back)) << c.id << ": " << print(t);
      EXPECT_EQ(print(back), print(t)) << c.id;
      ++checked;
    }
  EXPECT_GT(checked, 100u);
}

TEST(Parse, PrinterRoundTripsOnRandomTerms) {
  TermGen g(11);
  for (int i = 0; i < 500; ++i) {
    Term t = g.gen(4);
    EXPECT_TRUE(alpha_eq(parse_term(print(t)), t)) << print(t);
  }
}

TEST(Subst, Examples) {
  EXPECT_TRUE(alpha_eq(subst(var("x"), "x", var("y")), var("y")));
  Term l = later("a", "k", var("A"));
  EXPECT_TRUE(alpha_eq(subst_clock(l, "k", "j"), later("a", "j", var("A"))));
  Term ta = tick_app(var("t"), "a");
  EXPECT_TRUE(alpha_eq(subst_tick(ta, "a", "b"), tick_app(var("t"), "b")));
}

TEST(Subst, CaptureAvoiding) {
  Term t = lam("y", nullptr, app(var("x"), var("y")));
  Term r = subst(t, "x", var("y"));
  ASSERT_EQ(r->kind, Kind::Lam);
  EXPECT_NE(r->name, "y");
  EXPECT_TRUE(occurs_free("y", r));
  Term c = clock_lam("k", later("a", "j", var("A")));
  Term rc = subst_clock(c, "j", "k");
  EXPECT_TRUE(free_names(rc).clocks.count("k"));
}

TEST(Subst, IdentityAndFreeNamesProperties) {
  TermGen g(3);
  for (int i = 0; i < 400; ++i) {
    Term t = g.gen(4), u = g.gen(2);
    EXPECT_TRUE(alpha_eq(subst(t, "x", var("x")), t)) << print(t);
    auto fv = free_names(subst(t, "x", u)).all();
    auto allowed = free_names(t).all();
    allowed.erase("x");
    for (const auto& n : free_names(u).all()) allowed.insert(n);
    EXPECT_TRUE(std::includes(allowed.begin(), allowed.end(), fv.begin(), fv.end())) << print(t);
  }
}

TEST(Subst, CompositionLaw) {
  TermGen g(5);
  for (int i = 0; i < 400; ++i) {
    Term t = g.gen(4), u = g.gen(2), v = g.gen(2);
    if (occurs_free("x", v)) continue;
    Term lhs = subst(subst(t, "x", u), "y", v);
    Term rhs = subst(subst(t, "y", v), "x", subst(u, "y", v));
    EXPECT_TRUE(alpha_eq(lhs, rhs)) << print(t) << " / " << print(u) << " / " << print(v);
  }
}

TEST(Subst, CommutesWithRenaming) {
  TermGen g(9);
  for (int i = 0; i < 300; ++i) {
    Term t = lam("y", nullptr, g.gen(3));
    Term renamed = lam("q", nullptr, rename(t->args[1], "y", "q"));
    if (occurs_free("q", t)) continue;
    ASSERT_TRUE(alpha_eq(t, renamed));
    Term u = g.gen(2);
    EXPECT_TRUE(alpha_eq(subst(t, "x", u), subst(renamed, "x", u)));
  }
}

TEST(FreeNames, Examples) {
  EXPECT_TRUE(free_names(lam("x", nullptr, var("x"))).all().empty());
  auto fn = free_names(parse_term("fun x -> tick a : k -> f [b] x"));
  EXPECT_EQ(fn.vars, (std::set<std::string>{"f"}));
  EXPECT_EQ(fn.ticks, (std::set<std::string>{"b"}));
  EXPECT_EQ(fn.clocks, (std::set<std::string>{"k"}));
  Signature sig{{"join", 2}, {"u", 1}};
  EXPECT_EQ(free_vars(parse_alg_term("join(x, y)", sig)), (std::set<std::string>{"x", "y"}));
  EXPECT_EQ(free_vars(parse_alg_term("join(x, u(x))", sig)), (std::set<std::string>{"x"}));
}

TEST(AlgTerm, ArityIsChecked) {
  Signature sig{{"join", 2}};
  EXPECT_THROW(parse_alg_term("join(x)", sig), clott::ParseError);
  EXPECT_EQ(print(parse_alg_term("join(x, join(y, z))", sig)), "join(x, join(y, z))");
}

TEST(Alpha, Examples) {
  EXPECT_TRUE(alpha_eq(parse_term("fun x -> x"), parse_term("fun y -> y")));
  EXPECT_TRUE(alpha_eq(clock_lam("k", later("k", var("A"))), clock_lam("j", later("j", var("A")))));
  EXPECT_FALSE(alpha_eq(tick_lam("a", "k", var("x")), tick_lam("b", "k", var("y"))));
  EXPECT_FALSE(alpha_eq(parse_term("fun x -> y"), parse_term("fun y -> y")));
}

TEST(Alpha, EquivalenceOnRandomTerms) {
  TermGen g(21);
  std::vector<Term> ts;
  for (int i = 0; i < 60; ++i) ts.push_back(g.gen(3));
  for (const Term& a : ts) {
    EXPECT_TRUE(alpha_eq(a, a));
    for (const Term& b : ts) EXPECT_EQ(alpha_eq(a, b), alpha_eq(b, a));
  }
}

TEST(ClockSets, Canonical) {
  EXPECT_EQ(make_clock_set({"k", "j", "k"}), (ClockSet{"j", "k"}));
  EXPECT_TRUE(clock_subset({"j"}, {"j", "k"}));
  EXPECT_FALSE(clock_subset({"i"}, {"j", "k"}));
}
