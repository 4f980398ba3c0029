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

#include "clott/coalgebra/coalgebra.hpp"
#include "clott/core/errors.hpp"
#include "clott/theories/free_model.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace clott;
using namespace clott::coalgebra;
using theories::standard_set;

namespace {

std::string sample(const std::string& name) { return std::string(CLOTT_SAMPLES) + "/" + name; }

Value sym(const char* s) { return Value::symbol(s); }

std::vector<std::size_t> identity_fn(std::size_t n) {
  std::vector<std::size_t> f(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = i;
  return f;
}

}  // namespace

TEST(Functor, EvalExamples) {
  EXPECT_EQ(functor_eval(parse_functor("id"), {sym("a"), sym("b")}).size(), 2u);
  EXPECT_EQ(functor_eval(parse_functor("pf(prod(const{l}, id))"), standard_set(2)).size(), 4u);
  EXPECT_EQ(functor_eval(parse_functor("sum(const{*}, id)"), {}).size(), 1u);
  EXPECT_EQ(functor_eval(parse_functor("prod(fin(2), id)"), standard_set(3)).size(), 6u);
  EXPECT_EQ(functor_eval(parse_functor("list[2](id)"), standard_set(2)).size(), 7u);
  EXPECT_EQ(functor_eval(parse_functor("df[2](id)"), standard_set(2)).size(), 3u);
  EXPECT_EQ(functor_eval(parse_functor("trunc(id)"), {}).size(), 0u);
  for (const char* f : {"pf(id)", "sum(const{*}, id)", "prod(const{a,b}, id)", "bag[2](id)"})
    for (std::size_t n = 0; n <= 3; ++n) {
      auto pred = functor_size(parse_functor(f), n);
      if (pred) EXPECT_EQ(*pred, functor_eval(parse_functor(f), standard_set(n)).size()) << f << " " << n;
    }
}

TEST(Functor, ParsePrint) {
  for (const char* f : {"id", "const{a,b}", "prod(const{a}, id)", "sum(const{*}, pf(id))", "df[3](id)", "trunc(id)"})
    EXPECT_EQ(print(parse_functor(print(parse_functor(f)))), print(parse_functor(f)));
  EXPECT_THROW(parse_functor("prod(id)"), ParseError);
  EXPECT_THROW(parse_functor("powerset(id)"), ParseError);
  EXPECT_THROW(parse_functor("id id"), ParseError);
}

TEST(Functor, Laws) {
  for (const char* text : {"pf(prod(const{a,b}, id))", "sum(const{*}, id)", "df[2](id)", "list[2](id)", "bag[2](id)",
                           "prod(id, id)", "trunc(id)"}) {
    Functor F = parse_functor(text);
    for (std::size_t n = 0; n <= 3; ++n)
      for (std::size_t m = 1; m <= 3; ++m) {
        ValueSet X = standard_set(n), Y = standard_set(m);
        for (const Value& t : functor_eval(F, X)) {
          EXPECT_EQ(functor_map(F, [](const Value& x) { return x; }, t), t) << text;
          auto f = [m](const Value& x) { return Value::integer((x.as_int() + 1) % static_cast<std::int64_t>(m)); };
          auto g = [](const Value& x) { return Value::integer(x.as_int() / 2); };
          Value fg = functor_map(F, [&](const Value& x) { return g(f(x)); }, t);
          EXPECT_EQ(fg, functor_map(F, g, functor_map(F, f, t))) << text;
          auto img = functor_eval(F, Y);
          EXPECT_TRUE(std::binary_search(img.begin(), img.end(), functor_map(F, f, t))) << text;
        }
      }
  }
}

TEST(Terminal, PowersetSequence) {
  auto seq = terminal_sequence(parse_functor("pf(id)"), 5);
  EXPECT_EQ(seq.sizes(), (std::vector<std::size_t>{1, 2, 4, 16, 65536}));
  EXPECT_FALSE(seq.convergence);
  EXPECT_TRUE(seq.budget_stop);
  EXPECT_NE(seq.stop_reason.find("2^62"), std::string::npos);
}

TEST(Terminal, Convergence) {
  auto c = terminal_sequence(parse_functor("const{a,b}"), 5);
  EXPECT_EQ(c.convergence, std::size_t{1});
  auto one = terminal_sequence(parse_functor("const{*}"), 5);
  EXPECT_EQ(one.convergence, std::size_t{0});
  auto d = terminal_sequence(parse_functor("sum(const{*}, id)"), 6);
  EXPECT_FALSE(d.convergence);
  EXPECT_EQ(d.sizes(), (std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7}));
}

TEST(Terminal, ConnectorsCohere) {
  for (const char* f : {"sum(const{*}, id)", "prod(const{a,b}, id)", "pf(prod(const{l}, id))"}) {
    auto seq = terminal_sequence(parse_functor(f), 4);
    for (std::size_t k = 0; k < seq.stages.size(); ++k) {
      EXPECT_EQ(connector_between(seq, k, k), identity_fn(seq.stages[k].size()));
      for (std::size_t j = 0; j <= k; ++j) {
        EXPECT_EQ(connector_between(seq, k, j), direct_connector(seq, k, j)) << f << " " << k << " " << j;
        for (std::size_t i = 0; i <= j; ++i) {
          FinFn kj = connector_between(seq, k, j), ji = connector_between(seq, j, i), ki = connector_between(seq, k, i);
          for (std::size_t x = 0; x < kj.size(); ++x) EXPECT_EQ(ji[kj[x]], ki[x]);
        }
      }
    }
  }
}

TEST(Final, ConstantFunctor) {
  auto fin = final_coalgebra(parse_functor("const{a,b}"), 5, 3);
  EXPECT_EQ(fin.carrier.size(), 2u);
  EXPECT_TRUE(fin.finality_ok);
  EXPECT_TRUE(fin.finality_complete);
  EXPECT_GT(fin.coalgebras_checked, 0u);
  Coalgebra c{parse_functor("const{a,b}"), {sym("a"), sym("a"), sym("b")}};
  EXPECT_EQ(count_morphisms(c, fin), 1u);
  EXPECT_THROW(final_coalgebra(parse_functor("pf(id)"), 5, 3), NotConverged);
  EXPECT_THROW(final_coalgebra(parse_functor("sum(const{*}, id)"), 4, 2), NotConverged);
}

TEST(StageLaw, HoldsForGuardedFixpoints) {
  for (const char* f : {"sum(const{*}, id)", "prod(const{a,b}, id)"}) {
    auto r = check_stage_law(parse_functor(f), 4);
    EXPECT_TRUE(r.ok) << f;
    ASSERT_EQ(r.rows.size(), 4u);
    for (const auto& row : r.rows) EXPECT_EQ(row.fiber_size, row.terminal_size);
  }
}

TEST(Bisim, Samples) {
  EXPECT_EQ(bisimilarity(load_coalgebra(sample("loops.coalg"))).size(), 1u);
  EXPECT_EQ(bisimilarity(load_coalgebra(sample("labels.coalg"))).size(), 3u);
  Coalgebra coins = load_coalgebra(sample("coins.coalg"));
  Partition p = bisimilarity(coins);
  EXPECT_EQ(p.size(), 3u);
  auto cls = class_of(p, coins.size());
  EXPECT_EQ(cls[0], cls[1]);
  EXPECT_NE(cls[2], cls[3]);
}

TEST(Bisim, ParseErrors) {
  EXPECT_THROW(parse_coalgebra("functor pf(id)\nstates 2\nedge 0 5\n"), ParseError);
  EXPECT_THROW(parse_coalgebra("functor pf(id)\nedge 0 1\n"), ParseError);
  EXPECT_THROW(parse_coalgebra("states 2\n"), ParseError);
  EXPECT_THROW(parse_coalgebra("functor pf(prod(const{a}, id))\nstates 2\nedge 0 b 1\n"), ParseError);
  EXPECT_THROW(parse_coalgebra("functor df(id)\nstates 2\nprob 0 1 1/2\n"), ParseError);
  EXPECT_THROW(parse_coalgebra("functor pf(id)\nstates 2\nfrob 0 1\n"), ParseError);
}

TEST(Bisim, PrintRoundTrip) {
  for (const char* f : {"loops.coalg", "labels.coalg", "coins.coalg"}) {
    Coalgebra c = load_coalgebra(sample(f));
    Coalgebra d = parse_coalgebra(print(c));
    EXPECT_EQ(c.structure, d.structure) << f;
  }
}

TEST(Bisim, MatchesRelationEnumeration) {
  ValueSet labels{sym("a"), sym("b")};
  for (std::size_t n = 1; n <= 2; ++n) {
    std::uint64_t codes = std::uint64_t{1} << (n * labels.size() * n);
    for (std::uint64_t code = 0; code < codes; ++code) {
      Coalgebra c = pf_coalgebra_from_code(labels, n, code);
      Partition p = bisimilarity(c);
      EXPECT_EQ(p, brute_force_bisimulation_pf(c, true)) << code;
      EXPECT_EQ(p, brute_force_bisimulation_pf(c, false)) << code;
    }
  }
  std::mt19937_64 rng(3);
  ValueSet one{sym("a")};
  for (int i = 0; i < 100; ++i) {
    Coalgebra c = pf_coalgebra_from_code(one, 4, rng() & 0xffff);
    EXPECT_EQ(bisimilarity(c), brute_force_bisimulation_pf(c, false));
  }
}

TEST(Bisim, Probabilistic) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    Coalgebra c = random_prob_coalgebra(5, {sym("h"), sym("t")}, 3, rng);
    EXPECT_EQ(bisimilarity(c), brute_force_bisimulation_prob(c)) << print(c);
  }
}

TEST(Bisim, IsAnEquivalenceCoveringAllStates) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 30; ++i) {
    Coalgebra c = pf_coalgebra_from_code({sym("a"), sym("b")}, 3, rng() & 0x3ffff);
    Partition p = bisimilarity(c);
    std::vector<int> seen(c.size(), 0);
    for (const auto& block : p)
      for (std::size_t s : block) ++seen[s];
    for (int s : seen) EXPECT_EQ(s, 1);
  }
}

TEST(WeakBisim, ReflexiveAndSymmetric) {
  const std::size_t N = 4;
  ValueSet X{sym("a"), sym("b")};
  Relation eq = [](const Value& x, const Value& y) { return x == y; };
  std::vector<Delay> ds;
  for (const char* t : {"now a", "now b", "step now a", "step^3 now b", "never"}) ds.push_back(parse_delay(t, N));
  for (const Delay& x : ds) {
    EXPECT_TRUE(weak_bisim_delay(x, x, N, X, eq).all_stages) << x.str();
    for (const Delay& y : ds)
      EXPECT_EQ(weak_bisim_delay(x, y, N, X, eq).stages, weak_bisim_delay(y, x, N, X, eq).stages);
  }
}

TEST(WeakBisim, StepsAreAbsorbed) {
  const std::size_t N = 4;
  ValueSet X{sym("a"), sym("b")};
  Relation eq = [](const Value& x, const Value& y) { return x == y; };
  Delay a = parse_delay("now a", N);
  EXPECT_TRUE(weak_bisim_delay(a.step().step(), a, N, X, eq).all_stages);
  EXPECT_FALSE(weak_bisim_delay(a, parse_delay("now b", N), N, X, eq).all_stages);
  Relation any = [](const Value&, const Value&) { return true; };
  EXPECT_TRUE(weak_bisim_delay(a, parse_delay("step now b", N), N, X, any).all_stages);
  EXPECT_TRUE(weak_bisim_delay(a, parse_delay("never", N), N, X, eq).all_stages);
}

TEST(WeakBisim, DelayParsing) {
  EXPECT_EQ(parse_delay("step^2 now a", 3), (Delay{2, sym("a")}));
  EXPECT_EQ(parse_delay("step step now 1", 3), (Delay{2, Value::integer(1)}));
  EXPECT_FALSE(parse_delay("never", 3).value);
  EXPECT_THROW(parse_delay("later a", 3), ParseError);
  EXPECT_EQ(restrict(Delay{5, sym("a")}, 2).steps, restrict(Delay::never(9), 2).steps);
}
