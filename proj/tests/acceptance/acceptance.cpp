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
#include "clott/kernel/checker.hpp"
#include "clott/kernel/corpus.hpp"
#include "clott/kernel/program.hpp"
#include "clott/model/checks.hpp"
#include "clott/model/type_expr.hpp"
#include "clott/syntax/parse.hpp"
#include "clott/theories/checks.hpp"
#include "clott/theories/free_model.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

namespace co = clott::coalgebra;
namespace ke = clott::kernel;
namespace mo = clott::model;
namespace th = clott::theories;
using clott::Value;
using clott::ValueSet;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  std::string id;
  double limit_seconds;  // 0 = no time limit
  std::function<Outcome()> run;
};

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  return s.str();
}

// Typing corpus: accepting and rejecting case for every rule.
Outcome typing_corpus() {
  Outcome o;
  std::size_t passed = 0;
  std::map<std::string, std::pair<bool, bool>> cov;
  for (const ke::GoldenCase& c : ke::golden_corpus()) {
    auto v = ke::run_golden(c);
    if (v.pass) ++passed;
    else if (o.pass) {
      o.pass = false;
      o.detail = "case " + c.id + " failed: " + v.detail;
    }
    auto& e = cov[c.rule];
    (c.accept ? e.first : e.second) = true;
  }
  std::size_t rules = 0, covered = 0;
  for (const auto* list : {&ke::core_rules(), &ke::universe_rules()})
    for (const std::string& r : *list) {
      ++rules;
      if (cov[r].first && cov[r].second) ++covered;
      else if (o.pass) {
        o.pass = false;
        o.detail = "rule " + r + " lacks an accepting or rejecting case";
      }
    }
  if (o.pass)
    o.detail = std::to_string(passed) + " cases, " + std::to_string(covered) + "/" + std::to_string(rules) + " rules covered";
  return o;
}

Outcome delay_unfolding() {
  ke::Checker ch;
  auto prog = ke::run_program(
      "clock k\nvar A : U{k}\n"
      "def D : U{k} := fix (fun (x : later k U{k}) -> A +^ later^ (a : k) . x [a])\n",
      ch);
  if (!prog.ok()) return {false, "delay program does not check"};
  auto lhs = clott::syntax::parse_term("D");
  auto rhs = clott::syntax::parse_term("A +^ later^ (a : k) . D");
  auto c1 = ch.convert(prog.context, lhs, rhs, 1);
  int used = ch.last_unfoldings();
  auto c0 = ch.convert(prog.context, lhs, rhs, 0);
  bool ok = c1 == ke::Conv::Equal && used <= 1 && c0 == ke::Conv::Unknown;
  return {ok, std::string("fuel 1: ") + (c1 == ke::Conv::Equal ? "equal" : "not equal") + " with " +
                  std::to_string(used) + " unfolding(s); fuel 0: " +
                  (c0 == ke::Conv::Unknown ? "unknown" : "decided")};
}

Outcome drop_detection() {
  bool sl = th::has_drop_equations(th::semilattice_theory());
  bool cx = th::has_drop_equations(th::convex_theory());
  bool tr = th::has_drop_equations(th::truncation_theory());
  return {!sl && !cx && tr, std::string("semilattice drop=") + (sl ? "true" : "false") + ", convex drop=" +
                                (cx ? "true" : "false") + ", truncation drop=" + (tr ? "true" : "false")};
}

Outcome pullbacks() {
  Outcome o;
  std::size_t squares = 0;
  for (th::Builtin b : {th::Builtin::Semilattice, th::Builtin::Convex, th::Builtin::Monoid,
                        th::Builtin::CommutativeMonoid}) {
    auto m = th::make_free_model(th::builtin_theory(b));
    auto rep = th::check_preserves_pullbacks_of_monos(*m, 3);
    squares += rep.squares_checked;
    if (!rep.ok || !rep.exact) {
      o.pass = false;
      o.detail = std::string(th::to_string(b)) + " " +
                 (rep.counterexample ? rep.counterexample->describe() : std::string("inexact"));
      return o;
    }
  }
  auto tr = th::make_free_model(th::truncation_theory());
  auto rep = th::check_preserves_pullbacks_of_monos(*tr, 3);
  if (rep.ok || !rep.counterexample || !th::is_disjoint_points_square(*rep.counterexample)) {
    o.pass = false;
    o.detail = "truncation: " + (rep.counterexample ? rep.counterexample->describe() : "no counterexample");
    return o;
  }
  o.detail = std::to_string(squares) + " squares pass for four monads; truncation fails on " +
             rep.counterexample->describe();
  return o;
}

Outcome free_counts() {
  auto sl = th::make_free_model(th::semilattice_theory());
  th::Theory custom = th::semilattice_theory();
  custom.builtin = th::Builtin::Custom;
  th::CustomModel cm(custom, th::Budget{});
  std::vector<std::size_t> normal, closure;
  bool ok = true;
  for (std::size_t n = 0; n <= 4; ++n) {
    normal.push_back(sl->carrier(th::standard_set(n)).size());
    closure.push_back(cm.carrier(th::standard_set(n)).size());
    ok = ok && normal.back() == (std::size_t{1} << n) && closure.back() == normal.back();
  }
  return {ok, "normal forms " + join(normal) + "; congruence closure " + join(closure)};
}

Outcome minimal_support() {
  Outcome o;
  std::size_t elements = 0;
  for (th::Builtin b : {th::Builtin::Semilattice, th::Builtin::Convex, th::Builtin::Monoid,
                        th::Builtin::CommutativeMonoid})
    for (std::size_t n = 0; n <= 4; ++n) {
      auto m = th::make_free_model(th::builtin_theory(b));
      ValueSet X = th::standard_set(n);
      for (const Value& t : m->carrier(X)) {
        ++elements;
        auto brute = th::minimal_supports_brute(*m, t, X);
        if (brute.size() != 1 || th::minimal_support(*m, t, X) != brute.front()) {
          return {false, std::string(th::to_string(b)) + " element " + t.str() + " disagrees with subset search"};
        }
      }
    }
  auto tr = th::make_free_model(th::truncation_theory());
  ValueSet X = th::standard_set(2);
  Value t = tr->carrier(X).front();
  bool threw = false;
  try {
    th::minimal_support(*tr, t, X);
  } catch (const clott::NoLeastSupport&) {
    threw = true;
  }
  std::size_t minimal = th::minimal_supports_brute(*tr, t, X).size();
  o.pass = threw && minimal == 2;
  o.detail = std::to_string(elements) + " elements agree with subset search; truncation on 2 points has " +
             std::to_string(minimal) + " minimal supports" + (threw ? " and no least one" : "");
  return o;
}

Outcome terminal_sequences() {
  auto pf = co::terminal_sequence(co::parse_functor("pf(id)"), 5);
  bool pf_ok = pf.sizes() == std::vector<std::size_t>{1, 2, 4, 16, 65536};
  auto c = co::terminal_sequence(co::parse_functor("const{a,b}"), 5);
  bool c_ok = c.convergence == std::size_t{1};
  std::string law;
  bool law_ok = true;
  for (const char* f : {"sum(const{*}, id)", "prod(const{a,b}, id)", "pf(prod(const{l}, id))"}) {
    auto r = co::check_stage_law(co::parse_functor(f), 4);
    bool rows = r.rows.size() == 4;
    for (const auto& row : r.rows) rows = rows && row.bijective;
    law_ok = law_ok && r.ok && rows;
    std::vector<std::size_t> sizes;
    for (const auto& row : r.rows) sizes.push_back(row.fiber_size);
    law += std::string(law.empty() ? "" : "; ") + f + " fibers " + join(sizes);
  }
  return {pf_ok && c_ok && law_ok, "pf sizes " + join(pf.sizes()) + "; const{a,b} converges at step " +
                                       (c.convergence ? std::to_string(*c.convergence) : "none") + "; stage law " +
                                       law};
}

Outcome bisimilarity() {
  ValueSet one{Value::symbol("a")}, two{Value::symbol("a"), Value::symbol("b")};
  std::size_t exhaustive = 0, sampled = 0, prob = 0;
  auto agree = [](const co::Coalgebra& c, bool enumerate) {
    return co::bisimilarity(c) == co::brute_force_bisimulation_pf(c, enumerate);
  };
  for (const ValueSet* labels : {&one, &two})
    for (std::size_t n = 1; n <= 4; ++n) {
      std::size_t bits = labels->size() * n * n;
      if (bits > 16) continue;
      bool enumerate = n <= 2 || (n == 3 && labels->size() == 1);
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
        co::Coalgebra c = co::pf_coalgebra_from_code(*labels, n, code);
        if (!agree(c, enumerate)) return {false, "disagreement on " + co::print(c)};
        ++exhaustive;
      }
    }
  {
    std::uint64_t codes = std::uint64_t{1} << 18;
    for (std::uint64_t code = 0; code < codes; ++code) {
      co::Coalgebra c = co::pf_coalgebra_from_code(two, 3, code);
      if (!agree(c, false)) return {false, "disagreement on " + co::print(c)};
      ++exhaustive;
    }
  }
  std::mt19937_64 rng(20261017);
  for (int i = 0; i < 1000000; ++i) {
    co::Coalgebra c = co::pf_coalgebra_from_code(two, 4, rng() & 0xffffffffu);
    if (!agree(c, false)) return {false, "disagreement on " + co::print(c)};
    ++sampled;
  }
  ValueSet coin{Value::symbol("h"), Value::symbol("t")};
  for (int i = 0; i < 50; ++i) {
    co::Coalgebra c = co::random_prob_coalgebra(2 + static_cast<std::size_t>(i % 5), coin, 4, rng);
    if (co::bisimilarity(c) != co::brute_force_bisimulation_prob(c)) return {false, "disagreement on " + co::print(c)};
    ++prob;
  }
  return {true, std::to_string(exhaustive) + " labelled transition systems exhaustively, " + std::to_string(sampled) +
                    " sampled with |X|=4 and |A|=2, " + std::to_string(prob) + " probabilistic systems"};
}

Outcome model_invariants() {
  mo::ModelContext ctx(2, 4);
  const std::vector<std::pair<std::string, std::string>> corpus{
      {"fin(1)", ""},
      {"prod(fin(2), fin(3))", ""},
      {"sum(fin(1), fin(2))", ""},
      {"arrow(fin(2), fin(3))", ""},
      {"apply(pf(id), fin(2))", ""},
      {"apply(df(id), fin(2))", ""},
      {"forall(k, later(k, fin(2)))", ""},
      {"forall(k, mu(k, sum(const{*}, id)))", ""},
      {"forall(k, mu(k, prod(const{a,b}, id)))", ""},
      {"exists(x, fin(3), eq(x, 1))", ""},
      {"and(top, or(bot, top))", ""},
      {"fin(2)", "k"},
      {"later(k, fin(2))", "k"},
      {"mu(k, sum(const{*}, id))", "k"},
      {"mu(k, sum(const{a,b}, id))", "k"},
      {"mu(k, bag[1](prod(const{l}, id)))", "k"},
      {"later(k, mu(k, sum(const{*}, id)))", "k"},
      {"prod(mu(k, sum(const{*}, id)), later(k, fin(2)))", "k"},
      {"arrow(mu(k, sum(const{*}, id)), fin(2))", "k"},
  };
  for (const auto& [t, k] : corpus) {
    auto x = mo::eval_type(ctx, mo::parse_type_m(t), {}, k);
    if (!mo::check_invariance(x).ok) return {false, t + " is not invariant"};
  }
  auto S = ctx.category(mo::Base::Clock, 2);
  auto T = ctx.category(mo::Base::Time, 1);
  auto D = mo::eval_type(ctx, mo::parse_type_m("mu(k, sum(const{*}, id))"), {}, "k");
  auto C = mo::constant(S, th::standard_set(2));
  auto L = mo::later(C);
  for (const auto& [a, b] : {std::pair{D, C}, std::pair{L, D}, std::pair{D, D}}) {
    if (auto f = mo::check_forall_sum(a, b, T)) return {false, "forall does not distribute over +: " + *f};
    if (auto f = mo::check_forall_product(a, b, T)) return {false, "forall does not distribute over x: " + *f};
  }
  bool clk = !mo::check_invariance(mo::clocks(ctx.time())).ok;
  return {clk, std::to_string(corpus.size()) + " evaluated types invariant; forall distributes over + and x; Clk " +
                   (clk ? "fails" : "passes") + " invariance"};
}

Outcome exists_forall() {
  std::vector<std::size_t> witnesses;
  for (int N = 3; N <= 8; ++N) {
    mo::ModelContext ctx(2, N);
    auto r = mo::exists_forall_experiment(ctx, th::standard_set(static_cast<std::size_t>(N)),
                                          [](mo::CategoryPtr s, const Value& a) {
                                            return mo::stage_predicate(s, [a](int b) { return b <= a.as_int(); });
                                          });
    for (const auto& row : r.rows)
      if (!row.min_uniform_witness || row.min_uniform_witness->as_int() != N - 1)
        return {false, "stage-ordinal family at N=" + std::to_string(N) + " has the wrong minimal witness"};
    witnesses.push_back(static_cast<std::size_t>(N - 1));
  }
  std::size_t families = 0;
  for (int N = 2; N <= 6; ++N) {
    mo::ModelContext ctx(2, N);
    for (int t0 = 0; t0 <= N; ++t0)
      for (int t1 = 0; t1 <= N; ++t1) {
        std::vector<int> t{t0, t1};
        auto r = mo::exists_forall_experiment(ctx, th::standard_set(2), [&t](mo::CategoryPtr s, const Value& x) {
          int th_ = t[static_cast<std::size_t>(x.as_int())];
          return mo::stage_predicate(s, [th_](int b) { return b < th_; });
        });
        if (!r.commutes)
          return {false, "downward-closed family " + std::to_string(t0) + "," + std::to_string(t1) + " at N=" +
                             std::to_string(N) + " does not commute"};
        ++families;
      }
  }
  std::size_t unique = 0;
  mo::ModelContext ctx(2, 4);
  for (int n = 0; n < 4; ++n) {
    auto phi = [n](mo::CategoryPtr s, const Value& y) {
      return mo::stage_predicate(s, [n, y](int b) { return y.as_int() == 0 || b < n; });
    };
    auto r = mo::unique_exists_check(ctx, th::standard_set(2), phi, n);
    if (!r.hypothesis_holds || !r.commutes) return {false, "unique existence instance " + std::to_string(n) + ": " + r.detail};
    ++unique;
  }
  return {true, "minimal witnesses " + join(witnesses) + " for N=3..8; " + std::to_string(families) +
                    " downward-closed families commute; " + std::to_string(unique) + " unique-existence instances commute"};
}

Outcome weak_bisim() {
  const std::size_t N = 4;
  ValueSet X{Value::symbol("a"), Value::symbol("b")};
  co::Relation eq = [](const Value& x, const Value& y) { return x == y; };
  co::Delay a = co::Delay::now(Value::symbol("a"));
  co::Delay d = a;
  for (std::size_t k = 0; k < N; ++k, d = d.step())
    if (!co::weak_bisim_delay(a, d, N, X, eq).all_stages) return {false, "now a vs " + d.str() + " not related"};
  std::vector<co::Delay> ds{a, co::Delay::now(Value::symbol("b")), a.step(), co::Delay::now(Value::symbol("b")).step().step(),
                            co::Delay::never(N + 1)};
  std::size_t pairs = 0;
  for (const auto& x : ds)
    for (const auto& y : ds)
      for (std::size_t k = 0; k + 1 < N; ++k) {
        if (co::weak_bisim_at(x.step(), y.step(), k + 1, N, X, eq) != co::weak_bisim_at(x, y, k, N, X, eq))
          return {false, "step clause at stage " + std::to_string(k + 1) + " for " + x.str() + ", " + y.str()};
        if (!co::weak_bisim_at(x.step(), y.step(), 0, N, X, eq)) return {false, "step clause at stage 0"};
        ++pairs;
      }
  bool apart = !co::weak_bisim_at(a, co::Delay::now(Value::symbol("b")), 1, N, X, eq);
  return {apart, "now a ~ step^k now a for k <= " + std::to_string(N - 1) + "; step clause consumes a stage in " +
                     std::to_string(pairs) + " instances; now a and now b apart"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", 5, typing_corpus},   {"AC2", 0, delay_unfolding},   {"AC3", 0, drop_detection},
      {"AC4", 30, pullbacks},      {"AC5", 0, free_counts},       {"AC6", 0, minimal_support},
      {"AC7", 60, terminal_sequences}, {"AC8", 0, bisimilarity},  {"AC9", 0, model_invariants},
      {"AC10", 30, exists_forall}, {"AC11", 0, weak_bisim},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.pass = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit";
    }
    if (!o.pass) ++failures;
    std::cout << c.id << " " << (o.pass ? "PASS" : "FAIL") << " " << o.detail << " (" << std::fixed
              << std::setprecision(2) << secs << " s)" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
