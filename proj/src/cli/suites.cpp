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

#include "clott/cli/suites.hpp"

#include "clott/coalgebra/coalgebra.hpp"
#include "clott/core/errors.hpp"
#include "clott/kernel/corpus.hpp"
#include "clott/model/checks.hpp"
#include "clott/model/type_expr.hpp"
#include "clott/theories/checks.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace clott::cli {

using nlohmann::json;
namespace co = clott::coalgebra;
namespace mo = clott::model;
namespace th = clott::theories;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json sizes_json(const std::vector<std::size_t>& v) { return json(v); }

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t x : v) out += (out.empty() ? "" : ", ") + std::to_string(x);
  return out;
}

json partition_json(const co::Partition& p) { return json(p); }

Value sym(const char* s) { return Value::symbol(s); }

co::Relation equality() {
  return [](const Value& a, const Value& b) { return a == b; };
}

}  // namespace

const std::vector<std::string>& model_suites() {
  static const std::vector<std::string> names{"category", "invariance", "force", "distribution", "exists", "unique"};
  return names;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"requirements", "figures", "theories", "coalgebra"};
  return names;
}

// ---------------------------------------------------------------------------
// check / eval

Report run_check(const std::string& path, const Params& p) {
  Report r;
  r.command = "check " + path;
  r.params = p;
  kernel::Options opts;
  opts.fuel = p.fuel;
  kernel::Checker checker(opts);
  kernel::ProgramResult res = kernel::run_program(read_file(path), checker);
  for (const kernel::DeclResult& d : res.decls) {
    Verdict v = d.outcome == kernel::Outcome::Ok       ? Verdict::Pass
                : d.outcome == kernel::Outcome::Failed ? Verdict::Fail
                                                       : Verdict::Unknown;
    json ev{{"line", d.line}, {"summary", d.summary}};
    if (!d.message.empty()) ev["message"] = d.message;
    if (!d.rule.empty()) ev["rule"] = d.rule;
    r.add("line " + std::to_string(d.line), "typing rules", v, ev);
  }
  return r;
}

Report run_eval(const std::string& type, const std::string& clock, const Params& p) {
  Report r;
  r.command = "eval " + type + (clock.empty() ? "" : " --clock " + clock);
  r.params = p;
  mo::ModelContext ctx(p.pool, p.bound);
  mo::TypeM t = mo::parse_type_m(type);
  mo::FinPresheaf x = mo::eval_type(ctx, t, {}, clock);
  json fibers = json::array();
  for (std::size_t o = 0; o < x.cat->objects().size(); ++o) {
    json f{{"object", x.cat->describe(o)}, {"size", x.fiber(o).size()}};
    if (x.fiber(o).size() <= 16) {
      json el = json::array();
      for (const Value& v : x.fiber(o)) el.push_back(v.str());
      f["elements"] = el;
    }
    fibers.push_back(f);
  }
  auto fun = mo::check_functoriality(x);
  r.add("functorial", "presheaf action", !fun,
        {{"summary", fun ? *fun : "identities and composites respected"}, {"type", mo::print(t)}, {"fibers", fibers}});
  auto inv = mo::check_invariance(x);
  r.add("invariant under clock introduction", "invariance under clock introduction", inv.ok,
        {{"summary", inv.ok ? "checked " + std::to_string(inv.checked) + " extensions" : inv.failure->describe(*x.cat)}});
  return r;
}

// ---------------------------------------------------------------------------
// model verify

namespace {

void verify_category(Report& r, mo::ModelContext& ctx, const Params& p) {
  for (auto base : {mo::Base::Time, mo::Base::Clock}) {
    auto cat = ctx.category(base, p.pool);
    auto brute = mo::brute_force_category_size(p.pool, p.bound, base == mo::Base::Clock);
    bool ok = brute.first == cat->objects().size() && brute.second == cat->morphisms().size();
    std::string which = base == mo::Base::Time ? "time category" : "clock slice";
    r.add(which + " matches direct count", "time category", ok,
          {{"summary", std::to_string(cat->objects().size()) + " objects, " + std::to_string(cat->morphisms().size()) +
                           " morphisms; direct count " + std::to_string(brute.first) + "/" +
                           std::to_string(brute.second)}});
    bool closed = true;
    for (std::size_t f = 0; f < cat->morphisms().size() && closed; ++f) {
      const auto& m = cat->morphisms()[f];
      if (cat->compose(cat->identity(m.src), f) != f || cat->compose(f, cat->identity(m.tgt)) != f) closed = false;
      for (std::size_t g : cat->out(m.tgt)) {
        std::size_t gf = cat->compose(f, g);
        for (std::size_t h : cat->out(cat->morphisms()[g].tgt))
          if (cat->compose(gf, h) != cat->compose(f, cat->compose(g, h))) closed = false;
      }
    }
    r.add(which + " composition is associative and unital", "time category", closed,
          {{"summary", closed ? "all composable triples checked" : "composition table inconsistent"}});
  }
}

struct TypeCase {
  const char* type;
  const char* clock;
};

const std::vector<TypeCase>& type_corpus() {
  static const std::vector<TypeCase> cases{
      {"prod(fin(2), fin(3))", ""},
      {"sum(fin(1), fin(2))", ""},
      {"arrow(fin(2), fin(3))", ""},
      {"apply(pf(id), fin(2))", ""},
      {"forall(k, later(k, fin(2)))", ""},
      {"forall(k, mu(k, sum(const{*}, id)))", ""},
      {"forall(k, sum(later(k, fin(1)), fin(2)))", ""},
      {"exists(x, fin(3), eq(x, 1))", ""},
      {"all(x, fin(2), or(eq(x, 0), eq(x, 1)))", ""},
      {"and(top, or(bot, top))", ""},
      {"mu(k, sum(const{*}, id))", "k"},
      {"mu(k, prod(const{a,b}, id))", "k"},
      {"later(k, mu(k, sum(const{*}, id)))", "k"},
      {"arrow(mu(k, sum(const{*}, id)), fin(2))", "k"},
      {"prod(later(k, fin(2)), fin(2))", "k"},
  };
  return cases;
}

void verify_invariance(Report& r, mo::ModelContext& ctx) {
  for (const TypeCase& c : type_corpus()) {
    std::string name = std::string(c.type) + (*c.clock ? " under clock " + std::string(c.clock) : "");
    try {
      mo::FinPresheaf x = mo::eval_type(ctx, mo::parse_type_m(c.type), {}, c.clock);
      auto fun = mo::check_functoriality(x);
      auto inv = mo::check_invariance(x);
      std::string summary = fun ? *fun
                            : inv.ok ? "functorial; " + std::to_string(inv.checked) + " extensions bijective"
                                     : inv.failure->describe(*x.cat);
      r.add(name, "invariance under clock introduction", !fun && inv.ok,
            {{"summary", summary}, {"fiber_sizes", sizes_json(x.sizes())}});
    } catch (const FreshClockExhausted& e) {
      r.add(name, "invariance under clock introduction", Verdict::Unknown, {{"summary", e.what()}});
    }
  }
  mo::FinPresheaf clk = mo::clocks(ctx.time());
  auto inv = mo::check_invariance(clk);
  r.add("clk is not invariant", "invariance under clock introduction", !inv.ok,
        {{"summary", inv.ok ? "clk passed invariance" : inv.failure->describe(*clk.cat)}});
}

void verify_force(Report& r, mo::ModelContext& ctx) {
  if (ctx.pool() < 2) {
    r.add("force", "clock quantification over later", Verdict::Unknown, {{"summary", "needs a pool of 2 clocks"}});
    return;
  }
  auto S = ctx.category(mo::Base::Clock, ctx.pool());
  auto T = ctx.category(mo::Base::Time, ctx.pool() - 1);
  auto report = [&](const std::string& name, const mo::FinPresheaf& a, bool expect_iso) {
    mo::ForceResult f = mo::check_force(a, T);
    Verdict v = f.iso == expect_iso ? Verdict::Pass : Verdict::Fail;
    if (!f.iso && f.truncation_artifact) v = Verdict::TruncationArtifact;
    json ev{{"summary", f.explanation}, {"iso", f.iso}, {"stabilized", f.stabilized},
            {"stage_sizes", sizes_json(f.stage_sizes)}};
    if (f.first_failure_stage) ev["first_failure_stage"] = *f.first_failure_stage;
    r.add(name, "clock quantification over later", v, ev);
  };
  report("force on the delay family D(1)", mo::guarded_fixpoint(co::parse_functor("sum(const{*}, id)"), S), false);
  report("force on a constant family", mo::constant(S, th::standard_set(2)), true);
  report("force on a family stable from stage 1", mo::later(mo::constant(S, th::standard_set(2))), true);
}

void verify_distribution(Report& r, mo::ModelContext& ctx) {
  if (ctx.pool() < 2) {
    r.add("distribution", "clock quantification distributes", Verdict::Unknown, {{"summary", "needs 2 clocks"}});
    return;
  }
  auto S = ctx.category(mo::Base::Clock, ctx.pool());
  auto T = ctx.category(mo::Base::Time, ctx.pool() - 1);
  mo::FinPresheaf D = mo::guarded_fixpoint(co::parse_functor("sum(const{*}, id)"), S);
  mo::FinPresheaf C = mo::constant(S, th::standard_set(2));
  mo::FinPresheaf L = mo::later(C);
  auto rec = [&](const std::string& name, const std::optional<std::string>& failure) {
    r.add(name, "clock quantification distributes", !failure,
          {{"summary", failure ? *failure : "explicit bijection natural on every morphism"}});
  };
  rec("forall over D(1) + 2", mo::check_forall_sum(D, C, T));
  rec("forall over later 2 + D(1)", mo::check_forall_sum(L, D, T));
  rec("forall over D(1) x 2", mo::check_forall_product(D, C, T));
  rec("forall over D(1) x later 2", mo::check_forall_product(D, L, T));
  auto irr = mo::check_clock_irrelevance(mo::constant(ctx.time(), th::standard_set(2)), S);
  r.add("clock irrelevance for a constant", "clock irrelevance", !irr,
        {{"summary", irr ? *irr : "A -> forall A is a natural bijection"}});
}

mo::PredicateFamily threshold_family(std::vector<int> thresholds) {
  return [thresholds](mo::CategoryPtr s, const Value& x) {
    int t = thresholds[static_cast<std::size_t>(x.as_int())];
    return mo::stage_predicate(s, [t](int b) { return b < t; });
  };
}

void verify_exists(Report& r, const Params& p) {
  json growth = json::array();
  bool all_ok = true;
  int hi = std::max(8, p.bound);
  for (int N = 3; N <= hi; ++N) {
    mo::ModelContext c(p.pool, N);
    auto res = mo::exists_forall_experiment(c, th::standard_set(static_cast<std::size_t>(N)),
                                            [](mo::CategoryPtr s, const Value& a) {
                                              return mo::stage_predicate(s, [a](int b) { return b <= a.as_int(); });
                                            });
    const auto& row = res.rows.front();
    bool ok = row.rhs && row.min_uniform_witness && row.min_uniform_witness->as_int() == N - 1;
    for (const auto& rw : res.rows)
      ok = ok && rw.min_uniform_witness && rw.min_uniform_witness->as_int() == N - 1;
    all_ok = all_ok && ok;
    growth.push_back({{"N", N},
                      {"lhs", row.lhs},
                      {"rhs", row.rhs},
                      {"min_uniform_witness", row.min_uniform_witness ? row.min_uniform_witness->as_int() : -1}});
  }
  r.add("stage-ordinal family needs witness N-1", "exists over clock quantification", all_ok,
        {{"summary", all_ok ? "minimal uniform witness is N-1 for N = 3.." + std::to_string(hi) : "witness mismatch"},
         {"growth", growth}});

  mo::ModelContext ctx(p.pool, p.bound);
  std::size_t families = 0, commuting = 0;
  json bad = json::array();
  for (int t0 = 0; t0 <= p.bound; ++t0)
    for (int t1 = 0; t1 <= p.bound; ++t1) {
      auto res = mo::exists_forall_experiment(ctx, th::standard_set(2), threshold_family({t0, t1}));
      ++families;
      if (res.commutes) ++commuting;
      else bad.push_back({t0, t1});
    }
  r.add("downward-closed families over 2 elements commute", "bounded existential quantification",
        commuting == families,
        {{"summary", std::to_string(commuting) + "/" + std::to_string(families) + " families commute"},
         {"failures", bad}});

  auto res = mo::exists_forall_experiment(ctx, th::standard_set(3), [](mo::CategoryPtr s, const Value&) {
    return mo::stage_predicate(s, [](int) { return true; });
  });
  bool ok = res.commutes && res.rows.front().lhs && res.rows.front().min_uniform_witness &&
            *res.rows.front().min_uniform_witness == Value::integer(0);
  r.add("constantly true family has the least witness", "exists over clock quantification", ok,
        {{"summary", ok ? "both sides true, witness 0" : "unexpected result"}});
}

void verify_unique(Report& r, const Params& p) {
  mo::ModelContext ctx(p.pool, p.bound);
  ValueSet X{sym("a"), sym("b")};
  const std::size_t N = static_cast<std::size_t>(p.bound);
  for (std::size_t n = 1; n < N; ++n) {
    co::Delay x{n, sym("a")};
    mo::PredicateFamily phi = [&, x](mo::CategoryPtr s, const Value& y) {
      return mo::stage_predicate(s, [&, x, y](int b) {
        return co::weak_bisim_at(x, co::Delay::now(y), static_cast<std::size_t>(b), N, X, equality());
      });
    };
    auto res = mo::unique_exists_check(ctx, X, phi, static_cast<int>(n));
    r.add("delayed value step^" + std::to_string(n) + " now a", "unique existence",
          res.hypothesis_holds && res.commutes,
          {{"summary", std::string(res.hypothesis_holds ? "uniqueness holds from stage " + std::to_string(n)
                                                        : "hypothesis fails: " + res.detail) +
                           (res.commutes ? "; quantifiers commute" : "; quantifiers do not commute")}});
  }
  auto always = [](mo::CategoryPtr s, const Value&) { return mo::stage_predicate(s, [](int) { return true; }); };
  auto res = mo::unique_exists_check(ctx, X, always, 1);
  r.add("two stage-independent witnesses are not applicable", "unique existence", !res.hypothesis_holds,
        {{"summary", res.hypothesis_holds ? "hypothesis unexpectedly holds" : "not applicable: " + res.detail}});
  auto never = [](mo::CategoryPtr s, const Value&) { return mo::stage_predicate(s, [](int) { return false; }); };
  auto empty = mo::unique_exists_check(ctx, X, never, 0);
  auto ef = mo::exists_forall_experiment(ctx, X, never);
  bool ok = empty.hypothesis_holds && empty.commutes && !ef.rows.front().lhs && !ef.rows.front().rhs;
  r.add("empty predicate holds vacuously", "unique existence", ok,
        {{"summary", ok ? "hypothesis vacuous, both sides false" : "unexpected result"}});
}

}  // namespace

Report model_verify(const std::string& which, const Params& p) {
  Report r;
  r.command = "model verify " + which;
  r.params = p;
  if (p.pool < 1 || p.bound < 2) throw std::invalid_argument("model checks need --pool >= 1 and --bound >= 2");
  mo::ModelContext ctx(p.pool, p.bound);
  bool all = which == "all";
  bool known = all;
  if (all || which == "category") known = true, verify_category(r, ctx, p);
  if (all || which == "invariance") known = true, verify_invariance(r, ctx);
  if (all || which == "force") known = true, verify_force(r, ctx);
  if (all || which == "distribution") known = true, verify_distribution(r, ctx);
  if (all || which == "exists") known = true, verify_exists(r, p);
  if (all || which == "unique") known = true, verify_unique(r, p);
  if (!known) throw std::invalid_argument("unknown model suite '" + which + "'");
  return r;
}

// ---------------------------------------------------------------------------
// theories

namespace {

th::Budget budget_for(const Params& p) {
  th::Budget b;
  b.term_size = p.depth;
  return b;
}

std::string set_str(const ValueSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + s[i].str();
  return out + "}";
}

void theory_drop(Report& r, const th::Theory& t) {
  json eqs = json::array();
  for (std::size_t i : th::drop_equations(t)) eqs.push_back(th::print(t.equations[i]));
  bool drop = !eqs.empty();
  r.add(t.name + " drop equations", "drop equations", Verdict::Pass,
        {{"summary", std::string("drop=") + (drop ? "true" : "false") + " (" + std::to_string(eqs.size()) +
                         " of " + std::to_string(t.equations.size()) + " equations)"},
         {"drop", drop},
         {"equations", eqs}});
}

void theory_free(Report& r, const th::Theory& t, const Params& p) {
  auto m = th::make_free_model(t, budget_for(p));
  json rows = json::array();
  for (int n = 0; n <= p.size; ++n) {
    ValueSet X = th::standard_set(static_cast<std::size_t>(n));
    ValueSet car = m->carrier(X);
    json row{{"n", n}, {"size", car.size()}, {"exact", m->exact()}};
    if (auto pred = m->predicted_size(static_cast<std::size_t>(n))) row["predicted"] = *pred;
    if (auto* cm = dynamic_cast<const th::CustomModel*>(m.get())) row["terms"] = cm->term_count(X);
    if (car.size() <= 16) {
      json el = json::array();
      for (const Value& v : car) el.push_back(v.str());
      row["elements"] = el;
    }
    rows.push_back(row);
  }
  std::vector<std::size_t> sizes;
  for (const json& row : rows) sizes.push_back(row["size"].get<std::size_t>());
  r.add(t.name + " free model sizes", "free model", Verdict::Pass,
        {{"summary", "|T(n)| for n = 0.." + std::to_string(p.size) + ": " + join(sizes) +
                         (m->exact() ? "" : " (lower bounds from bounded congruence closure)")},
         {"lower_bound", !m->exact()},
         {"rows", rows}});
}

void theory_monos(Report& r, const th::Theory& t, const Params& p) {
  auto m = th::make_free_model(t, budget_for(p));
  auto rep = th::check_preserves_monos(*m, static_cast<std::size_t>(p.size));
  Verdict v = rep.ok ? (rep.exact ? Verdict::Pass : Verdict::Unknown) : Verdict::Fail;
  json ev{{"bound", rep.bound}, {"injections_checked", rep.injections_checked}, {"exact", rep.exact}};
  std::string summary = std::to_string(rep.injections_checked) + " injections between sets of size <= " +
                        std::to_string(rep.bound);
  if (rep.counterexample) {
    const auto& c = *rep.counterexample;
    summary = "injection " + std::to_string(c.domain) + " -> " + std::to_string(c.codomain) + " identifies " +
              c.left.str() + " and " + c.right.str();
  }
  ev["summary"] = summary;
  r.add(t.name + " preserves monos", "preservation of monomorphisms", v, ev);
}

void theory_pullbacks(Report& r, const th::Theory& t, const Params& p) {
  auto m = th::make_free_model(t, budget_for(p));
  auto rep = th::check_preserves_pullbacks_of_monos(*m, static_cast<std::size_t>(p.size));
  Verdict v = rep.ok ? (rep.exact ? Verdict::Pass : Verdict::Unknown) : Verdict::Fail;
  json ev{{"bound", rep.bound}, {"squares_checked", rep.squares_checked}, {"exact", rep.exact}};
  ev["summary"] = std::to_string(rep.squares_checked) + " squares with |X|,|Y| <= " + std::to_string(rep.bound);
  if (rep.counterexample) {
    ev["summary"] = rep.counterexample->describe();
    ev["counterexample"] = {{"x", rep.counterexample->x_size},
                            {"y", rep.counterexample->y_size},
                            {"f", rep.counterexample->f},
                            {"z", rep.counterexample->z},
                            {"p", rep.counterexample->p},
                            {"tp_size", rep.counterexample->tp_size},
                            {"pullback_size", rep.counterexample->pullback_size},
                            {"disjoint_points", th::is_disjoint_points_square(*rep.counterexample)}};
  }
  r.add(t.name + " preserves pullbacks of monos", "preservation of pullbacks of monomorphisms", v, ev);
}

bool support_matches_brute(const th::FreeModel& m, std::size_t bound, std::size_t& checked, std::string& failure) {
  for (std::size_t n = 0; n <= bound; ++n) {
    ValueSet X = th::standard_set(n);
    for (const Value& t : m.carrier(X)) {
      ++checked;
      ValueSet least = th::minimal_support(m, t, X);
      auto brute = th::minimal_supports_brute(m, t, X);
      if (brute.size() != 1 || brute.front() != least) {
        failure = t.str() + ": least support " + set_str(least) + ", " + std::to_string(brute.size()) +
                  " minimal supports by search";
        return false;
      }
    }
  }
  return true;
}

}  // namespace

Report theory_command(const std::string& which, const std::string& path, const Params& p) {
  Report r;
  r.command = "theory " + which + " " + path;
  r.params = p;
  th::Theory t = th::load_theory(path);
  if (which == "drop") theory_drop(r, t);
  else if (which == "free") theory_free(r, t, p);
  else if (which == "monos") theory_monos(r, t, p);
  else if (which == "pullbacks") theory_pullbacks(r, t, p);
  else throw std::invalid_argument("unknown theory command '" + which + "'");
  return r;
}

// ---------------------------------------------------------------------------
// coalgebra

Report coalg_terminal(const std::string& functor, int steps, const Params& p) {
  Report r;
  r.command = "coalg terminal " + functor;
  r.params = p;
  co::Functor f = co::parse_functor(functor);
  auto seq = co::terminal_sequence(f, static_cast<std::size_t>(steps));
  json ev{{"stage_sizes", sizes_json(seq.sizes())}, {"steps", steps}};
  if (seq.budget_stop) ev["stop_reason"] = seq.stop_reason;
  if (seq.convergence) {
    ev["convergence"] = *seq.convergence;
    ev["summary"] = "converges at step " + std::to_string(*seq.convergence) + " with " +
                    std::to_string(seq.stages[*seq.convergence].size()) + " elements; sizes " + join(seq.sizes());
    r.add("terminal sequence of " + co::print(f), "terminal sequence", Verdict::Pass, ev);
  } else {
    ev["summary"] = "no convergence within " + std::to_string(steps) + " steps; sizes " + join(seq.sizes()) +
                    (seq.budget_stop ? "; " + seq.stop_reason : "");
    r.add("terminal sequence of " + co::print(f), "terminal sequence", Verdict::Unknown, ev);
  }
  bool coherent = true;
  for (std::size_t k = 2; k < seq.stages.size(); ++k)
    coherent = coherent && co::connector_between(seq, k, k - 2) == co::direct_connector(seq, k, k - 2);
  r.add("connectors compose coherently", "terminal sequence", coherent,
        {{"summary", coherent ? "composite connectors equal the directly computed maps" : "connector mismatch"}});
  return r;
}

Report coalg_final(const std::string& functor, int steps, const Params& p) {
  Report r;
  r.command = "coalg final " + functor;
  r.params = p;
  co::Functor f = co::parse_functor(functor);
  try {
    auto fin = co::final_coalgebra(f, static_cast<std::size_t>(steps), static_cast<std::size_t>(p.size));
    json car = json::array();
    for (std::size_t i = 0; i < fin.carrier.size(); ++i)
      car.push_back({{"state", fin.carrier[i].str()}, {"structure", fin.structure[i].str()}});
    Verdict v = !fin.finality_ok ? Verdict::Fail : fin.finality_complete ? Verdict::Pass : Verdict::Unknown;
    r.add("final coalgebra of " + co::print(f), "final coalgebra", v,
          {{"summary", fin.finality_ok ? "carrier of " + std::to_string(fin.carrier.size()) +
                                             " elements; unique morphisms from " +
                                             std::to_string(fin.coalgebras_checked) + " coalgebras of size <= " +
                                             std::to_string(fin.bound)
                                       : fin.failure},
           {"step", fin.step},
           {"carrier", car},
           {"coalgebras_checked", fin.coalgebras_checked},
           {"bound", fin.bound}});
  } catch (const NotConverged& e) {
    r.add("final coalgebra of " + co::print(f), "final coalgebra", Verdict::Unknown, {{"summary", e.what()}});
  }
  return r;
}

namespace {

bool pf_shaped(const co::Functor& f) {
  using K = co::FunctorExpr::Kind;
  if (f->kind != K::Monad || f->monad != th::Builtin::Semilattice) return false;
  const auto& a = *f->args[0];
  return a.kind == K::Id || (a.kind == K::Prod && a.args[0]->kind == K::Const && a.args[1]->kind == K::Id);
}

bool prob_shaped(const co::Functor& f) {
  using K = co::FunctorExpr::Kind;
  const co::FunctorExpr* d = f.get();
  if (d->kind == K::Prod && d->args[0]->kind == K::Const) d = d->args[1].get();
  return d->kind == K::Monad && d->monad == th::Builtin::Convex && d->args[0]->kind == K::Id;
}

}  // namespace

Report coalg_bisim(const std::string& path, const Params& p) {
  Report r;
  r.command = "coalg bisim " + path;
  r.params = p;
  co::Coalgebra c = co::load_coalgebra(path);
  co::Partition part = co::bisimilarity(c);
  r.add("bisimilarity classes", "bisimilarity", Verdict::Pass,
        {{"summary", std::to_string(part.size()) + " classes over " + std::to_string(c.size()) + " states"},
         {"partition", partition_json(part)}});
  if (pf_shaped(c.functor) && c.size() <= 8) {
    auto brute = co::brute_force_bisimulation_pf(c, c.size() <= 3);
    r.add("agrees with the largest bisimulation by search", "bisimilarity", brute == part,
          {{"summary", brute == part ? "identical partitions" : "search found a different partition"},
           {"search", partition_json(brute)}});
  } else if (prob_shaped(c.functor) && c.size() <= 8) {
    auto brute = co::brute_force_bisimulation_prob(c);
    r.add("agrees with the coarsest probabilistic bisimulation by search", "bisimilarity", brute == part,
          {{"summary", brute == part ? "identical partitions" : "search found a different partition"},
           {"search", partition_json(brute)}});
  }
  return r;
}

Report coalg_weakbisim(const std::string& x, const std::string& y, const std::vector<std::string>& values,
                       const Params& p) {
  Report r;
  r.command = "coalg weakbisim '" + x + "' '" + y + "'";
  r.params = p;
  const std::size_t N = static_cast<std::size_t>(p.bound);
  co::Delay dx = co::parse_delay(x, N), dy = co::parse_delay(y, N);
  std::set<Value> xs;
  for (const std::string& v : values) xs.insert(co::parse_atom(v));
  if (dx.value) xs.insert(*dx.value);
  if (dy.value) xs.insert(*dy.value);
  ValueSet X(xs.begin(), xs.end());
  auto res = co::weak_bisim_delay(dx, dy, N, X, equality());
  std::string stages;
  for (bool b : res.stages) stages += b ? '1' : '0';
  r.add(dx.str() + " ~ " + dy.str(), "weak bisimilarity", res.all_stages,
        {{"summary", std::string(res.all_stages ? "related" : "not related") + " at stages 0.." +
                         std::to_string(N - 1) + " (" + stages + ")"},
         {"stages", res.stages}});
  return r;
}

// ---------------------------------------------------------------------------
// suites

namespace {

void suite_figures(Report& r, const Params& p) {
  kernel::Options opts;
  opts.fuel = p.fuel;
  std::map<std::string, std::pair<bool, bool>> coverage;
  for (const kernel::GoldenCase& c : kernel::golden_corpus()) {
    auto v = kernel::run_golden(c, opts);
    r.add(c.id, c.rule, v.pass, {{"summary", v.detail.empty() ? (c.accept ? "accepted" : "rejected") : v.detail}});
    auto& cov = coverage[c.rule];
    (c.accept ? cov.first : cov.second) = true;
  }
  for (const auto* rules : {&kernel::core_rules(), &kernel::universe_rules()})
    for (const std::string& rule : *rules) {
      auto cov = coverage[rule];
      r.add("coverage of " + rule, rule, cov.first && cov.second,
            {{"summary", std::string(cov.first ? "accepting" : "no accepting") + " and " +
                             (cov.second ? "rejecting" : "no rejecting") + " case"}});
    }
}

void suite_theories(Report& r, const Params& p) {
  const std::size_t bound = static_cast<std::size_t>(p.size);
  for (th::Builtin b : {th::Builtin::Semilattice, th::Builtin::Convex, th::Builtin::Monoid,
                        th::Builtin::CommutativeMonoid, th::Builtin::Truncation}) {
    th::Theory t = th::builtin_theory(b);
    bool drop = th::has_drop_equations(t);
    bool expect_drop = b == th::Builtin::Truncation;
    r.add(t.name + (expect_drop ? " has a drop equation" : " has no drop equations"), "drop equations",
          drop == expect_drop, {{"summary", std::string("drop=") + (drop ? "true" : "false")}});
    Params q = p;
    theory_monos(r, t, q);
    theory_pullbacks(r, t, q);
    if (expect_drop) {
      auto m = th::make_free_model(t);
      auto rep = th::check_preserves_pullbacks_of_monos(*m, bound);
      bool disjoint = rep.counterexample && th::is_disjoint_points_square(*rep.counterexample);
      r.add("truncation counterexample is the two-point square", "preservation of pullbacks of monomorphisms",
            disjoint,
            {{"summary", rep.counterexample ? rep.counterexample->describe() : "no counterexample found"}});
      continue;
    }
    auto m = th::make_free_model(t);
    auto fl = th::check_functor_laws(*m, bound);
    r.add(t.name + " functor laws", "free model", fl.ok,
          {{"summary", fl.ok ? std::to_string(fl.instances) + " instances" : fl.failure}});
    auto ml = th::check_monad_laws(*m, bound);
    r.add(t.name + " monad laws", "free model", ml.ok,
          {{"summary", ml.ok ? std::to_string(ml.instances) + " instances" : ml.failure}});
    auto sn = th::check_support_naturality(*m, bound);
    r.add(t.name + " least support is natural along injections", "least support", sn.ok,
          {{"summary", sn.ok ? std::to_string(sn.instances) + " instances" : sn.failure}});
    std::size_t checked = 0;
    std::string failure;
    bool ok = support_matches_brute(*m, std::min<std::size_t>(bound, 3), checked, failure);
    r.add(t.name + " least support matches search over subsets", "least support", ok,
          {{"summary", ok ? std::to_string(checked) + " elements" : failure}});
  }
  th::Theory custom = th::semilattice_theory();
  custom.builtin = th::Builtin::Custom;
  custom.name = "custom-semilattice";
  th::CustomModel cm(custom, th::Budget{});
  std::vector<std::size_t> counts;
  bool ok = true;
  for (std::size_t n = 0; n <= bound; ++n) {
    counts.push_back(cm.carrier(th::standard_set(n)).size());
    ok = ok && counts.back() == (std::size_t{1} << n);
  }
  r.add("semilattice by congruence closure has 2^n classes", "free model", ok,
        {{"summary", "class counts " + join(counts)}});
}

void suite_coalgebra(Report& r, const Params& p) {
  {
    auto seq = co::terminal_sequence(co::parse_functor("pf(id)"), 5);
    bool ok = seq.sizes() == std::vector<std::size_t>{1, 2, 4, 16, 65536} && !seq.convergence;
    r.add("pf terminal sequence sizes", "terminal sequence", ok,
          {{"summary", "sizes " + join(seq.sizes()) + (seq.budget_stop ? "; " + seq.stop_reason : "")}});
  }
  {
    auto seq = co::terminal_sequence(co::parse_functor("const{a,b}"), 5);
    bool ok = seq.convergence == std::size_t{1} && seq.stages[1].size() == 2;
    r.add("constant functor converges at step 1", "terminal sequence", ok, {{"summary", "sizes " + join(seq.sizes())}});
  }
  {
    auto seq = co::terminal_sequence(co::parse_functor("sum(const{*}, id)"), 6);
    bool ok = !seq.convergence && seq.sizes() == std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7};
    r.add("1 + X terminal sequence grows by one", "terminal sequence", ok, {{"summary", "sizes " + join(seq.sizes())}});
    bool coherent = true;
    for (std::size_t k = 2; k < seq.stages.size(); ++k)
      coherent = coherent && co::connector_between(seq, k, k - 2) == co::direct_connector(seq, k, k - 2);
    r.add("1 + X connectors compose coherently", "terminal sequence", coherent);
  }
  {
    auto fin = co::final_coalgebra(co::parse_functor("const{a,b}"), 5, 3);
    r.add("constant functor final coalgebra", "final coalgebra", fin.finality_ok && fin.finality_complete,
          {{"summary", "unique morphisms from " + std::to_string(fin.coalgebras_checked) + " coalgebras of size <= 3"}});
    bool threw = false;
    try {
      co::final_coalgebra(co::parse_functor("pf(id)"), 5, 3);
    } catch (const NotConverged&) {
      threw = true;
    }
    r.add("pf has no final coalgebra within 5 steps", "final coalgebra", threw);
  }
  for (const char* f : {"sum(const{*}, id)", "prod(const{a,b}, id)", "pf(prod(const{l}, id))"}) {
    auto law = co::check_stage_law(co::parse_functor(f), p.bound);
    std::string rows;
    for (const auto& row : law.rows)
      rows += (rows.empty() ? "" : ", ") + std::to_string(row.fiber_size) + "/" + std::to_string(row.terminal_size);
    r.add(std::string("guarded fixpoint of ") + f + " matches the terminal sequence", "guarded fixpoint", law.ok,
          {{"summary", "fiber/terminal sizes per stage: " + rows}});
  }
  {
    ValueSet A{sym("a")};
    std::size_t total = 0, agree = 0;
    for (std::size_t n = 0; n <= 3; ++n)
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
        auto c = co::pf_coalgebra_from_code(A, n, code);
        ++total;
        if (co::bisimilarity(c) == co::brute_force_bisimulation_pf(c, true)) ++agree;
      }
    r.add("refinement equals search on pf(A x X), |A| = 1, |X| <= 3", "bisimilarity", agree == total,
          {{"summary", std::to_string(agree) + "/" + std::to_string(total) + " coalgebras"}});
  }
  {
    std::mt19937_64 rng(2024);
    std::size_t agree = 0;
    for (int i = 0; i < 50; ++i) {
      auto c = co::random_prob_coalgebra(2 + static_cast<std::size_t>(i % 5), ValueSet{sym("a"), sym("b")}, 4, rng);
      if (co::bisimilarity(c) == co::brute_force_bisimulation_prob(c)) ++agree;
    }
    r.add("refinement equals search on 50 random A x Df(X) coalgebras", "bisimilarity", agree == 50,
          {{"summary", std::to_string(agree) + "/50 coalgebras"}});
  }
  {
    ValueSet X{sym("a"), sym("b")};
    const std::size_t N = static_cast<std::size_t>(p.bound);
    bool ok = true;
    for (std::size_t k = 0; k < N; ++k)
      ok = ok && co::weak_bisim_delay(co::Delay::now(sym("a")), co::Delay{k, sym("a")}, N, X, equality()).all_stages;
    r.add("now a ~ step^k now a for k < N", "weak bisimilarity", ok);
    bool apart = !co::weak_bisim_delay(co::Delay::now(sym("a")), co::Delay::now(sym("b")), N, X, equality()).all_stages;
    r.add("now a and now b are not related", "weak bisimilarity", apart);
    bool consume = true;
    for (std::size_t s = 1; s < N; ++s)
      consume = consume && co::weak_bisim_at(co::Delay{1, sym("a")}, co::Delay{1, sym("b")}, s, N, X, equality()) ==
                               co::weak_bisim_at(co::Delay::now(sym("a")), co::Delay::now(sym("b")), s - 1, N, X,
                                                 equality());
    consume = consume && co::weak_bisim_at(co::Delay{1, sym("a")}, co::Delay{1, sym("b")}, 0, N, X, equality());
    r.add("step clause consumes one stage", "weak bisimilarity", consume);
  }
}

void suite_requirements(Report& r, const Params& p) {
  mo::ModelContext ctx(p.pool, p.bound);
  if (p.pool < 2) throw std::invalid_argument("the requirements suite needs --pool >= 2");
  auto S = ctx.category(mo::Base::Clock, p.pool);
  auto T = ctx.category(mo::Base::Time, p.pool - 1);
  mo::FinPresheaf D = mo::guarded_fixpoint(co::parse_functor("sum(const{*}, id)"), S);
  for (const char* f : {"pf(id)", "df(id)", "list(id)", "bag(id)", "trunc(id)"}) {
    co::Functor F = co::parse_functor(f);
    auto failure = mo::check_forall_functor(F, D, T);
    bool drop = th::has_drop_equations(th::builtin_theory(F->monad));
    Verdict v = failure ? Verdict::Fail : Verdict::Pass;
    std::string summary = failure ? *failure : "T(forall D) -> forall T(D) is a natural bijection";
    if (drop && !failure) {
      v = Verdict::TruncationArtifact;
      summary += "; the theory has a drop equation, so this holds only because the bound is finite";
    }
    r.add(std::string("clock quantification commutes with ") + f + " on D(1)", "quotient-inductive types", v,
          {{"summary", summary}});
  }
  Report e;
  verify_exists(e, p);
  r.append(e);
  Report u;
  verify_unique(u, p);
  r.append(u);
}

}  // namespace

Report suite(const std::string& name, const Params& p) {
  Report r;
  r.command = "suite " + name;
  r.params = p;
  if (name == "requirements") suite_requirements(r, p);
  else if (name == "figures") suite_figures(r, p);
  else if (name == "theories") suite_theories(r, p);
  else if (name == "coalgebra") suite_coalgebra(r, p);
  else throw std::invalid_argument("unknown suite '" + name + "'");
  return r;
}

}  // namespace clott::cli
