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
#include "clott/core/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

const char* kGrammar = R"(Grammars:
  functor  id | const{a,b,..} | fin(n) | prod(F,G) | sum(F,G) | pf(F) | df(F) | df[D](F)
           | list(F) | list[L](F) | bag(F) | bag[L](F) | trunc(F)
  type     fin(n) | const{..} | clk | var(X) | prod(A,B) | sum(A,B) | arrow(A,B)
           | later(k,A) | forall(k,A) | mu(k,F) | apply(F,A)
           | top | bot | and(P,Q) | or(P,Q) | exists(x,A,P) | all(x,A,P) | eq(x,y) | atom(p,x)
  delay    [step | step^n]* (now a | never)
  theory   lines 'op name/arity', 'eq lhs = rhs', 'builtin tag', 'name text', '--' comments
  coalg    lines 'functor F', 'states n', 'edge s [a] t', 'label s a', 'prob s t p'
Exit codes: 0 all checks pass, 1 a check failed, 2 usage or parse error, 3 unknown verdicts only.
)";

}  // namespace

int main(int argc, char** argv) {
  using clott::cli::Params;
  using clott::cli::Report;

  CLI::App app{"clott: clocked type theory workbench"};
  app.footer(kGrammar);
  app.require_subcommand(1);
  app.fallthrough();

  Params p;
  std::string json_path;
  bool quiet = false;
  app.add_option("--fuel", p.fuel, "fix unfolding budget")->check(CLI::NonNegativeNumber);
  app.add_option("--pool", p.pool, "clock pool size")->check(CLI::Range(1, 8));
  app.add_option("--bound", p.bound, "truncation bound N")->check(CLI::Range(2, 16));
  app.add_option("--size", p.size, "set size bound for theory and finality checks")->check(CLI::Range(0, 6));
  app.add_option("--depth", p.depth, "term size budget for custom theories (0 = 2|X|-1)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--json", json_path, "write the JSON report to PATH (- for stdout)");
  app.add_flag("-q,--quiet", quiet, "do not print the text report");

  std::function<Report()> run;

  auto* check = app.add_subcommand("check", "typecheck a .clott file");
  std::string file;
  check->add_option("FILE", file)->required();
  check->callback([&] { run = [&] { return clott::cli::run_check(file, p); }; });

  auto* eval = app.add_subcommand("eval", "evaluate a model type");
  std::string type, clock;
  eval->add_option("TYPE", type)->required();
  eval->add_option("--clock", clock, "clock in scope");
  eval->callback([&] { run = [&] { return clott::cli::run_eval(type, clock, p); }; });

  auto* model = app.add_subcommand("model", "presheaf model checks");
  model->require_subcommand(1);
  auto* verify = model->add_subcommand("verify", "run model checks");
  std::string which = "all";
  std::vector<std::string> model_choices = clott::cli::model_suites();
  model_choices.push_back("all");
  verify->add_option("SUITE", which)->check(CLI::IsMember(model_choices));
  verify->callback([&] { run = [&] { return clott::cli::model_verify(which, p); }; });

  auto* theory = app.add_subcommand("theory", "algebraic theory checks");
  theory->require_subcommand(1);
  std::string theory_cmd;
  for (const char* name : {"drop", "free", "monos", "pullbacks"}) {
    auto* sub = theory->add_subcommand(name, std::string("theory ") + name);
    sub->add_option("FILE", file)->required();
    sub->callback([&, name] {
      theory_cmd = name;
      run = [&] { return clott::cli::theory_command(theory_cmd, file, p); };
    });
  }

  auto* coalg = app.add_subcommand("coalg", "coalgebra checks");
  coalg->require_subcommand(1);
  std::string functor;
  int steps = 5;
  auto* terminal = coalg->add_subcommand("terminal", "terminal sequence of a functor");
  terminal->add_option("FUNCTOR", functor)->required();
  terminal->add_option("--steps", steps, "functor applications")->check(CLI::Range(1, 64));
  terminal->callback([&] { run = [&] { return clott::cli::coalg_terminal(functor, steps, p); }; });
  auto* final = coalg->add_subcommand("final", "final coalgebra with bounded finality check");
  final->add_option("FUNCTOR", functor)->required();
  final->add_option("--steps", steps, "functor applications")->check(CLI::Range(1, 64));
  final->callback([&] { run = [&] { return clott::cli::coalg_final(functor, steps, p); }; });
  auto* bisim = coalg->add_subcommand("bisim", "bisimilarity partition of an edge-list coalgebra");
  bisim->add_option("FILE", file)->required();
  bisim->callback([&] { run = [&] { return clott::cli::coalg_bisim(file, p); }; });
  auto* weak = coalg->add_subcommand("weakbisim", "weak bisimilarity of two delay elements");
  std::string x, y;
  std::vector<std::string> values;
  weak->add_option("X", x)->required();
  weak->add_option("Y", y)->required();
  weak->add_option("--values", values, "extra elements of the value set")->delimiter(',');
  weak->callback([&] { run = [&] { return clott::cli::coalg_weakbisim(x, y, values, p); }; });

  auto* suite = app.add_subcommand("suite", "curated check batteries");
  std::string suite_name;
  suite->add_option("NAME", suite_name)->required()->check(CLI::IsMember(clott::cli::suite_names()));
  suite->callback([&] { run = [&] { return clott::cli::suite(suite_name, p); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Report r = run();
    if (!quiet) std::cout << r.text();
    if (json_path == "-") {
      std::cout << r.to_json().dump(2) << "\n";
    } else if (!json_path.empty()) {
      std::ofstream out(json_path);
      if (!out) throw std::runtime_error("cannot write " + json_path);
      out << r.to_json().dump(2) << "\n";
    }
    return r.exit_code();
  } catch (const clott::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const clott::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const clott::FreshClockExhausted& e) {
    std::cerr << "clock pool exhausted: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n" << kGrammar;
    return 2;
  }
}
