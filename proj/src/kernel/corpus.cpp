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

#include "clott/kernel/corpus.hpp"

namespace clott::kernel {

const std::vector<std::string>& core_rules() {
  static const std::vector<std::string> rules = {"ctx-clock", "ctx-tick", "tick-app", "tick-abs",
                                                 "clock-abs", "clock-app", "fix",     "var"};
  return rules;
}

const std::vector<std::string>& universe_rules() {
  static const std::vector<std::string> rules = {"univ-form", "el-form", "incl", "code-forall", "code-later",
                                                 "prop-form", "prf-form", "prop-incl", "prop-code-forall",
                                                 "prop-code-later", "prop-exists", "prop-all", "prop-eq"};
  return rules;
}

const std::vector<GoldenCase>& golden_corpus() {
  static const std::vector<GoldenCase> corpus = {
      // Context formation.
      {"ctx-clock/ok", "core", "ctx-clock", true, "", "clock k"},
      {"ctx-clock/after-tick", "core", "ctx-clock", true, "", "clock k\ntick a : k\nclock j"},
      {"ctx-clock/dup", "core", "ctx-clock", false, "ctx-fresh", "clock k\nclock k"},
      {"ctx-tick/ok", "core", "ctx-tick", true, "", "clock k\ntick a : k"},
      {"ctx-tick/no-clock", "core", "ctx-tick", false, "ctx-tick", "tick a : k"},
      {"ctx-tick/not-a-clock", "core", "ctx-tick", false, "ctx-tick", "var x : Unit\ntick a : x"},

      // Tick application.
      {"tick-app/ok", "core", "tick-app", true, "",
       "clock k\nvar x : later k Unit\ntick a : k\ncheck x [a] : Unit"},
      {"tick-app/suffix", "core", "tick-app", true, "",
       "clock k\nvar x : later k Unit\ntick a : k\nvar y : Unit\ncheck x [a] : Unit"},
      {"tick-app/dependent", "core", "tick-app", true, "",
       "clock k\nvar B : later k U{k}\nvar x : later (a : k) . El{k}(B [a])\ntick b : k\n"
       "check x [b] : El{k}(B [b])"},
      {"tick-app/applicative", "core", "tick-app", true, "",
       "clock k\nvar A : U{k}\nvar B : El{k}(A) -> U{k}\n"
       "check fun f x -> tick a : k -> f [a] (x [a])\n"
       "  : later k ((x : El{k}(A)) -> El{k}(B x)) -> (y : later k El{k}(A)) -> later (a : k) . El{k}(B (y [a]))"},
      {"tick-app/split", "core", "tick-app", false, "tick-app",
       "clock k\ntick a : k\nvar x : later k Unit\ncheck x [a] : Unit"},
      {"tick-app/clock-mismatch", "core", "tick-app", false, "tick-app",
       "clock k\nclock j\nvar x : later k Unit\ntick a : j\ncheck x [a] : Unit"},
      {"tick-app/not-a-tick", "core", "tick-app", false, "tick-app", "clock k\nvar x : later k Unit\ncheck x [k] : Unit"},

      // Tick abstraction.
      {"tick-abs/ok", "core", "tick-abs", true, "", "clock k\ncheck tick a : k -> tt : later k Unit"},
      {"tick-abs/next", "core", "tick-abs", true, "",
       "clock k\nvar A : U{k}\ncheck fun x -> tick a : k -> x : El{k}(A) -> later k El{k}(A)"},
      {"tick-abs/infer", "core", "tick-abs", true, "", "clock k\ncheck tick a : k -> tt"},
      {"tick-abs/clock-mismatch", "core", "tick-abs", false, "tick-abs",
       "clock k\nclock j\ncheck tick a : j -> tt : later k Unit"},
      {"tick-abs/not-later", "core", "tick-abs", false, "tick-abs", "clock k\ncheck tick a : k -> tt : Unit"},

      // Clock abstraction and application.
      {"clock-abs/ok", "core", "clock-abs", true, "", "check clock k -> tick a : k -> tt : forall-clk k . later k Unit"},
      {"clock-abs/infer", "core", "clock-abs", true, "", "check clock k -> tick a : k -> tt"},
      {"clock-abs/not-forall", "core", "clock-abs", false, "clock-abs", "check clock k -> tt : Unit"},
      {"clock-app/ok", "core", "clock-app", true, "",
       "var f : forall-clk k . later k Unit\nclock j\ncheck f {j} : later j Unit"},
      {"clock-app/not-a-clock", "core", "clock-app", false, "clock-app",
       "var f : forall-clk k . later k Unit\ncheck f {j} : Unit"},
      {"clock-app/tick-given", "core", "clock-app", false, "clock-app",
       "clock k\ntick a : k\nvar f : forall-clk k . later k Unit\ncheck f {a} : Unit"},

      // Guarded fixed points.
      {"fix/ok", "core", "fix", true, "", "clock k\ncheck fix : (later k Unit -> Unit) -> Unit"},
      {"fix/applied", "core", "fix", true, "", "clock k\ncheck fix (fun (x : later k Unit) -> tt) : Unit"},
      {"fix/stream", "core", "fix", true, "",
       "clock k\nvar A : U{k}\n"
       "def Str : U{k} := fix (fun (s : later k U{k}) -> Sigma^ (h : A) . later^ (a : k) . s [a])\n"
       "var x : El{k}(A)\n"
       "check fix (fun (xs : later k El{k}(Str)) -> (x, xs)) : El{k}(Str)"},
      {"fix/mismatch", "core", "fix", false, "fix", "clock k\ncheck fix : (later k Unit -> Unit) -> Empty"},
      {"fix/annotation", "core", "fix", false, "fix", "clock k\nclock j\ncheck fix{j} : (later k Unit -> Unit) -> Unit"},
      {"fix/not-later", "core", "fix", false, "fix", "check fix : (Unit -> Unit) -> Unit"},

      // Variables.
      {"var/ok", "core", "var", true, "", "var x : Unit\ncheck x : Unit"},
      {"var/behind-tick", "core", "var", true, "", "clock k\nvar x : Unit\ntick a : k\ncheck x : Unit"},
      {"var/unbound", "core", "var", false, "var", "check y : Unit"},
      {"var/clock", "core", "var", false, "var", "clock k\ncheck k : Unit"},

      // Universes.
      {"univ-form/ok", "universe", "univ-form", true, "", "clock k\nclock j\nvar X : U{k, j}"},
      {"univ-form/empty", "universe", "univ-form", true, "", "var X : U{}"},
      {"univ-form/unknown-clock", "universe", "univ-form", false, "univ-form", "var X : U{k}"},
      {"el-form/ok", "universe", "el-form", true, "", "clock k\nvar a : U{k}\nvar x : El{k}(a)"},
      {"el-form/implicit", "universe", "el-form", true, "", "clock k\nvar a : U{k}\nvar x : a"},
      {"el-form/unknown-clock", "universe", "el-form", false, "el-form", "var x : El{j}(Unit^)"},
      {"el-form/not-a-code", "universe", "el-form", false, "conversion", "clock k\nvar x : El{k}(tt)"},
      {"incl/ok", "universe", "incl", true, "", "clock k\ncheck In{ => k}(Unit^) : U{k}"},
      {"incl/var", "universe", "incl", true, "", "clock k\nvar a : U{}\ncheck In{ => k}(a) : U{k}"},
      {"incl/not-subset", "universe", "incl", false, "incl", "clock k\nvar a : U{k}\ncheck In{k => }(a) : U{}"},
      {"code-forall/ok", "universe", "code-forall", true, "", "check forall-clk^ k . later^ k Unit^ : U{}"},
      {"code-forall/infer", "universe", "code-forall", true, "", "check forall-clk^ k . later^ k In{ => k}(Unit^)"},
      {"code-forall/outer-clock", "universe", "code-forall", false, "code-later",
       "clock j\ncheck forall-clk^ k . later^ j Unit^ : U{}"},
      {"code-later/ok", "universe", "code-later", true, "", "clock k\ncheck later^ k Unit^ : U{k}"},
      {"code-later/dependent", "universe", "code-later", true, "",
       "clock k\nvar B : later k U{k}\ncheck later^ (a : k) . B [a] : U{k}"},
      {"code-later/not-in-delta", "universe", "code-later", false, "code-later", "clock k\ncheck later^ k Unit^ : U{}"},
      {"code-later/not-in-delta-infer", "universe", "code-later", false, "code-later",
       "clock k\nclock j\nvar a : U{j}\ncheck later^ k a"},

      // Universes of propositions.
      {"prop-form/ok", "prop", "prop-form", true, "", "clock k\nvar p : Prop{k}"},
      {"prop-form/unknown-clock", "prop", "prop-form", false, "prop-form", "var p : Prop{z}"},
      {"prf-form/ok", "prop", "prf-form", true, "", "clock k\nvar p : Prop{k}\nvar h : Prf{k}(p)"},
      {"prf-form/not-a-prop", "prop", "prf-form", false, "conversion", "clock k\nvar a : U{k}\nvar h : Prf{k}(a)"},
      {"prop-incl/ok", "prop", "prop-incl", true, "", "clock k\nvar p : Prop{}\ncheck In{ => k}(p) : Prop{k}"},
      {"prop-incl/not-subset", "prop", "prop-incl", false, "incl",
       "clock k\nvar p : Prop{k}\ncheck In{k => }(p) : Prop{}"},
      {"prop-code-forall/ok", "prop", "prop-code-forall", true, "", "check forall-clk^ k . later^ k Top^ : Prop{}"},
      {"prop-code-forall/outer-clock", "prop", "prop-code-forall", false, "code-later",
       "clock j\ncheck forall-clk^ k . later^ j Top^ : Prop{}"},
      {"prop-code-later/ok", "prop", "prop-code-later", true, "",
       "clock k\nvar p : Prop{k}\ncheck later^ k p : Prop{k}"},
      {"prop-code-later/not-in-delta", "prop", "prop-code-later", false, "code-later",
       "clock k\ncheck later^ k Top^ : Prop{}"},
      {"prop-exists/ok", "prop", "prop-exists", true, "",
       "clock k\nvar a : U{k}\nvar phi : El{k}(a) -> Prop{k}\ncheck exists^ (x : a) . phi x : Prop{k}"},
      {"prop-exists/wrong-universe", "prop", "prop-exists", false, "conversion",
       "clock k\nvar a : U{k}\nvar phi : El{k}(a) -> Prop{k}\ncheck exists^ (x : a) . phi x : Prop{}"},
      {"prop-all/ok", "prop", "prop-all", true, "",
       "clock k\nvar a : U{k}\nvar phi : El{k}(a) -> Prop{k}\ncheck all^ (x : a) . phi x /\\ Top^ : Prop{k}"},
      {"prop-all/type-code", "prop", "prop-all", false, "conversion",
       "clock k\nvar a : U{k}\ncheck all^ (x : a) . a : Prop{k}"},
      {"prop-eq/ok", "prop", "prop-eq", true, "",
       "clock k\nvar a : U{k}\nvar u : El{k}(a)\nvar s : El{k}(a)\ncheck eq^ a u s : Prop{k}"},
      {"prop-eq/ill-typed", "prop", "prop-eq", false, "conversion",
       "clock k\nvar a : U{k}\nvar b : U{k}\nvar u : El{k}(a)\nvar w : El{k}(b)\ncheck eq^ a u w : Prop{k}"},

      // Judgemental equalities for codes.
      {"eq/el-incl", "equality", "el-incl", true, "", "clock k\nvar a : U{}\nconv El{k}(In{ => k}(a)) == El{}(a)"},
      {"eq/el-later", "equality", "el-later", true, "",
       "clock k\nvar a : U{k}\nconv El{k}(later^ k a) == later k El{k}(a)"},
      {"eq/el-forall", "equality", "el-forall", true, "",
       "conv El{}(forall-clk^ k . later^ k Unit^) == forall-clk k . later k Unit"},
      {"eq/incl-later", "equality", "incl-later", true, "",
       "clock k\nclock j\nvar a : U{k}\nconv In{k => k, j}(later^ k a) == later^ k In{k => k, j}(a) : U{k, j}"},
      {"eq/prf-eq", "equality", "prf-eq", true, "",
       "clock k\nvar a : U{k}\nvar u : El{k}(a)\nconv Prf{k}(eq^ a u u) == Id El{k}(a) u u"},
      {"eq/delay-unfold", "equality", "fix-unfold", true, "",
       "clock k\nvar A : U{k}\ndef D : U{k} := fix (fun (x : later k U{k}) -> A +^ later^ (a : k) . x [a])\n"
       "conv D == A +^ later^ (a : k) . D : U{k}"},
      {"eq/delay-type", "equality", "fix-unfold", true, "",
       "clock k\nvar A : U{k}\ndef D : U{k} := fix (fun (x : later k U{k}) -> A +^ later^ (a : k) . x [a])\n"
       "conv El{k}(D) == El{k}(A) + later k El{k}(D)"},
      {"eq/distinct-codes", "equality", "conversion", false, "conversion",
       "clock k\nvar a : U{k}\nconv later^ k a == a : U{k}"},

      // Axioms.
      {"tirr/ok", "axiom", "tirr", true, "",
       "clock k\nvar A : U{k}\nvar t : later k El{k}(A)\n"
       "check tirr t : later (a : k) . later (b : k) . Id El{k}(A) (t [a]) (t [b])"},
      {"tirr/dependent", "axiom", "tirr", false, "tirr",
       "clock k\nvar B : later k U{k}\nvar t : later (a : k) . El{k}(B [a])\ncheck tirr t"},
      {"cirr/ok", "axiom", "cirr", true, "",
       "var A : U{}\n"
       "check cirr El{}(A) : (g : (forall-clk k . El{}(A)) -> El{}(A)) * ((x : El{}(A)) -> Id El{}(A) (g (clock k -> x)) x)"
       " * ((y : forall-clk k . El{}(A)) -> Id (forall-clk k . El{}(A)) (clock k -> g y) y)"},
      {"cirr/not-a-type", "axiom", "cirr", false, "type-form", "check cirr tt"},
      {"force/ok", "axiom", "force", true, "",
       "var A : U{}\n"
       "check force k . El{}(A) : (g : (forall-clk k . later k El{}(A)) -> forall-clk k . El{}(A))"
       " * ((x : forall-clk k . El{}(A)) -> Id (forall-clk k . El{}(A)) (g (clock k -> tick a : k -> x {k})) x)"
       " * ((y : forall-clk k . later k El{}(A)) -> Id (forall-clk k . later k El{}(A))"
       " (clock k -> tick a : k -> (g y) {k}) y)"},
      {"force/clocked", "axiom", "force", true, "", "clock j\nvar B : U{j}\ncheck force k . El{j}(B)"},
      {"force/not-a-type", "axiom", "force", false, "type-form", "check force k . tt"},
  };
  return corpus;
}

GoldenVerdict run_golden(const GoldenCase& c, const Options& opts) {
  GoldenVerdict v{&c, false, {}};
  Checker checker(opts);
  ProgramResult r;
  try {
    r = run_program(c.program, checker);
  } catch (const ParseError& e) {
    v.detail = std::string("parse error: ") + e.what();
    return v;
  }
  if (r.decls.empty()) {
    v.detail = "empty program";
    return v;
  }
  for (std::size_t i = 0; i + 1 < r.decls.size(); ++i) {
    if (r.decls[i].outcome != Outcome::Ok) {
      v.detail = "prelude line " + std::to_string(r.decls[i].line) + ": " + r.decls[i].message;
      return v;
    }
  }
  const DeclResult& last = r.decls.back();
  if (c.accept) {
    v.pass = last.outcome == Outcome::Ok;
    v.detail = v.pass ? "accepted" : last.message;
  } else {
    v.pass = last.outcome == Outcome::Failed && last.rule == c.reject_rule;
    v.detail = last.outcome == Outcome::Failed ? last.message : "accepted, but a rejection was expected";
  }
  return v;
}

}  // namespace clott::kernel
