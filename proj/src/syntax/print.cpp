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

#include "clott/syntax/parse.hpp"

namespace clott::syntax {

namespace {

std::string clocks(const ClockSet& d) {
  std::string s = "{";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ", ";
    s += d[i];
  }
  return s + "}";
}

int level_of(const Term& t) {
  switch (t->kind) {
    case Kind::Lam:
    case Kind::TickLam:
    case Kind::ClockLam:
    case Kind::Forall:
    case Kind::CodeForall:
    case Kind::Force:
    case Kind::CodePi:
    case Kind::CodeSigma:
    case Kind::PExists:
    case Kind::PAll:
    case Kind::Case:
    case Kind::Pi:
      return 0;
    case Kind::Later:
    case Kind::CodeLater:
      return (t->name != kAnon && occurs_free(t->name, t->args[0])) ? 0 : 3;
    case Kind::Sum:
    case Kind::CodeSum:
    case Kind::POr:
      return 1;
    case Kind::Sigma:
    case Kind::PAnd:
      return 2;
    case Kind::App:
    case Kind::Inl:
    case Kind::Inr:
    case Kind::Fst:
    case Kind::Snd:
    case Kind::Abort:
    case Kind::Tirr:
    case Kind::Cirr:
    case Kind::Id:
    case Kind::CodeId:
    case Kind::PEq:
      return 3;
    default:
      return 4;
  }
}

bool dependent(const Term& t, int scope) { return t->name != kAnon && occurs_free(t->name, t->args[scope]); }

std::string pr(const Term& t, int ctx);

std::string operand(const Term& t, int ctx) {
  // An annotated variable in operand position would read back as a binder.
  if (t->kind == Kind::Ann && t->args[0]->kind == Kind::Var) return "(" + pr(t, 4) + ")";
  return pr(t, ctx);
}

std::string body(const Term& t) {
  const Node& n = *t;
  const auto& a = n.args;
  switch (n.kind) {
    case Kind::Var: return n.name;
    case Kind::Lam:
      if (a[0]) return "fun (" + n.name + " : " + pr(a[0], 0) + ") -> " + pr(a[1], 0);
      return "fun " + n.name + " -> " + pr(a[1], 0);
    case Kind::App: return pr(a[0], 3) + " " + pr(a[1], 4);
    case Kind::Ann: return "(" + pr(a[0], 0) + " : " + pr(a[1], 0) + ")";
    case Kind::Pi:
      if (dependent(t, 1)) return "(" + n.name + " : " + pr(a[0], 0) + ") -> " + pr(a[1], 0);
      return operand(a[0], 1) + " -> " + pr(a[1], 0);
    case Kind::Sigma:
      if (dependent(t, 1)) return "(" + n.name + " : " + pr(a[0], 0) + ") * " + pr(a[1], 2);
      return operand(a[0], 3) + " * " + pr(a[1], 2);
    case Kind::Pair: return "(" + pr(a[0], 0) + ", " + pr(a[1], 0) + ")";
    case Kind::Fst: return "fst " + pr(a[0], 4);
    case Kind::Snd: return "snd " + pr(a[0], 4);
    case Kind::Sum: return pr(a[0], 2) + " + " + pr(a[1], 1);
    case Kind::Inl: return "inl " + pr(a[0], 4);
    case Kind::Inr: return "inr " + pr(a[0], 4);
    case Kind::Case:
      return "case " + pr(a[0], 0) + " of inl " + n.name + " -> " + pr(a[1], 0) + " | inr " + n.name2 + " -> " +
             pr(a[2], 0);
    case Kind::Unit: return "Unit";
    case Kind::Tt: return "tt";
    case Kind::Empty: return "Empty";
    case Kind::Abort: return "abort " + pr(a[0], 4);
    case Kind::Id: return "Id " + pr(a[0], 4) + " " + pr(a[1], 4) + " " + pr(a[2], 4);
    case Kind::Refl: return "refl";
    case Kind::Later:
    case Kind::CodeLater: {
      const char* kw = n.kind == Kind::Later ? "later" : "later^";
      if (dependent(t, 0)) return std::string(kw) + " (" + n.name + " : " + n.clock + ") . " + pr(a[0], 0);
      return std::string(kw) + " " + n.clock + " " + pr(a[0], 4);
    }
    case Kind::TickLam:
      if (n.clock.empty()) return "tick " + n.name + " -> " + pr(a[0], 0);
      return "tick " + n.name + " : " + n.clock + " -> " + pr(a[0], 0);
    case Kind::TickApp:
    case Kind::ClockApp: {
      std::string head = a[0]->kind == Kind::Fix ? "(" + pr(a[0], 4) + ")" : pr(a[0], 4);
      if (n.kind == Kind::TickApp) return head + " [" + n.name + "]";
      return head + " {" + n.name + "}";
    }
    case Kind::Forall: return "forall-clk " + n.name + " . " + pr(a[0], 0);
    case Kind::ClockLam: return "clock " + n.name + " -> " + pr(a[0], 0);
    case Kind::Fix: return n.clock.empty() ? "fix" : "fix{" + n.clock + "}";
    case Kind::Univ: return "U" + clocks(n.delta);
    case Kind::PropUniv: return "Prop" + clocks(n.delta);
    case Kind::El: return "El" + clocks(n.delta) + "(" + pr(a[0], 0) + ")";
    case Kind::PEl: return "Prf" + clocks(n.delta) + "(" + pr(a[0], 0) + ")";
    case Kind::Incl: {
      std::string s = "In{";
      for (std::size_t i = 0; i < n.delta.size(); ++i) s += (i ? ", " : "") + n.delta[i];
      s += n.delta.empty() ? "=> " : " => ";
      for (std::size_t i = 0; i < n.delta2.size(); ++i) s += (i ? ", " : "") + n.delta2[i];
      return s + "}(" + pr(a[0], 0) + ")";
    }
    case Kind::CodeForall: return "forall-clk^ " + n.name + " . " + pr(a[0], 0);
    case Kind::CodePi: return "Pi^ (" + n.name + " : " + pr(a[0], 0) + ") . " + pr(a[1], 0);
    case Kind::CodeSigma: return "Sigma^ (" + n.name + " : " + pr(a[0], 0) + ") . " + pr(a[1], 0);
    case Kind::CodeSum: return pr(a[0], 2) + " +^ " + pr(a[1], 1);
    case Kind::CodeId: return "Id^ " + pr(a[0], 4) + " " + pr(a[1], 4) + " " + pr(a[2], 4);
    case Kind::CodeUnit: return "Unit^";
    case Kind::CodeEmpty: return "Empty^";
    case Kind::PTop: return "Top^";
    case Kind::PBot: return "Bot^";
    case Kind::PAnd: return pr(a[0], 3) + " /\\ " + pr(a[1], 2);
    case Kind::POr: return pr(a[0], 2) + " \\/ " + pr(a[1], 1);
    case Kind::PExists: return "exists^ (" + n.name + " : " + pr(a[0], 0) + ") . " + pr(a[1], 0);
    case Kind::PAll: return "all^ (" + n.name + " : " + pr(a[0], 0) + ") . " + pr(a[1], 0);
    case Kind::PEq: return "eq^ " + pr(a[0], 4) + " " + pr(a[1], 4) + " " + pr(a[2], 4);
    case Kind::Tirr: return "tirr " + pr(a[0], 4);
    case Kind::Cirr: return "cirr " + pr(a[0], 4);
    case Kind::Force: return "force " + n.name + " . " + pr(a[0], 0);
  }
  return "?";
}

std::string pr(const Term& t, int ctx) {
  if (!t) return "<null>";
  std::string s = body(t);
  if (level_of(t) < ctx) return "(" + s + ")";
  return s;
}

}  // namespace

std::string print(const Term& t) { return pr(t, 0); }

}  // namespace clott::syntax
