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

#pragma once

#include <memory>
#include <set>
#include <string>
#include <variant>
#include <map>
#include <vector>

namespace clott::syntax {

/// Sorted, duplicate-free list of clock names.
using ClockSet = std::vector<std::string>;

ClockSet make_clock_set(std::vector<std::string> names);
ClockSet clock_union(const ClockSet& a, const ClockSet& b);
ClockSet clock_minus(const ClockSet& a, const std::string& k);
bool clock_subset(const ClockSet& a, const ClockSet& b);
bool clock_member(const ClockSet& a, const std::string& k);

enum class Kind {
  Var,
  Lam,       // name; args = {domain or null, body}
  App,       // args = {fun, arg}
  Ann,       // args = {term, type}
  Pi,        // name; args = {A, B}
  Sigma,     // name; args = {A, B}
  Pair,      // args = {a, b}
  Fst,
  Snd,
  Sum,       // args = {A, B}
  Inl,
  Inr,
  Case,      // name = left binder, name2 = right binder; args = {scrut, l, r}
  Unit,
  Tt,
  Empty,
  Abort,     // args = {t}
  Id,        // args = {A, a, b}
  Refl,
  Later,     // name = tick binder, clock; args = {A}
  TickLam,   // name = tick, clock (optional); args = {body}
  TickApp,   // name = tick; args = {t}
  Forall,    // name = clock binder; args = {A}
  ClockLam,  // name = clock binder; args = {body}
  ClockApp,  // name = clock; args = {t}
  Fix,       // clock (optional)
  Univ,      // delta
  PropUniv,  // delta
  El,        // delta; args = {t}
  PEl,       // delta; args = {t}
  Incl,      // delta => delta2; args = {t}
  CodeLater,   // name = tick binder, clock; args = {A}
  CodeForall,  // name = clock binder; args = {A}
  CodePi,      // name; args = {a, b}
  CodeSigma,   // name; args = {a, b}
  CodeSum,     // args = {a, b}
  CodeId,      // args = {a, u, v}
  CodeUnit,
  CodeEmpty,
  PTop,
  PBot,
  PAnd,
  POr,
  PExists,  // name; args = {a, p}
  PAll,     // name; args = {a, p}
  PEq,      // args = {a, u, v}
  Tirr,     // args = {t}
  Cirr,     // args = {A}
  Force,    // name = clock binder; args = {A}
};

struct Node;
using Term = std::shared_ptr<const Node>;

struct Node {
  Kind kind;
  std::string name;
  std::string name2;
  std::string clock;
  ClockSet delta;
  ClockSet delta2;
  std::vector<Term> args;
};

const char* kind_name(Kind k);

/// Name used for binders that do not occur (non-dependent arrows, products, later).
inline constexpr const char* kAnon = "_";

// Constructors.
Term var(std::string x);
Term lam(std::string x, Term dom, Term body);
Term app(Term f, Term a);
Term app(Term f, std::initializer_list<Term> args);
Term ann(Term t, Term type);
Term pi(std::string x, Term a, Term b);
Term arrow(Term a, Term b);
Term sigma(std::string x, Term a, Term b);
Term product(Term a, Term b);
Term pair(Term a, Term b);
Term fst(Term p);
Term snd(Term p);
Term sum(Term a, Term b);
Term inl(Term a);
Term inr(Term a);
Term case_of(Term s, std::string x, Term l, std::string y, Term r);
Term unit_type();
Term tt();
Term empty_type();
Term abort_of(Term t);
Term id_type(Term a, Term x, Term y);
Term refl();
Term later(std::string tick, std::string clock, Term a);
Term later(std::string clock, Term a);
Term tick_lam(std::string tick, std::string clock, Term body);
Term tick_app(Term t, std::string tick);
Term forall_clk(std::string clock, Term a);
Term clock_lam(std::string clock, Term body);
Term clock_app(Term t, std::string clock);
Term fix(std::string clock = {});
Term univ(ClockSet delta);
Term prop_univ(ClockSet delta);
Term el(ClockSet delta, Term t);
Term pel(ClockSet delta, Term t);
Term incl(ClockSet from, ClockSet to, Term t);
Term code_later(std::string tick, std::string clock, Term a);
Term code_forall(std::string clock, Term a);
Term code_pi(std::string x, Term a, Term b);
Term code_sigma(std::string x, Term a, Term b);
Term code_sum(Term a, Term b);
Term code_id(Term a, Term u, Term v);
Term code_unit();
Term code_empty();
Term p_top();
Term p_bot();
Term p_and(Term p, Term q);
Term p_or(Term p, Term q);
Term p_exists(std::string x, Term a, Term p);
Term p_all(std::string x, Term a, Term p);
Term p_eq(Term a, Term u, Term v);
Term tirr(Term t);
Term cirr(Term a);
Term force(std::string clock, Term a);

/// Rebuilds a node with new children, keeping every other field.
Term with_args(const Term& t, std::vector<Term> args);

struct FreeNames {
  std::set<std::string> vars;
  std::set<std::string> clocks;
  std::set<std::string> ticks;

  bool contains(const std::string& n) const {
    return vars.count(n) || clocks.count(n) || ticks.count(n);
  }
  std::set<std::string> all() const;
};

FreeNames free_names(const Term& t);
bool occurs_free(const std::string& name, const Term& t);

/// A substitution maps names to terms (variables) or to names (ticks, clocks,
/// and variable renamings). Applied simultaneously and capture-avoiding.
using Replacement = std::variant<Term, std::string>;
using Subst = std::map<std::string, Replacement>;

Term apply_subst(const Term& t, const Subst& s);
Term subst(const Term& t, const std::string& x, const Term& u);
Term subst_tick(const Term& t, const std::string& from, const std::string& to);
Term subst_clock(const Term& t, const std::string& from, const std::string& to);
/// Renames one bound occurrence name; same as subst_tick/subst_clock, but also
/// usable for variables.
Term rename(const Term& t, const std::string& from, const std::string& to);

bool alpha_eq(const Term& a, const Term& b);

/// Returns base or base with a numeric suffix, avoiding every name in avoid.
std::string fresh_name(const std::string& base, const std::set<std::string>& avoid);

/// Binder structure of a node kind.
struct BinderInfo {
  enum class Sort { None, Var, Tick, Clock };
  Sort first = Sort::None;    // sort of node.name when it is a binder
  int first_scope = -1;       // index of the child in which node.name is bound
  Sort second = Sort::None;   // sort of node.name2 when it is a binder
  int second_scope = -1;
};
BinderInfo binder_info(Kind k);

std::size_t term_size(const Term& t);

}  // namespace clott::syntax
