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

#include "clott/model/checks.hpp"

#include <map>
#include <set>
#include <memory>
#include <string>
#include <string_view>

namespace clott::model {

struct TypeExprM;
using TypeM = std::shared_ptr<const TypeExprM>;

/// Model-level types and propositions. Later, Forall and Mu name a clock; at
/// most one clock is in scope at a time.
struct TypeExprM {
  enum class Kind {
    Const, Clk, Var, Prod, Sum, Arrow, Later, Forall, Mu, Apply,
    Top, Bot, And, Or, Exists, All, Eq, Atom
  };
  Kind kind = Kind::Const;
  ValueSet constant;
  std::string name;   // Var, clock of Later/Forall/Mu, binder of Exists/All, predicate of Atom, left of Eq
  std::string name2;  // right of Eq, argument of Atom
  coalgebra::Functor functor;  // Mu, Apply
  std::vector<TypeM> args;
};

TypeM m_const(ValueSet c);
TypeM m_fin(std::size_t n);
TypeM m_clk();
TypeM m_var(std::string name);
TypeM m_prod(TypeM a, TypeM b);
TypeM m_sum(TypeM a, TypeM b);
TypeM m_arrow(TypeM a, TypeM b);
TypeM m_later(std::string clock, TypeM a);
TypeM m_forall(std::string clock, TypeM a);
TypeM m_mu(std::string clock, coalgebra::Functor f);
TypeM m_apply(coalgebra::Functor f, TypeM a);
TypeM m_top();
TypeM m_bot();
TypeM m_and(TypeM a, TypeM b);
TypeM m_or(TypeM a, TypeM b);
TypeM m_exists(std::string x, TypeM dom, TypeM body);
TypeM m_all(std::string x, TypeM dom, TypeM body);
TypeM m_eq(std::string x, std::string y);
TypeM m_atom(std::string pred, std::string x);

/// Prefix grammar: fin(n) | const{..} | clk | var(X) | prod(A,B) | sum(A,B) |
/// arrow(A,B) | later(k,A) | forall(k,A) | mu(k,F) | apply(F,A) | top | bot |
/// and(p,q) | or(p,q) | exists(x,A,p) | all(x,A,p) | eq(x,y) | atom(P,x),
/// with F in the functor grammar.
TypeM parse_type_m(std::string_view text);
std::string print(const TypeM& t);

struct EvalEnv {
  std::map<std::string, std::function<FinPresheaf(CategoryPtr)>> vars;
  std::map<std::string, PredicateFamily> predicates;
  std::size_t exponential_budget = 200000;
};

/// Number of nested clock quantifiers.
int forall_depth(const TypeM& t);
std::set<std::string> free_clocks(const TypeM& t);

/// Evaluates a type with no free clock on the time category, or with free
/// clock `clock` on the category of elements of Clk. The capacity is the
/// pool size minus the quantifier depth.
FinPresheaf eval_type(ModelContext& ctx, const TypeM& t, const EvalEnv& env = {},
                      const std::string& clock = {});

}  // namespace clott::model
