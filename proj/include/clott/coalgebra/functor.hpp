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

#include "clott/core/value.hpp"
#include "clott/theories/free_model.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace clott::coalgebra {

using theories::SetFn;

/// Set endofunctors built from constants, the identity, products, sums and
/// free-model monads of builtin theories.
struct FunctorExpr {
  enum class Kind { Const, Id, Prod, Sum, Monad };
  Kind kind = Kind::Id;
  ValueSet constant;                                // Const
  std::vector<std::shared_ptr<const FunctorExpr>> args;  // Prod, Sum: 2; Monad: 1
  theories::Builtin monad = theories::Builtin::Semilattice;
  theories::Budget budget;                          // Monad
};

using Functor = std::shared_ptr<const FunctorExpr>;

Functor f_const(ValueSet c);
Functor f_id();
Functor f_prod(Functor a, Functor b);
Functor f_sum(Functor a, Functor b);
Functor f_monad(theories::Builtin b, Functor inner, theories::Budget budget = {});

/// Prefix grammar: id | const{a,b,..} | fin(n) | prod(F,G) | sum(F,G) |
/// pf(F) | df(F) | df[D](F) | list(F) | list[L](F) | bag(F) | bag[L](F) | trunc(F).
Functor parse_functor(std::string_view text);
/// Parses one functor starting at pos and advances pos past it.
Functor parse_functor_at(std::string_view text, std::size_t& pos);
std::string print(const Functor& f);

/// F(X) as a sorted set.
ValueSet functor_eval(const Functor& f, const ValueSet& X, std::size_t max_elements = 1u << 20);
/// F(f) applied to an element t of F(X).
Value functor_map(const Functor& F, const SetFn& f, const Value& t);
/// Predicted |F(X)| for |X| = n, saturating; nullopt when not cheaply known.
std::optional<std::size_t> functor_size(const Functor& f, std::size_t n);

/// Parses the constant elements used by const{...}: integers and symbols.
Value parse_atom(std::string_view text);

}  // namespace clott::coalgebra
