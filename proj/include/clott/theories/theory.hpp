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

#include "clott/syntax/alg_term.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace clott::theories {

using syntax::AlgTerm;
using syntax::Signature;

enum class Builtin { Custom, Semilattice, Convex, Monoid, CommutativeMonoid, Truncation };

const char* to_string(Builtin b);
Builtin builtin_from_string(const std::string& s);

struct Equation {
  AlgTerm lhs;
  AlgTerm rhs;
};

struct Theory {
  std::string name;
  Signature signature;
  std::vector<Equation> equations;
  Builtin builtin = Builtin::Custom;
};

/// Parses the .thy format: "op name/arity", "op name[i]/arity" for an indexed
/// family, "eq lhs = rhs", "builtin tag", with "--" line comments.
Theory parse_theory(std::string_view text, std::string name = {});
Theory load_theory(const std::string& path);

bool is_drop_equation(const Equation& eq);
bool has_drop_equations(const Theory& t);
/// Indices of the drop equations, in declaration order.
std::vector<std::size_t> drop_equations(const Theory& t);

Theory semilattice_theory();
Theory convex_theory();
Theory monoid_theory();
Theory commutative_monoid_theory();
Theory truncation_theory();
Theory builtin_theory(Builtin b);

std::string print(const Equation& eq);

}  // namespace clott::theories
