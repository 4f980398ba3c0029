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

#include "clott/core/errors.hpp"
#include "clott/syntax/term.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace clott::syntax {

/// Parses one term. Throws ParseError with a line/column position.
Term parse_term(std::string_view text);

/// Canonical printer; parse_term(print(t)) is alpha-equivalent to t.
std::string print(const Term& t);

struct Decl {
  enum class Kind { Clock, Tick, Var, Def, Check, Conv };
  Kind kind;
  std::string name;   // clock/tick/var/def name
  std::string clock;  // tick declarations
  Term type;          // var/def/check/conv; null for an inferring check or a type conversion
  Term term;          // def body, check subject, conv lhs
  Term term2;         // conv rhs
  bool expect_failure = false;
  int line = 0;
};

/// Parses a .clott program: one declaration per chunk, chunks start with a
/// declaration keyword in column 0.
std::vector<Decl> parse_program(std::string_view text);

bool is_keyword(const std::string& word);

}  // namespace clott::syntax
