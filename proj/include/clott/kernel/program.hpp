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

#include "clott/kernel/checker.hpp"
#include "clott/syntax/parse.hpp"

#include <string>
#include <vector>

namespace clott::kernel {

enum class Outcome { Ok, Failed, Unknown };

struct DeclResult {
  int line = 0;
  std::string summary;
  Outcome outcome = Outcome::Ok;
  std::string message;
  std::string rule;  // rule named by the type error, if any
};

struct ProgramResult {
  std::vector<DeclResult> decls;
  Context context;
  bool ok() const;
  bool any_failed() const;
  bool any_unknown() const;
};

/// Checks each declaration in order. A "fail" declaration succeeds exactly
/// when checking it raises a type error.
ProgramResult run_program(const std::vector<syntax::Decl>& decls, Checker& checker);
ProgramResult run_program(std::string_view text, Checker& checker);

}  // namespace clott::kernel
