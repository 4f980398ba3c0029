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

#include <string>
#include <string_view>
#include <vector>

namespace clott::syntax::detail {

struct Token {
  enum class Type { Ident, Keyword, Symbol, Number, End };
  Type type;
  std::string text;
  int line;
  int col;
};

std::vector<Token> lex(std::string_view text, int first_line = 1);

}  // namespace clott::syntax::detail
