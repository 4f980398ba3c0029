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

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace clott::syntax {

/// Term over an algebraic signature. Operations may carry an index, as in
/// the family oplus[p]; the index is kept verbatim.
struct AlgTerm {
  bool is_var = true;
  std::string name;
  std::string index;
  std::vector<AlgTerm> args;

  static AlgTerm variable(std::string x) { return AlgTerm{true, std::move(x), {}, {}}; }
  static AlgTerm op(std::string f, std::vector<AlgTerm> args, std::string index = {}) {
    return AlgTerm{false, std::move(f), std::move(index), std::move(args)};
  }

  friend bool operator==(const AlgTerm&, const AlgTerm&) = default;
  friend auto operator<=>(const AlgTerm&, const AlgTerm&) = default;
};

/// Operation name (without index) to arity.
using Signature = std::map<std::string, int>;

/// Identifiers declared in the signature are operations, all others are
/// variables. Throws ParseError on arity mismatch.
AlgTerm parse_alg_term(std::string_view text, const Signature& sig);
std::string print(const AlgTerm& t);
std::set<std::string> free_vars(const AlgTerm& t);
std::size_t leaf_count(const AlgTerm& t);

}  // namespace clott::syntax
