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

#include "clott/syntax/term.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace clott::kernel {

using syntax::Term;

struct Entry {
  enum class Sort { Var, Clock, Tick };
  Sort sort;
  std::string name;
  Term type;          // Var
  Term value;         // Var with a definition, unfolded by whnf
  std::string clock;  // Tick
};

/// Ordered telescope of variable, clock and tick assumptions.
class Context {
 public:
  Context extend_var(const std::string& x, Term type, Term value = nullptr) const;
  Context extend_clock(const std::string& k) const;
  Context extend_tick(const std::string& a, const std::string& k) const;

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  /// Index of the last entry named x, or -1.
  long index_of(const std::string& x) const;
  const Entry* find(const std::string& x) const;
  bool has_clock(const std::string& k) const;
  bool has_tick(const std::string& a) const;
  Context prefix(std::size_t n) const;
  std::set<std::string> names() const;

 private:
  std::vector<Entry> entries_;
};

}  // namespace clott::kernel
