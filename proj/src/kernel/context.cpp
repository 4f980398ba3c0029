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

#include "clott/kernel/context.hpp"

namespace clott::kernel {

Context Context::extend_var(const std::string& x, Term type, Term value) const {
  Context c = *this;
  c.entries_.push_back({Entry::Sort::Var, x, std::move(type), std::move(value), {}});
  return c;
}

Context Context::extend_clock(const std::string& k) const {
  Context c = *this;
  c.entries_.push_back({Entry::Sort::Clock, k, nullptr, nullptr, {}});
  return c;
}

Context Context::extend_tick(const std::string& a, const std::string& k) const {
  Context c = *this;
  c.entries_.push_back({Entry::Sort::Tick, a, nullptr, nullptr, k});
  return c;
}

long Context::index_of(const std::string& x) const {
  for (long i = static_cast<long>(entries_.size()) - 1; i >= 0; --i)
    if (entries_[i].name == x) return i;
  return -1;
}

const Entry* Context::find(const std::string& x) const {
  long i = index_of(x);
  return i < 0 ? nullptr : &entries_[i];
}

bool Context::has_clock(const std::string& k) const {
  const Entry* e = find(k);
  return e && e->sort == Entry::Sort::Clock;
}

bool Context::has_tick(const std::string& a) const {
  const Entry* e = find(a);
  return e && e->sort == Entry::Sort::Tick;
}

Context Context::prefix(std::size_t n) const {
  Context c;
  c.entries_.assign(entries_.begin(), entries_.begin() + static_cast<long>(std::min(n, entries_.size())));
  return c;
}

std::set<std::string> Context::names() const {
  std::set<std::string> out;
  for (const auto& e : entries_) out.insert(e.name);
  return out;
}

}  // namespace clott::kernel
