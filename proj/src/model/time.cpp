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

#include "clott/model/time.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace clott::model {

int TimeObj::size() const { return std::popcount(clocks); }

int fresh_clock(const TimeObj& o, int pool) {
  for (int c = 0; c < pool; ++c)
    if (!o.has(c)) return c;
  return -1;
}

Category::Category(Base base, int pool, int bound, int cap) : base_(base), pool_(pool), bound_(bound), cap_(cap) {
  if (pool < 1 || pool > 8) throw std::invalid_argument("clock pool size must be between 1 and 8");
  if (bound < 1) throw std::invalid_argument("truncation bound must be positive");
  if (cap > pool) cap = cap_ = pool;

  for (std::uint32_t mask = 0; mask < (1u << pool); ++mask) {
    TimeObj o;
    o.clocks = mask;
    if (o.size() > cap) continue;
    if (base == Base::Clock && mask == 0) continue;
    std::vector<int> members;
    for (int c = 0; c < pool; ++c)
      if (mask >> c & 1u) members.push_back(c);
    std::vector<int> values(members.size(), 0);
    while (true) {
      o.theta.assign(pool, -1);
      for (std::size_t i = 0; i < members.size(); ++i) o.theta[members[i]] = values[i];
      if (base == Base::Time) {
        o.lambda = -1;
        objects_.push_back(o);
      } else {
        for (int l : members) {
          o.lambda = l;
          objects_.push_back(o);
        }
      }
      std::size_t i = 0;
      while (i < values.size() && ++values[i] == bound) values[i++] = 0;
      if (i == values.size()) break;
    }
  }
  std::sort(objects_.begin(), objects_.end(), [](const TimeObj& a, const TimeObj& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  for (std::size_t i = 0; i < objects_.size(); ++i) object_index_.emplace(objects_[i], i);

  out_.resize(objects_.size());
  identity_.resize(objects_.size());
  for (std::size_t s = 0; s < objects_.size(); ++s) {
    const TimeObj& a = objects_[s];
    std::vector<int> dom;
    for (int c = 0; c < pool; ++c)
      if (a.has(c)) dom.push_back(c);
    for (std::size_t t = 0; t < objects_.size(); ++t) {
      const TimeObj& b = objects_[t];
      std::vector<int> cod;
      for (int c = 0; c < pool; ++c)
        if (b.has(c)) cod.push_back(c);
      if (!dom.empty() && cod.empty()) continue;
      std::vector<std::size_t> pick(dom.size(), 0);
      while (true) {
        std::vector<int> sigma(pool, -1);
        bool ok = true;
        for (std::size_t i = 0; i < dom.size(); ++i) {
          int e = dom[i], img = cod[pick[i]];
          sigma[e] = img;
          if (b.theta[img] > a.theta[e]) ok = false;
        }
        if (ok && base == Base::Clock && sigma[a.lambda] != b.lambda) ok = false;
        if (ok) {
          std::size_t idx = morphisms_.size();
          morphisms_.push_back({s, t, sigma});
          morphism_index_.emplace(std::make_tuple(s, t, sigma), idx);
          out_[s].push_back(idx);
          if (s == t) {
            bool id = true;
            for (int e : dom) id = id && sigma[e] == e;
            if (id) identity_[s] = idx;
          }
        }
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == cod.size()) pick[i++] = 0;
        if (i == pick.size()) break;
      }
    }
  }
  out_pos_.resize(morphisms_.size());
  for (const auto& list : out_)
    for (std::size_t i = 0; i < list.size(); ++i) out_pos_[list[i]] = i;
}

std::size_t Category::compose(std::size_t f, std::size_t g) const {
  const TimeMor& a = morphisms_[f];
  const TimeMor& b = morphisms_[g];
  if (a.tgt != b.src) throw std::logic_error("composing non-composable morphisms");
  std::vector<int> sigma(pool_, -1);
  for (int c = 0; c < pool_; ++c)
    if (a.sigma[c] >= 0) sigma[c] = b.sigma[a.sigma[c]];
  auto idx = find_morphism(a.src, b.tgt, sigma);
  if (!idx) throw std::logic_error("composite morphism missing from the enumeration");
  return *idx;
}

std::optional<std::size_t> Category::find_object(const TimeObj& o) const {
  auto it = object_index_.find(o);
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Category::find_morphism(std::size_t src, std::size_t tgt,
                                                   const std::vector<int>& sigma) const {
  auto it = morphism_index_.find(std::make_tuple(src, tgt, sigma));
  if (it == morphism_index_.end()) return std::nullopt;
  return it->second;
}

std::string Category::describe(std::size_t obj) const {
  const TimeObj& o = objects_[obj];
  std::ostringstream os;
  os << "({";
  bool first = true;
  for (int c = 0; c < pool_; ++c)
    if (o.has(c)) {
      os << (first ? "" : ",") << clock_name(c) << "=" << o.theta[c];
      first = false;
    }
  os << "}";
  if (o.lambda >= 0) os << ";" << clock_name(o.lambda);
  os << ")";
  return os.str();
}

std::string Category::describe_morphism(std::size_t mor) const {
  const TimeMor& m = morphisms_[mor];
  std::ostringstream os;
  os << describe(m.src) << " -> " << describe(m.tgt) << " [";
  bool first = true;
  for (int c = 0; c < pool_; ++c)
    if (m.sigma[c] >= 0) {
      os << (first ? "" : ",") << clock_name(c) << "->" << clock_name(m.sigma[c]);
      first = false;
    }
  os << "]";
  return os.str();
}

ModelContext::ModelContext(int pool, int bound) : pool_(pool), bound_(bound) {
  if (pool < 1) throw std::invalid_argument("clock pool must be non-empty");
  if (bound < 2) throw std::invalid_argument("truncation bound must be at least 2");
}

CategoryPtr ModelContext::category(Base base, int cap) {
  auto key = std::make_pair(base, cap);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  auto cat = std::make_shared<const Category>(base, pool_, bound_, cap);
  cache_.emplace(key, cat);
  return cat;
}

}  // namespace clott::model
