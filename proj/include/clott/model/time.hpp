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

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace clott::model {

/// (E, theta) with E a subset of the clock pool and theta : E -> {0..N-1};
/// lambda marks the distinguished clock of an object of the category of
/// elements of Clk, or is -1.
struct TimeObj {
  std::uint32_t clocks = 0;
  std::vector<int> theta;  // indexed by pool position, -1 outside E
  int lambda = -1;

  bool has(int c) const { return (clocks >> c & 1u) != 0; }
  int size() const;
  friend auto operator<=>(const TimeObj&, const TimeObj&) = default;
};

/// sigma : E -> E' with theta' . sigma <= theta (and sigma(lambda) = lambda').
struct TimeMor {
  std::size_t src = 0;
  std::size_t tgt = 0;
  std::vector<int> sigma;  // indexed by pool position, -1 outside E
};

enum class Base { Time, Clock };

class Category {
 public:
  Category(Base base, int pool, int bound, int cap);

  Base base() const { return base_; }
  int pool() const { return pool_; }
  int bound() const { return bound_; }
  /// Largest |E| among the objects.
  int cap() const { return cap_; }

  const std::vector<TimeObj>& objects() const { return objects_; }
  const std::vector<TimeMor>& morphisms() const { return morphisms_; }
  const std::vector<std::size_t>& out(std::size_t obj) const { return out_[obj]; }
  std::size_t identity(std::size_t obj) const { return identity_[obj]; }
  /// Position of a morphism in out(src).
  std::size_t out_position(std::size_t mor) const { return out_pos_[mor]; }

  /// g after f.
  std::size_t compose(std::size_t f, std::size_t g) const;
  std::optional<std::size_t> find_object(const TimeObj& o) const;
  std::optional<std::size_t> find_morphism(std::size_t src, std::size_t tgt, const std::vector<int>& sigma) const;

  std::string clock_name(int c) const { return "l" + std::to_string(c); }
  std::string describe(std::size_t obj) const;
  std::string describe_morphism(std::size_t mor) const;

 private:
  Base base_;
  int pool_, bound_, cap_;
  std::vector<TimeObj> objects_;
  std::vector<TimeMor> morphisms_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::size_t> identity_, out_pos_;
  std::map<TimeObj, std::size_t> object_index_;
  std::map<std::tuple<std::size_t, std::size_t, std::vector<int>>, std::size_t> morphism_index_;
};

using CategoryPtr = std::shared_ptr<const Category>;

/// One evaluation session: the clock pool, the truncation bound and the
/// categories built so far.
class ModelContext {
 public:
  explicit ModelContext(int pool = 2, int bound = 4);
  int pool() const { return pool_; }
  int bound() const { return bound_; }
  CategoryPtr category(Base base, int cap);
  CategoryPtr time() { return category(Base::Time, pool_); }

 private:
  int pool_, bound_;
  std::map<std::pair<Base, int>, CategoryPtr> cache_;
};

/// Least pool clock outside E, or -1.
int fresh_clock(const TimeObj& o, int pool);

}  // namespace clott::model
