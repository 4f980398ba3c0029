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

#include <boost/rational.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace clott {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

/// Immutable structural value used for fiber elements, free-model elements
/// and functor carriers. Children are shared, so deep values stay cheap to
/// copy. The total order is structural and fixes every canonical iteration
/// order in the model, theory and coalgebra engines.
class Value {
 public:
  enum class Tag : std::uint8_t { Unit, Int, Sym, Inl, Inr, Tuple, Set, Bag, List, Dist, Op };

  Value();  // unit

  static Value unit();
  static Value integer(std::int64_t n);
  static Value symbol(std::string name);
  static Value inl(Value v);
  static Value inr(Value v);
  static Value tuple(std::vector<Value> items);
  /// Sorts and removes duplicates.
  static Value set(std::vector<Value> items);
  /// Sorts, keeps duplicates.
  static Value bag(std::vector<Value> items);
  static Value list(std::vector<Value> items);
  /// Merges equal support points, drops zero weights, sorts by point.
  static Value dist(std::vector<std::pair<Value, Rational>> weighted);
  /// Formal operation application (custom theory terms).
  static Value op(std::string name, std::vector<Value> args);

  Tag tag() const;
  std::int64_t as_int() const;
  const std::string& name() const;
  std::span<const Value> items() const;
  std::span<const Rational> weights() const;
  const Value& item(std::size_t i) const { return items()[i]; }
  std::size_t size() const { return items().size(); }
  std::size_t hash() const;

  std::string str() const;

  friend std::strong_ordering operator<=>(const Value& a, const Value& b);
  friend bool operator==(const Value& a, const Value& b);

 private:
  struct Node;
  explicit Value(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Value make(Tag tag, std::int64_t num, std::string name, std::vector<Value> items,
                    std::vector<Rational> weights);
  std::shared_ptr<const Node> node_;
};

struct ValueHash {
  std::size_t operator()(const Value& v) const { return v.hash(); }
};

/// Sorted, duplicate-free vector of values.
using ValueSet = std::vector<Value>;

void normalize(ValueSet& s);
/// Index of v in the sorted set s, or -1.
long index_of(const ValueSet& s, const Value& v);

}  // namespace clott
