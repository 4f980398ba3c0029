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

#include "clott/core/value.hpp"
#include "clott/theories/theory.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>

namespace clott::theories {

using SetFn = std::function<Value(const Value&)>;

enum class Verdict { Equal, Apart, Unknown };
const char* to_string(Verdict v);

struct Budget {
  int max_length = 3;       // monoid lists, commutative-monoid bags
  int denominator = 4;      // convex weights are k/L with L <= denominator
  int term_size = 0;        // custom theories: max node count, 0 = 2|X|-1
  std::size_t max_elements = 1u << 20;
};

/// A free-model functor T restricted to finite sets. Elements of a finite X
/// are arbitrary Values; T(X) elements are canonical normal forms.
class FreeModel {
 public:
  FreeModel(Theory th, Budget b) : theory_(std::move(th)), budget_(b) {}
  virtual ~FreeModel() = default;

  const Theory& theory() const { return theory_; }
  const Budget& budget() const { return budget_; }
  /// Equality on the carrier is decidable and carriers are complete.
  virtual bool exact() const = 0;
  /// Predicted carrier size, when cheaply known.
  virtual std::optional<std::size_t> predicted_size(std::size_t n) const;
  /// All elements of T(X), sorted.
  virtual ValueSet carrier(const ValueSet& X) const = 0;
  virtual Value unit(const Value& x) const = 0;
  /// T(f) applied to t in T(X); Y is the codomain of f.
  virtual Value map(const SetFn& f, const Value& t, const ValueSet& Y) const = 0;
  /// Monad multiplication on T(T(X)); only builtins implement it.
  virtual Value multiply(const Value& tt) const;
  /// Generators syntactically occurring in the normal form.
  virtual ValueSet occurring(const Value& t) const = 0;
  /// A pseudo-random element of T(S) for law sampling.
  virtual Value sample(const ValueSet& S, std::mt19937_64& rng) const;
  /// Three-valued equality of two elements of T(X).
  virtual Verdict equal(const Value& a, const Value& b, const ValueSet& X) const;

  /// Whether t in T(X) lies in the image of T(X') for X' a subset of X.
  bool contains(const Value& t, const ValueSet& sub, const ValueSet& X) const;

 protected:
  Theory theory_;
  Budget budget_;
};

std::unique_ptr<FreeModel> make_free_model(const Theory& th, const Budget& b = {});

/// Custom model: the congruence classes of terms of bounded size, with the
/// least term of each class as representative.
class CustomModel : public FreeModel {
 public:
  CustomModel(Theory th, Budget b);

  bool exact() const override;
  ValueSet carrier(const ValueSet& X) const override;
  Value unit(const Value& x) const override;
  Value map(const SetFn& f, const Value& t, const ValueSet& Y) const override;
  ValueSet occurring(const Value& t) const override;
  Verdict equal(const Value& a, const Value& b, const ValueSet& X) const override;

  /// Representative of an arbitrary term over X, if within the size budget.
  std::optional<Value> representative(const Value& term, const ValueSet& X) const;
  /// Number of terms enumerated for X.
  std::size_t term_count(const ValueSet& X) const;

 private:
  struct Closure {
    std::vector<Value> terms;
    std::map<Value, std::size_t> index;
    std::vector<std::size_t> rep;  // term index -> representative term index
    ValueSet classes;
  };
  const Closure& closure(const ValueSet& X) const;
  int size_for(const ValueSet& X) const;

  mutable std::map<ValueSet, std::unique_ptr<Closure>> cache_;
};

/// Terms are encoded as Values: inl(x) for a generator x and op(name, args)
/// for an operation; indexed operations use "name[index]".
Value to_value(const AlgTerm& t, const std::map<std::string, Value>& env);
std::size_t term_nodes(const Value& term);

/// The least subset X' of X with t in T(X'). Throws NoLeastSupport if the
/// minimal subsets are not unique.
ValueSet minimal_support(const FreeModel& m, const Value& t, const ValueSet& X);
std::optional<ValueSet> least_support(const FreeModel& m, const Value& t, const ValueSet& X);
/// Brute-force oracle: all inclusion-minimal X' with t in T(X').
std::vector<ValueSet> minimal_supports_brute(const FreeModel& m, const Value& t, const ValueSet& X);

/// The standard n-element set {0, ..., n-1}.
ValueSet standard_set(std::size_t n);

}  // namespace clott::theories
