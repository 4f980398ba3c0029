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

#include "clott/model/presheaf.hpp"

#include <functional>
#include <optional>
#include <string>

namespace clott::model {

struct InvarianceFailure {
  std::size_t object = 0;
  int fresh = -1;
  int alpha = 0;
  std::size_t source_size = 0;
  std::size_t target_size = 0;
  bool injective = true;
  std::string describe(const Category& cat) const;
};

struct InvarianceResult {
  bool ok = true;
  std::size_t checked = 0;
  std::optional<InvarianceFailure> failure;
};

/// Checks that adding a fresh clock at any stage acts bijectively.
InvarianceResult check_invariance(const FinPresheaf& x);

/// Whether fn is a natural bijection x -> y.
std::optional<std::string> check_natural_iso(const FinPresheaf& x, const FinPresheaf& y,
                                             const std::function<Value(std::size_t obj, const Value&)>& fn);

/// forall(A) + forall(B) -> forall(A + B).
std::optional<std::string> check_forall_sum(const FinPresheaf& a, const FinPresheaf& b, CategoryPtr target);
/// forall(A x B) -> forall(A) x forall(B).
std::optional<std::string> check_forall_product(const FinPresheaf& a, const FinPresheaf& b, CategoryPtr target);
/// F(forall(A)) -> forall(F(A)) for a set functor F.
std::optional<std::string> check_forall_functor(const coalgebra::Functor& f, const FinPresheaf& a, CategoryPtr target);
/// The canonical map A -> forall(A) for A on the time category.
std::optional<std::string> check_clock_irrelevance(const FinPresheaf& a, CategoryPtr slice);

struct ForceResult {
  bool iso = true;
  /// Least stage whose restriction from the next stage is not a bijection.
  std::optional<int> first_failure_stage;
  /// The stage chain is bijective from stage bound-2 onwards.
  bool stabilized = true;
  bool truncation_artifact = false;
  std::vector<std::size_t> stage_sizes;  // fiber sizes at the fresh clock over the empty object
  std::string explanation;
};

/// Compares forall(A) with forall(later A) through the canonical map.
ForceResult check_force(const FinPresheaf& a, CategoryPtr target);

/// A predicate family indexed by a finite set, living on the clock slice.
using PredicateFamily = std::function<FinPresheaf(CategoryPtr slice, const Value& x)>;

struct ExistsForallRow {
  std::size_t object = 0;
  bool lhs = false;  // exists x. forall k. phi(x)
  bool rhs = false;  // forall k. exists x. phi(x)
  std::optional<Value> min_uniform_witness;
};

struct ExistsForallResult {
  std::vector<ExistsForallRow> rows;
  bool commutes = true;
  bool invariant = true;
};

ExistsForallResult exists_forall_experiment(ModelContext& ctx, const ValueSet& X, const PredicateFamily& phi);

struct UniqueExistsResult {
  bool hypothesis_holds = true;
  bool commutes = true;
  std::string detail;
};

/// Checks that phi(x) and phi(y) force x = y from stage n on, then compares
/// the two quantifier orders.
UniqueExistsResult unique_exists_check(ModelContext& ctx, const ValueSet& X, const PredicateFamily& phi, int n);

/// Number of objects and morphisms of the time category by a direct count
/// over all assignments, independent of Category.
std::pair<std::size_t, std::size_t> brute_force_category_size(int pool, int bound, bool slice);

}  // namespace clott::model
