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

#include "clott/coalgebra/functor.hpp"
#include "clott/core/value.hpp"
#include "clott/model/time.hpp"

#include <functional>
#include <optional>
#include <string>

namespace clott::model {

/// A covariant presheaf on a finite category: a sorted fiber per object and,
/// per morphism, the action as a table of fiber indices.
struct FinPresheaf {
  CategoryPtr cat;
  std::vector<ValueSet> fibers;
  std::vector<std::vector<std::uint32_t>> action;

  const ValueSet& fiber(std::size_t obj) const { return fibers[obj]; }
  std::size_t act_index(std::size_t mor, std::size_t i) const { return action[mor][i]; }
  const Value& act(std::size_t mor, const Value& x) const;
  /// Number of elements in each fiber, in object order.
  std::vector<std::size_t> sizes() const;
  bool is_subsingleton() const;
};

using FiberFn = std::function<ValueSet(std::size_t obj)>;
using ActionFn = std::function<Value(std::size_t mor, const Value& x)>;

FinPresheaf build_presheaf(CategoryPtr cat, const FiberFn& fiber, const ActionFn& act);

FinPresheaf constant(CategoryPtr cat, ValueSet c);
FinPresheaf terminal(CategoryPtr cat);
FinPresheaf empty(CategoryPtr cat);
/// The presheaf of clocks: the fiber at (E, theta) is E.
FinPresheaf clocks(CategoryPtr cat);
FinPresheaf product(const FinPresheaf& a, const FinPresheaf& b);
FinPresheaf sum(const FinPresheaf& a, const FinPresheaf& b);
/// Collapses every non-empty fiber to a point.
FinPresheaf squash(const FinPresheaf& a);
/// Pointwise application of a set functor.
FinPresheaf apply_functor(const coalgebra::Functor& f, const FinPresheaf& a);
/// Natural transformations out of the representable times a; the budget
/// bounds each fiber.
FinPresheaf exponential(const FinPresheaf& a, const FinPresheaf& b, std::size_t budget = 200000);

/// The later modality on the category of elements of Clk: the limit of the
/// fibers below theta(lambda) at the distinguished clock.
FinPresheaf later(const FinPresheaf& x);
/// Clock quantification: the limit over all stages of a fresh clock. The
/// result lives on `target`, a Time category whose objects all have a
/// fresh clock available in x's category.
FinPresheaf forall_clk(const FinPresheaf& x, CategoryPtr target);
/// Pulls a presheaf on the time category back along the projection from
/// the category of elements of Clk.
FinPresheaf reindex(const FinPresheaf& x, CategoryPtr slice);

/// The next map x -> (restrictions of x to earlier stages), at a slice object.
Value next_element(const FinPresheaf& x, std::size_t obj, const Value& v);
/// The restriction morphism (E, theta, lambda) -> (E, theta[lambda -> stage], lambda).
std::size_t restriction(const Category& cat, std::size_t obj, int clock, int stage);

/// Guarded fixed point mu X. F(later X) on the category of elements of Clk,
/// by iteration from the terminal presheaf until stable.
FinPresheaf guarded_fixpoint(const coalgebra::Functor& f, CategoryPtr slice);

/// A predicate whose truth depends on the stage theta(lambda) only.
FinPresheaf stage_predicate(CategoryPtr slice, const std::function<bool(int)>& holds);

std::optional<std::string> check_functoriality(const FinPresheaf& x);

}  // namespace clott::model
