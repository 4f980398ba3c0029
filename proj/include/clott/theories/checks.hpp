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

#include "clott/theories/free_model.hpp"

#include <optional>
#include <string>

namespace clott::theories {

/// A finite map between standard sets, as the list of images.
using FinMap = std::vector<std::size_t>;

struct MonoCounterexample {
  std::size_t domain = 0;
  std::size_t codomain = 0;
  FinMap injection;
  Value left, right;  // distinct elements of T(A) with the same image
};

struct MonoReport {
  bool ok = true;
  bool exact = true;
  std::size_t bound = 0;
  std::size_t injections_checked = 0;
  std::optional<MonoCounterexample> counterexample;
};

/// Square P -> Z, P -> X, f : X -> Y, Z a subset of Y, P = f^-1(Z).
struct PullbackSquare {
  std::size_t x_size = 0;
  std::size_t y_size = 0;
  FinMap f;
  std::vector<std::size_t> z;
  std::vector<std::size_t> p;
  std::size_t tp_size = 0;        // |T(P)|
  std::size_t pullback_size = 0;  // |T(X) x_T(Y) T(Z)|
  bool injective = true;
  bool surjective = true;
  std::string describe() const;
};

struct PullbackReport {
  bool ok = true;
  bool exact = true;
  std::size_t bound = 0;
  std::size_t squares_checked = 0;
  std::optional<PullbackSquare> counterexample;
};

MonoReport check_preserves_monos(const FreeModel& m, std::size_t bound);
PullbackReport check_preserves_pullbacks_of_monos(const FreeModel& m, std::size_t bound);
/// Evaluates one square; sizes follow the enumeration convention above.
PullbackSquare pullback_square(const FreeModel& m, std::size_t x_size, std::size_t y_size, const FinMap& f,
                               const std::vector<std::size_t>& z);
/// A square with the shape of the empty pullback of two disjoint points into a
/// two-element set.
bool is_disjoint_points_square(const PullbackSquare& sq);

struct LawReport {
  bool ok = true;
  std::size_t bound = 0;
  std::size_t instances = 0;
  std::string failure;
};

LawReport check_functor_laws(const FreeModel& m, std::size_t bound);
/// Unit laws exhaustively over T(X); associativity over `samples` sampled
/// elements of T(T(T(X))).
LawReport check_monad_laws(const FreeModel& m, std::size_t bound, std::size_t samples = 200,
                           std::uint64_t seed = 7);
/// minimal_support(T(i)x) = i[minimal_support(x)] for injections i.
LawReport check_support_naturality(const FreeModel& m, std::size_t bound);

/// All maps from an n-set to an m-set, in lexicographic order.
std::vector<FinMap> all_maps(std::size_t n, std::size_t m);
std::vector<FinMap> all_injections(std::size_t n, std::size_t m);

}  // namespace clott::theories
