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

#include <cstdint>
#include <functional>
#include <random>
#include <optional>
#include <string>
#include <vector>

namespace clott::coalgebra {

/// A coalgebra on the states 0..n-1: structure[s] is an element of F({0..n-1}).
struct Coalgebra {
  Functor functor;
  std::vector<Value> structure;

  std::size_t size() const { return structure.size(); }
  ValueSet states() const;
};

/// Edge-list text format:
///   functor pf(prod(const{a,b}, id))
///   states 3
///   edge 0 a 1        (edge s t for unlabelled shapes)
///   label 0 a
///   prob 0 1 1/2
Coalgebra parse_coalgebra(std::string_view text);
Coalgebra load_coalgebra(const std::string& path);
std::string print(const Coalgebra& c);

using FinFn = std::vector<std::size_t>;

struct TerminalSeq {
  Functor functor;
  std::vector<ValueSet> stages;
  /// connectors[k] : stages[k+1] -> stages[k], by index.
  std::vector<FinFn> connectors;
  /// Least k whose connector stages[k+1] -> stages[k] is bijective.
  std::optional<std::size_t> convergence;
  bool budget_stop = false;
  std::string stop_reason;

  std::vector<std::size_t> sizes() const;
};

TerminalSeq terminal_sequence(const Functor& f, std::size_t max_steps, std::size_t max_elements = 1u << 17);

/// Composite connector stages[k] -> stages[j] for j <= k.
FinFn connector_between(const TerminalSeq& seq, std::size_t k, std::size_t j);
/// The map stages[k] -> stages[j] computed directly as F^j of the unique map stages[k-j] -> 1.
FinFn direct_connector(const TerminalSeq& seq, std::size_t k, std::size_t j);

struct FinalCoalgebra {
  ValueSet carrier;
  /// structure[i] is the element of F(carrier) for carrier[i].
  std::vector<Value> structure;
  std::size_t step = 0;
  std::size_t bound = 0;
  std::size_t coalgebras_checked = 0;
  bool finality_ok = true;
  bool finality_complete = true;
  std::string failure;
};

/// Throws NotConverged when the terminal sequence does not converge within max_steps.
FinalCoalgebra final_coalgebra(const Functor& f, std::size_t max_steps = 5, std::size_t finality_bound = 3,
                               std::size_t max_coalgebras = 200000);

/// Number of coalgebra morphisms from c into the final coalgebra.
std::size_t count_morphisms(const Coalgebra& c, const FinalCoalgebra& fin);

using Partition = std::vector<std::vector<std::size_t>>;

/// Coarsest partition stable under one step of the structure map.
Partition bisimilarity(const Coalgebra& c);
/// Class index per state for a partition.
std::vector<std::size_t> class_of(const Partition& p, std::size_t n);

/// Largest bisimulation of a pf(prod(const A, id)) or pf(id) coalgebra by enumerating
/// every relation (n <= 3) or by deleting violating pairs from the full relation.
Partition brute_force_bisimulation_pf(const Coalgebra& c, bool enumerate_relations);
/// Largest probabilistic bisimulation of a prod(const A, df(id)) or df(id) coalgebra,
/// by enumerating every partition (n <= 8).
Partition brute_force_bisimulation_prob(const Coalgebra& c);

/// The pf(prod(const labels, id)) coalgebra on n states whose transition
/// (s, a, t) is present when bit (s*|labels| + a)*n + t of code is set.
Coalgebra pf_coalgebra_from_code(const ValueSet& labels, std::size_t n, std::uint64_t code);
/// A random prod(const labels, df[den](id)) coalgebra with weights of denominator <= den.
/// Some states copy an earlier state's row so that merges occur.
Coalgebra random_prob_coalgebra(std::size_t n, const ValueSet& labels, int den, std::mt19937_64& rng);

/// Translates fibers of the guarded fixpoint mu X. F(later X) at stage k into
/// stage k+1 of the terminal sequence and reports whether that is a bijection.
struct StageLawRow {
  int stage = 0;
  std::size_t fiber_size = 0;
  std::size_t terminal_size = 0;
  bool bijective = false;
};
struct StageLawResult {
  bool ok = true;
  std::vector<StageLawRow> rows;
};
StageLawResult check_stage_law(const Functor& f, int bound);

/// Truncated delay elements: step^steps(now value), or step^steps of an unfinished computation.
struct Delay {
  std::size_t steps = 0;
  std::optional<Value> value;

  static Delay now(Value v) { return {0, std::move(v)}; }
  static Delay never(std::size_t steps) { return {steps, std::nullopt}; }
  Delay step() const { return {steps + 1, value}; }
  std::string str() const;
  friend bool operator==(const Delay&, const Delay&) = default;
};

/// "now a", "step^k now a", "step step now a", "never".
Delay parse_delay(std::string_view text, std::size_t bound);
/// Image of d in the fiber at stage k.
Delay restrict(const Delay& d, std::size_t k);

using Relation = std::function<bool(const Value&, const Value&)>;

struct WeakBisimResult {
  std::vector<bool> stages;  // stage 0..N-1
  bool all_stages = true;
};

bool weak_bisim_at(const Delay& x, const Delay& y, std::size_t stage, std::size_t bound, const ValueSet& X,
                   const Relation& r);
WeakBisimResult weak_bisim_delay(const Delay& x, const Delay& y, std::size_t bound, const ValueSet& X,
                                 const Relation& r);

}  // namespace clott::coalgebra
