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

#include "clott/core/errors.hpp"
#include "clott/kernel/context.hpp"
#include "clott/syntax/term.hpp"

#include <string>
#include <vector>

namespace clott::kernel {

enum class Conv { Equal, Apart, Unknown };
const char* to_string(Conv c);

/// Raised when the beta-step cap of one session is hit.
class StepLimitReached : public ConversionUnknown {
 public:
  using ConversionUnknown::ConversionUnknown;
};

struct Fuel {
  int remaining = 0;
};

struct Options {
  int fuel = 32;
  long step_limit = 1'000'000;
};

/// Bidirectional checker. Each instance is one checking session; separate
/// instances share no state.
class Checker {
 public:
  explicit Checker(Options opts = {});

  void check_context(const Context& ctx);
  Term infer(const Context& ctx, const Term& t);
  void check(const Context& ctx, const Term& t, const Term& type);
  /// Checks that A is a type and returns it with implicit El/Prf inserted.
  Term check_type(const Context& ctx, const Term& a);

  Conv convert(const Context& ctx, const Term& t, const Term& u);
  Conv convert(const Context& ctx, const Term& t, const Term& u, int fuel);

  /// Weak head normal form. Guarded fixed points are unfolded only when fuel
  /// is given, each unfolding consuming one unit.
  Term whnf(const Context& ctx, const Term& t, Fuel* fuel = nullptr);
  /// Full normal form, unfolding fix at most fuel times.
  Term normalize(const Context& ctx, const Term& t, int fuel = 0);

  /// True if the head of t is a fix applied to an argument.
  static bool fix_blocked(const Term& t);

  const Options& options() const { return opts_; }
  long steps() const { return steps_; }
  /// Number of fix unfoldings used by the last top-level convert call.
  int last_unfoldings() const { return last_unfoldings_; }

 private:
  Conv conv(const Context& ctx, const Term& t, const Term& u, Fuel& fuel);
  Conv structural(const Context& ctx, const Term& t, const Term& u, Fuel& fuel);
  Term whnf_type(const Context& ctx, const Term& t);
  void require_equal(const Context& ctx, const Term& inferred, const Term& expected, const std::string& rule,
                     const Term& subject);
  void check_code(const Context& ctx, const Term& t, bool prop, const syntax::ClockSet& delta);
  Term infer_code(const Context& ctx, const Term& t);
  void check_fix_app(const Context& ctx, const Term& fix_node, const Term& f, const Term& type);
  std::string fresh(const Context& ctx, const std::string& base, std::initializer_list<Term> avoid);
  void require_clock(const Context& ctx, const std::string& k, const std::string& rule);
  void tick();

  Options opts_;
  long steps_ = 0;
  int last_unfoldings_ = 0;
};

/// Schematic types of the axiom constants.
struct AxiomInfo {
  std::string name;
  std::string schema;
};
std::vector<AxiomInfo> axioms();

}  // namespace clott::kernel
