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

#include "clott/kernel/program.hpp"

#include <string>
#include <vector>

namespace clott::kernel {

/// One golden typing test. The program's last declaration is the subject;
/// every earlier declaration must check.
struct GoldenCase {
  std::string id;
  std::string group;   // "core", "universe", "prop", "equality", "axiom"
  std::string rule;    // rule exercised by the subject declaration
  bool accept;         // subject must check (true) or be rejected (false)
  std::string reject_rule;  // rule the rejection must name
  std::string program;
};

const std::vector<GoldenCase>& golden_corpus();

/// Rules that need an accepting case and a rejecting case.
const std::vector<std::string>& core_rules();
const std::vector<std::string>& universe_rules();

struct GoldenVerdict {
  const GoldenCase* test;
  bool pass;
  std::string detail;
};

GoldenVerdict run_golden(const GoldenCase& c, const Options& opts = {});

}  // namespace clott::kernel
