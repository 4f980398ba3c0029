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

#include <json.hpp>

#include <string>
#include <vector>

namespace clott::cli {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kSchema = "clott-report/1";

enum class Verdict { Pass, Fail, Unknown, TruncationArtifact };
const char* to_string(Verdict v);

struct CheckRecord {
  std::string name;
  std::string anchor;
  Verdict verdict = Verdict::Pass;
  nlohmann::json evidence = nlohmann::json::object();
};

struct Params {
  int pool = 2;
  int bound = 4;
  int fuel = 32;
  int size = 3;
  int depth = 0;
  nlohmann::json to_json() const;
};

struct Report {
  std::string command;
  Params params;
  std::vector<CheckRecord> checks;

  CheckRecord& add(std::string name, std::string anchor, Verdict v, nlohmann::json evidence = nlohmann::json::object());
  CheckRecord& add(std::string name, std::string anchor, bool pass, nlohmann::json evidence = nlohmann::json::object());
  void append(const Report& other);

  /// 0 all pass, 1 any fail, 3 any unknown and no fail.
  int exit_code() const;
  nlohmann::json to_json() const;
  std::string text() const;
};

}  // namespace clott::cli
