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

#include "clott/cli/report.hpp"

#include <sstream>

namespace clott::cli {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Unknown: return "unknown";
    case Verdict::TruncationArtifact: return "truncation_artifact";
  }
  return "?";
}

nlohmann::json Params::to_json() const {
  return {{"pool", pool}, {"bound", bound}, {"fuel", fuel}, {"size", size}, {"depth", depth}};
}

CheckRecord& Report::add(std::string name, std::string anchor, Verdict v, nlohmann::json evidence) {
  checks.push_back({std::move(name), std::move(anchor), v, std::move(evidence)});
  return checks.back();
}

CheckRecord& Report::add(std::string name, std::string anchor, bool pass, nlohmann::json evidence) {
  return add(std::move(name), std::move(anchor), pass ? Verdict::Pass : Verdict::Fail, std::move(evidence));
}

void Report::append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

int Report::exit_code() const {
  bool unknown = false;
  for (const CheckRecord& c : checks) {
    if (c.verdict == Verdict::Fail) return 1;
    if (c.verdict == Verdict::Unknown) unknown = true;
  }
  return unknown ? 3 : 0;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["schema"] = kSchema;
  j["version"] = kToolVersion;
  j["command"] = command;
  j["parameters"] = params.to_json();
  j["checks"] = nlohmann::json::array();
  std::size_t counts[4] = {0, 0, 0, 0};
  for (const CheckRecord& c : checks) {
    j["checks"].push_back({{"name", c.name},
                           {"anchor", c.anchor},
                           {"verdict", to_string(c.verdict)},
                           {"truncation_artifact", c.verdict == Verdict::TruncationArtifact},
                           {"evidence", c.evidence}});
    ++counts[static_cast<int>(c.verdict)];
  }
  j["summary"] = {{"pass", counts[0]}, {"fail", counts[1]}, {"unknown", counts[2]}, {"truncation_artifact", counts[3]}};
  j["exit_code"] = exit_code();
  return j;
}

std::string Report::text() const {
  std::ostringstream out;
  out << command << "  (pool " << params.pool << ", bound " << params.bound << ", fuel " << params.fuel << ", size "
      << params.size << ")\n";
  for (const CheckRecord& c : checks) {
    std::string v = to_string(c.verdict);
    for (char& ch : v) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    out << "  " << v << "  " << c.name;
    if (c.evidence.contains("summary")) out << "  -- " << c.evidence["summary"].get<std::string>();
    out << "\n";
  }
  return out.str();
}

}  // namespace clott::cli
