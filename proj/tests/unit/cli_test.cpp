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

#include <gtest/gtest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome run(const std::string& args) {
  std::string cmd = std::string(CLOTT_BIN) + " " + args + " 2>/dev/null";
  Outcome r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string sample(const std::string& name) { return std::string(CLOTT_SAMPLES) + "/" + name; }

nlohmann::json report(const std::string& args, int expected_code) {
  Outcome r = run("--json - -q " + args);
  EXPECT_EQ(r.code, expected_code) << args;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], "clott-report/1");
  EXPECT_EQ(j["exit_code"], expected_code);
  return j;
}

}  // namespace

TEST(Cli, CheckSample) { EXPECT_EQ(run("check " + sample("next.clott")).code, 0); }

TEST(Cli, TheoryDrop) {
  auto j = report("theory drop " + sample("truncation.thy"), 0);
  EXPECT_EQ(j["checks"][0]["evidence"]["drop"], true);
  auto k = report("theory drop " + sample("semilattice.thy"), 0);
  EXPECT_EQ(k["checks"][0]["evidence"]["drop"], false);
}

TEST(Cli, TheoryFreeAndPullbacks) {
  auto j = report("--size 3 theory free " + sample("semilattice.thy"), 0);
  EXPECT_EQ(j["checks"][0]["evidence"]["rows"][3]["size"], 8);
  report("theory pullbacks " + sample("truncation.thy"), 1);
  report("theory monos " + sample("convex.thy"), 0);
}

TEST(Cli, ForceIsATruncationArtifact) {
  auto j = report("model verify force", 0);
  bool artifact = false;
  for (const auto& c : j["checks"]) artifact = artifact || c["verdict"] == "truncation_artifact";
  EXPECT_TRUE(artifact);
  EXPECT_GE(j["summary"]["truncation_artifact"].get<int>(), 1);
}

TEST(Cli, SuiteFigures) { report("suite figures", 0); }

TEST(Cli, Coalgebra) {
  auto j = report("coalg bisim " + sample("coins.coalg"), 0);
  report("coalg terminal 'const{a,b}'", 0);
  report("coalg terminal 'pf(id)'", 3);
  report("coalg weakbisim 'now a' 'step^2 now a'", 0);
}

TEST(Cli, BadUsage) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frob").code, 2);
  EXPECT_EQ(run("eval 'prod(fin(2)'").code, 2);
  EXPECT_EQ(run("--pool 0 model verify").code, 2);
  EXPECT_EQ(run("theory drop /nonexistent.thy").code, 2);
  EXPECT_EQ(run("--pool 1 eval 'forall(k, forall(j, fin(1)))'").code, 3);
}

TEST(Cli, JsonIsDeterministic) {
  for (const char* args : {"model verify all", "suite theories", "coalg bisim " CLOTT_SAMPLES "/labels.coalg"}) {
    Outcome a = run(std::string("--json - -q ") + args), b = run(std::string("--json - -q ") + args);
    EXPECT_EQ(a.code, b.code) << args;
    EXPECT_FALSE(a.out.empty());
    EXPECT_EQ(a.out, b.out) << args;
  }
}
