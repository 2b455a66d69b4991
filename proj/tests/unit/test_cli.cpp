// Copyright 2026 The sigconj Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct Result {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI with stdout captured and stderr discarded.
Result run(const std::string& args) {
  const std::string command = std::string(SIGCONJ_CLI) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) r.out.append(buffer.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name) { return std::string(SIGCONJ_FIXTURES) + "/" + name; }

TEST(Cli, ApplyPrintsImage) {
  const Result r = run("apply --matrix " + fixture("m3.json") + " --signs 1,1,-1");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("\"-7\""), std::string::npos);
}

TEST(Cli, CayleyThree) {
  const Result r = run("cayley --n 3");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("\"c1\""), std::string::npos);
}

TEST(Cli, VerifyZero) {
  const Result r = run("verify --matrix " + fixture("zero3.json"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("\"orbit_size\": \"1\""), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("blockform --matrix " + fixture("corrupted_sym4.csv") + " --signs 1,1,-1,-1").exit_code, 1);
  EXPECT_EQ(run("blockform --matrix " + fixture("sym4.csv") + " --signs 1,1,-1,-1").exit_code, 0);
  EXPECT_EQ(run("apply --matrix " + fixture("m3.json") + " --signs -1,1,1").exit_code, 2);
  EXPECT_EQ(run("apply --matrix " + fixture("m3.json")).exit_code, 2);
  EXPECT_EQ(run("apply --matrix " + fixture("nope.csv") + " --signs 1").exit_code, 2);
  EXPECT_EQ(run("frobnicate").exit_code, 2);
  EXPECT_EQ(run("").exit_code, 2);
}

TEST(Cli, FormatOverride) {
  EXPECT_EQ(run("invariants --matrix " + fixture("m3.json") + " --format csv").exit_code, 2);
  EXPECT_EQ(run("invariants --matrix " + fixture("m3.json") + " --format json").exit_code, 0);
}

TEST(Cli, CapsAreFlags) {
  const Result r = run("invariants --matrix " + fixture("six6.csv") + " --perm-cap 3 --permpoly-cap 3");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("omitted"), std::string::npos);
}

TEST(Cli, DeterministicOutput) {
  const std::string args = "verify --matrix " + fixture("six6.csv") + " --threads 2";
  EXPECT_EQ(run(args).out, run(args).out);
}

}  // namespace
