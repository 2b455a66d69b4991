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

#include <json.hpp>

#include "expect_error.hpp"
#include "generators.hpp"
#include "sigconj/io.hpp"
#include "sigconj/report.hpp"

namespace sigconj {
namespace {

using nlohmann::json;

const std::filesystem::path kFixtures{SIGCONJ_FIXTURES};

const json* find_check(const json& doc, const std::string& name) {
  for (const auto& c : doc["checks"])
    if (c["name"] == name) return &c;
  return nullptr;
}

void expect_well_formed(const json& doc) {
  for (const auto& c : doc["checks"]) {
    ASSERT_TRUE(c.contains("name"));
    if (c["status"] != "skipped") {
      EXPECT_TRUE(c.contains("lhs")) << c["name"];
      EXPECT_TRUE(c.contains("rhs")) << c["name"];
    } else {
      EXPECT_TRUE(c.contains("reason")) << c["name"];
    }
  }
}

TEST(Report, ApplyResult) {
  ReportOptions o;
  o.signs = SignVector{1, 1, -1};
  const Report r = report_apply(load_matrix(kFixtures / "m3.json"), o);
  EXPECT_FALSE(r.checks_failed);
  const json doc = json::parse(r.text);
  EXPECT_EQ(parse_matrix_json(doc["results"]["phi"].dump()),
            (Matrix{{1, 2, -3}, {4, 5, -6}, {-7, -8, 9}}));
  EXPECT_EQ(doc["command"], "apply");
  EXPECT_EQ(doc["input"]["digest"].get<std::string>().substr(0, 7), "sha256:");
  expect_well_formed(doc);
}

TEST(Report, ApplyNeedsSigns) {
  EXPECT_SIGCONJ_ERROR(report_apply(Matrix::identity(2), {}), ErrorCode::InvalidArgument);
  ReportOptions o;
  o.signs = SignVector{1, -1, 1};
  EXPECT_SIGCONJ_ERROR(report_apply(Matrix::identity(2), o), ErrorCode::DimensionMismatch);
}

TEST(Report, InvariantsRespectCaps) {
  ReportOptions o;
  o.limits.permanent_cap = 2;
  o.limits.perm_poly_cap = 2;
  const json doc = json::parse(report_invariants(load_matrix(kFixtures / "m3.json"), o).text);
  EXPECT_TRUE(doc["results"]["permanent"].contains("omitted"));
  EXPECT_TRUE(doc["results"]["perm_poly"].contains("omitted"));
  EXPECT_EQ(doc["results"]["trace"], "15");
  EXPECT_EQ(doc["results"]["char_poly"], json({"0", "18", "15", "-1"}));
}

TEST(Report, VerifyZeroMatrix) {
  const Report r = report_verify(load_matrix(kFixtures / "zero3.json"), {});
  EXPECT_FALSE(r.checks_failed);
  const json doc = json::parse(r.text);
  EXPECT_EQ(doc["results"]["orbit"]["orbit_size"], "1");
  EXPECT_EQ(doc["summary"]["failed"], 0);
  expect_well_formed(doc);
}

TEST(Report, VerifyIsDeterministic) {
  gen::Rng rng(9);
  const Matrix a = gen::square(rng, 5, 0.7);
  ReportOptions o;
  o.limits.threads = 3;
  EXPECT_EQ(report_verify(a, o).text, report_verify(a, o).text);
  ReportOptions sampled;
  sampled.samples = 5;
  sampled.seed = 77;
  const json doc = json::parse(report_verify(a, sampled).text);
  EXPECT_EQ(doc["results"]["sign_vectors"]["mode"], "sampled");
  EXPECT_EQ(doc["results"]["sign_vectors"]["count"], 5);
}

TEST(Report, VerifyPassesOnRandomMatrices) {
  gen::Rng rng(10);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix a = gen::square(rng, rng.size(1, 6), 0.6);
    const Report r = report_verify(a, {});
    EXPECT_FALSE(r.checks_failed) << r.text;
  }
}

TEST(Report, BlockformOnCorruptedFixtureFails) {
  ReportOptions o;
  o.signs = SignVector{1, 1, -1, -1};
  const Report good = report_blockform(load_matrix(kFixtures / "sym4.csv"), o);
  EXPECT_FALSE(good.checks_failed);
  const Report bad = report_blockform(load_matrix(kFixtures / "corrupted_sym4.csv"), o);
  EXPECT_TRUE(bad.checks_failed);
  const json doc = json::parse(bad.text);
  const json* check = find_check(doc, "sym_or_antisym_under_phi");
  ASSERT_NE(check, nullptr);
  EXPECT_EQ((*check)["status"], "fail");
  o.block_kind = BlockKind::AntiSym;
  EXPECT_TRUE(report_blockform(load_matrix(kFixtures / "sym4.csv"), o).checks_failed);
}

TEST(Report, BlockformAntiSym) {
  ReportOptions o;
  o.signs = SignVector{1, 1, -1, -1};
  const json doc = json::parse(report_blockform(load_matrix(kFixtures / "antisym4.csv"), o).text);
  EXPECT_EQ(doc["results"]["form"], "anti_diagonal");
  EXPECT_EQ(doc["summary"]["status"], "pass");
}

TEST(Report, DecomposeBothSplits) {
  ReportOptions o;
  o.signs = SignVector{1, -1, 1};
  const Matrix a = load_matrix(kFixtures / "m3.json");
  const json phi = json::parse(report_decompose(a, o).text);
  EXPECT_EQ(phi["results"]["dims"]["sym"], 5);
  EXPECT_TRUE(phi["results"]["order2_minor_sums"]["holds"].get<bool>());
  o.classic = true;
  const json classic = json::parse(report_decompose(a, o).text);
  EXPECT_EQ(classic["results"]["split"], "transpose");
}

TEST(Report, CayleyThree) {
  ReportOptions o;
  o.cayley_n = 3;
  const json doc = json::parse(report_cayley(o).text);
  EXPECT_EQ(doc["results"]["table"][0], json({"id", "c3", "c2", "c1"}));
  EXPECT_EQ(doc["summary"]["status"], "pass");
}

TEST(Report, OrbitFixtures) {
  const json doc = json::parse(report_orbit(load_matrix(kFixtures / "edge_loop3.csv"), {}).text);
  EXPECT_EQ(doc["results"]["orbit_size"], "2");
  EXPECT_EQ(doc["results"]["labels"], json({1, 1, 2}));
  EXPECT_EQ(doc["results"]["enumerated"].size(), 2U);
}

}  // namespace
}  // namespace sigconj
