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

#include <filesystem>
#include <fstream>

#include "expect_error.hpp"
#include "generators.hpp"
#include "sigconj/io.hpp"

namespace sigconj {
namespace {

const std::filesystem::path kFixtures{SIGCONJ_FIXTURES};

TEST(Csv, ParsesCommentsAndFractions) {
  const Matrix a = parse_matrix_csv("# header\n1, 2/4\n\n-3,4\n");
  EXPECT_EQ(a, (Matrix{{1, Scalar(1, 2)}, {-3, 4}}));
}

TEST(Csv, Errors) {
  EXPECT_SIGCONJ_ERROR(parse_matrix_csv("1,2\n3\n"), ErrorCode::ParseError);
  EXPECT_SIGCONJ_ERROR(parse_matrix_csv("1,x\n"), ErrorCode::ParseError);
  EXPECT_SIGCONJ_ERROR(parse_matrix_csv("# nothing\n"), ErrorCode::Empty);
}

TEST(Json, ParsesDocument) {
  const Matrix a = parse_matrix_json(R"({"n": 2, "entries": [[1, "2/3"], ["-4", 5]]})");
  EXPECT_EQ(a, (Matrix{{1, Scalar(2, 3)}, {-4, 5}}));
  const Matrix r = parse_matrix_json(R"({"n": 1, "m": 3, "entries": [[1, 2, 3]]})");
  EXPECT_EQ(r.cols(), 3U);
}

TEST(Json, Errors) {
  EXPECT_SIGCONJ_ERROR(parse_matrix_json("{"), ErrorCode::ParseError);
  EXPECT_SIGCONJ_ERROR(parse_matrix_json(R"({"n": 3, "entries": [[1, 2], [3, 4]]})"), ErrorCode::ParseError);
  EXPECT_SIGCONJ_ERROR(parse_matrix_json(R"({"n": 2, "entries": [[1, 2], [3]]})"), ErrorCode::ParseError);
  EXPECT_SIGCONJ_ERROR(parse_matrix_json(R"({"n": 1, "entries": [[1.5]]})"), ErrorCode::ParseError);
  EXPECT_SIGCONJ_ERROR(parse_matrix_json(R"({"entries": [[1]]})"), ErrorCode::ParseError);
}

TEST(Parse, AutoDetect) {
  EXPECT_EQ(parse_matrix("  {\"n\":1,\"entries\":[[7]]}"), (Matrix{{7}}));
  EXPECT_EQ(parse_matrix("7\n"), (Matrix{{7}}));
}

TEST(Render, RoundTripsBothFormats) {
  gen::Rng rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix a = gen::matrix(rng, rng.size(1, 5), rng.size(1, 5), 0.7);
    EXPECT_EQ(parse_matrix_csv(render_csv(a)), a);
    EXPECT_EQ(parse_matrix_json(render_json(a)), a);
  }
}

TEST(Load, Fixtures) {
  EXPECT_TRUE(load_matrix(kFixtures / "zero3.json").is_zero());
  EXPECT_EQ(load_matrix(kFixtures / "m3.json"), (Matrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}));
  EXPECT_EQ(load_matrix(kFixtures / "six6.csv").rows(), 6U);
  EXPECT_SIGCONJ_ERROR(load_matrix(kFixtures / "missing.csv"), ErrorCode::IoError);
  EXPECT_SIGCONJ_ERROR(load_matrix(kFixtures / "m3.json", MatrixFormat::Csv), ErrorCode::ParseError);
}

}  // namespace
}  // namespace sigconj
