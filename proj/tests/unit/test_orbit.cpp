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

#include <set>

#include "expect_error.hpp"
#include "generators.hpp"
#include "sigconj/core.hpp"
#include "sigconj/invariants.hpp"
#include "sigconj/io.hpp"
#include "sigconj/orbit.hpp"

namespace sigconj {
namespace {

const Matrix kEdgeLoop{{0, 1, 0}, {1, 0, 0}, {0, 0, 5}};
const Matrix kOnes3{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}};

TEST(GraphComponents, Examples) {
  const auto c = graph_components(kEdgeLoop);
  EXPECT_EQ(c.labels, (std::vector<std::size_t>{1, 1, 2}));
  EXPECT_EQ(c.t, 2U);
  EXPECT_EQ(graph_components(Matrix::zero(4)).t, 4U);
  EXPECT_EQ(graph_components(kOnes3).t, 1U);
  // One orientation suffices for an edge.
  EXPECT_EQ(graph_components(Matrix{{0, 0}, {7, 0}}).t, 1U);
}

TEST(OrbitSize, Examples) {
  const auto r = orbit_size(kEdgeLoop);
  EXPECT_EQ(r.orbit_size, 2);
  EXPECT_EQ(r.stabilizer_size, 2);
  EXPECT_TRUE(r.enumeration_matches());
  EXPECT_EQ(orbit_size(Matrix::zero(3)).orbit_size, 1);
  EXPECT_EQ(orbit_size(Matrix::zero(5)).stabilizer_size, 16);
  EXPECT_EQ(orbit_size(kOnes3).orbit_size, 4);
  EXPECT_EQ(orbit_size(kOnes3).stabilizer_size, 1);
}

TEST(OrbitSize, LargeNSkipsEnumeration) {
  Matrix a(70, 70);
  const auto r = orbit_size(a);
  EXPECT_FALSE(r.enumerated.has_value());
  EXPECT_EQ(r.stabilizer_size, mpz_class(1) << 69);
}

TEST(Stabilizer, Examples) {
  EXPECT_EQ(stabilizer_elements(kEdgeLoop), (std::vector<SignVector>{{1, 1, 1}, {1, 1, -1}}));
  EXPECT_EQ(stabilizer_elements(kOnes3), (std::vector<SignVector>{{1, 1, 1}}));
  EXPECT_EQ(stabilizer_elements(Matrix::zero(3)).size(), 4U);
}

TEST(Orbit, RandomSparseMatricesAgreeWithBruteForce) {
  gen::Rng rng(123);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = rng.size(1, 8);
    const Matrix a = gen::square(rng, n, 0.15);
    const auto report = orbit_size(a);
    const std::size_t t = graph_components(a).t;
    std::set<std::string> images;
    for (std::uint64_t idx = 0; idx < SignVector::admissible_count(n); ++idx)
      images.insert(render_csv(apply_phi(a, SignVector::from_index(n, idx))));
    EXPECT_EQ(mpz_class(images.size()), mpz_class(1) << (n - t));
    EXPECT_EQ(report.orbit_size, mpz_class(images.size()));
    ASSERT_TRUE(report.enumerated.has_value());
    EXPECT_EQ(report.enumerated->size(), images.size());
    const auto brute = brute_force_stabilizer(a);
    EXPECT_EQ(stabilizer_elements(a), brute);
    EXPECT_EQ(mpz_class(brute.size()), mpz_class(1) << (t - 1));
    EXPECT_EQ(report.orbit_size * report.stabilizer_size, mpz_class(1) << (n - 1));
  }
}

TEST(Orbit, ThreadedEnumerationIsDeterministic) {
  gen::Rng rng(5);
  const Matrix a = gen::square(rng, 9, 0.2);
  Limits one, four;
  four.threads = 4;
  EXPECT_EQ(enumerate_orbit(a, one), enumerate_orbit(a, four));
}

TEST(Orbit, RejectsNonSquare) {
  EXPECT_SIGCONJ_ERROR(orbit_size(Matrix(2, 3)), ErrorCode::NotSquare);
}

TEST(Orbit, MembersShareInvariants) {
  gen::Rng rng(321);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = rng.size(1, 6);
    const Matrix a = gen::square(rng, n, 0.4);
    for (const Matrix& b : enumerate_orbit(a)) {
      EXPECT_EQ(trace(b), trace(a));
      EXPECT_EQ(determinant(b), determinant(a));
      EXPECT_EQ(permanent(b), permanent(a));
      EXPECT_EQ(rank(b), rank(a));
      EXPECT_EQ(char_poly(b), char_poly(a));
      EXPECT_EQ(perm_poly(b), perm_poly(a));
    }
  }
}

TEST(GraphComponents, IgnoresDiagonalAndTransposition) {
  gen::Rng rng(654);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = rng.size(1, 8);
    Matrix a = gen::square(rng, n, 0.2);
    const auto base = graph_components(a);
    EXPECT_EQ(graph_components(a.transpose()).labels, base.labels);
    for (std::size_t i = 0; i < n; ++i) a(i, i) = Scalar(static_cast<long>(i) + 1);
    EXPECT_EQ(graph_components(a).labels, base.labels);
  }
}

}  // namespace
}  // namespace sigconj
