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

#include <atomic>
#include <thread>

#include "expect_error.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "sigconj/core.hpp"
#include "sigconj/invariants.hpp"

namespace sigconj {
namespace {

const Matrix k22{{1, 2}, {3, 4}};
const Matrix k33{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}};

Polynomial poly(std::initializer_list<long> ascending) {
  std::vector<Scalar> c;
  for (long v : ascending) c.emplace_back(v);
  return Polynomial(std::move(c));
}

TEST(Trace, Examples) {
  EXPECT_EQ(trace(k22), Scalar(5));
  EXPECT_EQ(trace(Matrix::zero(3)), Scalar(0));
  const Matrix a{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  EXPECT_EQ(trace(apply_phi(a, {1, -1, 1})), Scalar(15));
  EXPECT_SIGCONJ_ERROR(trace(Matrix(2, 3)), ErrorCode::NotSquare);
}

TEST(Determinant, Examples) {
  EXPECT_EQ(determinant(k22), Scalar(-2));
  EXPECT_EQ(determinant(Matrix::identity(5)), Scalar(1));
  EXPECT_EQ(determinant(Matrix{{Scalar(1, 2), 1}, {1, Scalar(1, 3)}}), Scalar(-5, 6));
  EXPECT_EQ(determinant(Matrix(0, 0)), Scalar(1));
}

TEST(Permanent, Examples) {
  EXPECT_EQ(permanent(k22), Scalar(10));
  EXPECT_EQ(permanent(Matrix{{1, 1}, {1, 1}}), Scalar(2));
  EXPECT_EQ(permanent(Matrix::identity(6)), Scalar(1));
  EXPECT_SIGCONJ_ERROR(permanent(Matrix::identity(5), 4), ErrorCode::SizeCapExceeded);
}

TEST(Permanent, AllOnesIsFactorial) {
  long factorial = 1;
  for (std::size_t n = 1; n <= 10; ++n) {
    factorial *= static_cast<long>(n);
    Matrix j(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) j(i, k) = Scalar(1);
    EXPECT_EQ(permanent(j), Scalar(factorial)) << "n=" << n;
  }
}

TEST(Permanent, WideEntriesUseExactPath) {
  Matrix a(3, 3);
  const Scalar big = Scalar::parse("123456789012345678901234567890");
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) a(i, j) = big;
  EXPECT_EQ(permanent(a), Scalar(6) * big * big * big);
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(Matrix{{1, 2}, {2, 4}}), 1U);
  EXPECT_EQ(rank(Matrix::zero(4)), 0U);
  EXPECT_EQ(rank(Matrix::identity(3)), 3U);
  EXPECT_EQ(rank(Matrix{{1, 2, 3}, {2, 4, 6}}), 1U);
}

TEST(PrincipalMinor, Examples) {
  EXPECT_EQ(principal_minor(k22, {1, 2}), Scalar(-2));
  EXPECT_EQ(principal_minor(k33, {1, 3}), Scalar(-11));
  EXPECT_EQ(principal_minor(k33, {}), Scalar(1));
  for (std::size_t i = 1; i <= 3; ++i) EXPECT_EQ(principal_minor(k33, {i}), k33(i - 1, i - 1));
  EXPECT_SIGCONJ_ERROR(principal_minor(k33, {1, 4}), ErrorCode::IndexOutOfRange);
}

TEST(PrincipalPermanent, Examples) {
  EXPECT_EQ(principal_permanent(k22, {1, 2}), Scalar(10));
  EXPECT_EQ(principal_permanent(k33, {2, 3}), Scalar(98));
  EXPECT_EQ(principal_permanent(k33, {}), Scalar(1));
  EXPECT_EQ(principal_permanent(k33, {2}), Scalar(5));
}

TEST(PrincipalSums, Examples) {
  EXPECT_EQ(sum_principal_minors(k22, 2), Scalar(-2));
  EXPECT_EQ(sum_principal_permanents(k22, 2), Scalar(10));
  EXPECT_EQ(sum_principal_minors(k33, 0), Scalar(1));
  EXPECT_EQ(sum_principal_minors(k33, 1), trace(k33));
  EXPECT_EQ(sum_principal_minors(k33, 3), determinant(k33));
  EXPECT_EQ(sum_principal_permanents(k33, 1), trace(k33));
  EXPECT_EQ(sum_principal_permanents(k33, 3), permanent(k33));
  EXPECT_SIGCONJ_ERROR(sum_principal_minors(k33, 4), ErrorCode::OrderOutOfRange);
  Limits tight;
  tight.minor_sum_cap = 2;
  EXPECT_SIGCONJ_ERROR(sum_principal_minors(k33, 1, tight), ErrorCode::SizeCapExceeded);
}

TEST(CharPoly, Examples) {
  EXPECT_EQ(char_poly(k22), poly({-2, -5, 1}));
  EXPECT_EQ(char_poly(Matrix::zero(3)), poly({0, 0, 0, -1}));
  const Matrix path{{0, 1, 0}, {1, 0, 1}, {0, 1, 0}};
  EXPECT_EQ(char_poly(apply_phi(path, {1, -1, 1})), poly({0, 2, 0, -1}));
  EXPECT_EQ(char_poly(path), poly({0, 2, 0, -1}));
  EXPECT_EQ(char_poly(k22).to_string(), "l^2 - 5*l - 2");
}

TEST(PermPoly, Examples) {
  EXPECT_EQ(perm_poly(k22), poly({10, -5, 1}));
  EXPECT_EQ(perm_poly(Matrix::zero(2)), poly({0, 0, 1}));
  // perm(diag(1 - l, 1 - l)) = (1 - l)^2.
  EXPECT_EQ(perm_poly(Matrix::identity(2)), poly({1, -2, 1}));
  EXPECT_EQ(perm_poly(Matrix::identity(2)), oracle::interpolated_perm_poly(Matrix::identity(2)));
  Limits tight;
  tight.perm_poly_cap = 2;
  EXPECT_SIGCONJ_ERROR(perm_poly(k33, tight), ErrorCode::SizeCapExceeded);
}

TEST(Oracles, RyserMatchesNaivePermanent) {
  gen::Rng rng(101);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = rng.size(1, 7);
    const Matrix a = gen::square(rng, n, 0.7);
    ASSERT_EQ(permanent(a), oracle::naive_permanent(a)) << "n=" << n;
  }
}

TEST(Oracles, BareissMatchesCofactorExpansion) {
  gen::Rng rng(202);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = rng.size(1, 4);
    const Matrix a = gen::square(rng, n, 0.8);
    ASSERT_EQ(determinant(a), oracle::cofactor_determinant(a));
  }
  // Pivoting: zero in the leading position.
  const Matrix a{{0, 1, 2}, {1, 0, 3}, {4, -3, 8}};
  EXPECT_EQ(determinant(a), oracle::cofactor_determinant(a));
}

TEST(Oracles, FaddeevLeVerrierMatchesSubsetSums) {
  gen::Rng rng(303);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = rng.size(1, 10);
    const Matrix a = gen::square(rng, n, 0.6);
    const Polynomial p = char_poly(a);
    ASSERT_EQ(p.degree(), n);
    // Coefficient of l^(n-k) is (-1)^(n-k) times the sum of all order-k
    // principal minors, each minor computed on its own submatrix.
    for (std::size_t k = 0; k <= n; ++k) {
      Scalar sum(0);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != k) continue;
        sum += determinant(oracle::masked_principal(a, mask));
      }
      ASSERT_EQ(p.coefficient(n - k), sign_power(n - k) * sum) << "n=" << n << " k=" << k;
    }
  }
}

TEST(Oracles, CharPolyMatchesInterpolation) {
  gen::Rng rng(404);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = rng.size(1, 5);
    const Matrix a = gen::square(rng, n);
    EXPECT_EQ(char_poly(a), oracle::interpolated_char_poly(a, oracle::cofactor_determinant));
  }
}

TEST(Oracles, PermPolyMatchesInterpolation) {
  gen::Rng rng(505);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = rng.size(1, 6);
    const Matrix a = gen::square(rng, n, 0.8);
    ASSERT_EQ(perm_poly(a), oracle::interpolated_perm_poly(a)) << "n=" << n;
  }
}

TEST(Invariants, PreservedUnderPhi) {
  gen::Rng rng(606);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = rng.size(1, 7);
    const Matrix a = gen::square(rng, n, 0.8);
    const SignVector c = gen::signs(rng, n);
    const Matrix b = apply_phi(a, c);
    EXPECT_EQ(trace(b), trace(a));
    EXPECT_EQ(determinant(b), determinant(a));
    EXPECT_EQ(permanent(b), permanent(a));
    EXPECT_EQ(rank(b), rank(a));
    EXPECT_EQ(char_poly(b), char_poly(a));
    EXPECT_EQ(perm_poly(b), perm_poly(a));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const IndexSet s = IndexSet::from_mask(mask, n);
      ASSERT_EQ(principal_minor(b, s), principal_minor(a, s));
      ASSERT_EQ(principal_permanent(b, s), principal_permanent(a, s));
    }
  }
}

TEST(Invariants, ThreadCountDoesNotChangeResults) {
  gen::Rng rng(707);
  const Matrix a = gen::square(rng, 9, 0.7);
  Limits one;
  Limits many;
  many.threads = 4;
  for (std::size_t k = 0; k <= 9; ++k) {
    EXPECT_EQ(sum_principal_minors(a, k, one), sum_principal_minors(a, k, many));
    EXPECT_EQ(sum_principal_permanents(a, k, one), sum_principal_permanents(a, k, many));
  }
  EXPECT_EQ(perm_poly(a, one), perm_poly(a, many));
}

TEST(Polynomial, Arithmetic) {
  const Polynomial p = poly({1, 1});
  EXPECT_EQ(p * p, poly({1, 2, 1}));
  EXPECT_EQ(p + poly({-1, -1}), Polynomial());
  EXPECT_EQ(Polynomial().degree(), 0U);
  EXPECT_EQ(poly({0, 0, 0}), Polynomial());
  EXPECT_EQ((p * p).evaluate(Scalar(3)), Scalar(16));
  EXPECT_EQ(poly({2, 0, -1}).to_string(), "-l^2 + 2");
  EXPECT_EQ(p.coefficient(7), Scalar(0));
}

TEST(Polynomials, ValuesAtZero) {
  gen::Rng rng(808);
  for (int trial = 0; trial < 40; ++trial) {
    const Matrix a = gen::square(rng, rng.size(1, 7), 0.8);
    EXPECT_EQ(char_poly(a).evaluate(Scalar(0)), determinant(a));
    EXPECT_EQ(perm_poly(a).evaluate(Scalar(0)), permanent(a));
  }
}

TEST(Invariants, SafeToCallConcurrently) {
  gen::Rng rng(909);
  const Matrix a = gen::square(rng, 7, 0.8);
  const Polynomial expected_char = char_poly(a);
  const Polynomial expected_perm = perm_poly(a);
  std::vector<std::thread> workers;
  std::atomic<int> mismatches{0};
  for (int w = 0; w < 6; ++w) {
    workers.emplace_back([&] {
      Limits limits;
      limits.threads = 2;
      for (int k = 0; k < 5; ++k) {
        if (char_poly(a) != expected_char || perm_poly(a, limits) != expected_perm) ++mismatches;
      }
    });
  }
  for (auto& t : workers) t.join();
  EXPECT_EQ(mismatches.load(), 0);
}

}  // namespace
}  // namespace sigconj
