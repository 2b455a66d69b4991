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

#include "expect_error.hpp"
#include "generators.hpp"
#include "sigconj/blockform.hpp"
#include "sigconj/core.hpp"

namespace sigconj {
namespace {

TEST(IndexPartition, Examples) {
  const auto p = index_partition({1, 1, -1});
  EXPECT_EQ(p.plus_indices, (IndexSet{1, 2}));
  EXPECT_EQ(p.minus_indices, (IndexSet{3}));
  const auto q = index_partition({1, -1, 1, -1});
  EXPECT_EQ(q.plus_indices, (IndexSet{1, 3}));
  EXPECT_EQ(q.minus_indices, (IndexSet{2, 4}));
  const auto all = index_partition(SignVector::ones(4));
  EXPECT_EQ(all.r(), 4U);
  EXPECT_TRUE(all.minus_indices.empty());
}

TEST(BlockPermutation, Examples) {
  EXPECT_EQ(block_permutation({1, -1, 1}).to_string(), "(1,3,2)");
  EXPECT_EQ(block_permutation({1, 1, -1}).to_string(), "(1,2,3)");
  EXPECT_EQ(block_permutation({1, -1, -1, 1}).to_string(), "(1,4,2,3)");
}

TEST(SymBlockForm, ThreeByThreeExample) {
  const Matrix a{{1, 0, 5}, {0, 2, 0}, {7, 0, 3}};
  const SignVector c{1, -1, 1};
  const SymBlockForm form = sym_block_form(a, c);
  EXPECT_EQ(form.d, (Matrix{{1, 5}, {7, 3}}));
  EXPECT_EQ(form.e, (Matrix{{2}}));
  EXPECT_TRUE(form.holds());
  const auto f = factor_invariants_sym(a, c);
  EXPECT_EQ(f.det_a, Scalar(-64));
  EXPECT_TRUE(f.holds());
}

TEST(SymBlockForm, NumericPattern) {
  const Matrix a{{1, 2, 0}, {3, 4, 0}, {0, 0, 5}};
  const auto f = factor_invariants_sym(a, {1, 1, -1});
  EXPECT_EQ(f.det_a, Scalar(-10));
  ASSERT_TRUE(f.perm_a.has_value());
  EXPECT_EQ(*f.perm_a, Scalar(50));
  EXPECT_TRUE(f.holds());
}

TEST(SymBlockForm, EmptyMinusBlock) {
  const Matrix a{{1, 2}, {3, 4}};
  const SymBlockForm form = sym_block_form(a, {1, 1});
  EXPECT_EQ(form.e.rows(), 0U);
  const auto f = factor_invariants_sym(a, {1, 1});
  EXPECT_EQ(f.char_poly_blocks, f.char_poly_a);
}

TEST(SymBlockForm, RejectsNonFixedMatrix) {
  EXPECT_SIGCONJ_ERROR(sym_block_form(Matrix{{1, 2}, {3, 4}}, {1, -1}), ErrorCode::NotSymUnderPhi);
  EXPECT_SIGCONJ_ERROR(antisym_block_form(Matrix{{1, 2}, {3, 4}}, {1, -1}),
                       ErrorCode::NotAntiSymUnderPhi);
}

TEST(AntiSymBlockForm, TwoByTwo) {
  const Matrix a{{0, 2}, {3, 0}};
  const auto form = antisym_block_form(a, {1, -1});
  EXPECT_EQ(form.f, (Matrix{{2}}));
  EXPECT_EQ(form.g, (Matrix{{3}}));
  EXPECT_TRUE(form.holds());
  const auto f = factor_invariants_antisym(a, {1, -1});
  EXPECT_EQ(f.det_a, Scalar(-6));
  EXPECT_EQ(*f.det_blocks, Scalar(-6));
  EXPECT_EQ(*f.perm_a, Scalar(6));
  EXPECT_TRUE(f.holds());
  // The alternative sign (-1)^n predicts +6 here.
  EXPECT_FALSE(f.sign_n_holds());
}

TEST(AntiSymBlockForm, UnbalancedVanishes) {
  const Matrix a{{0, 0, 1}, {0, 0, 2}, {3, 4, 0}};
  const auto f = factor_invariants_antisym(a, {1, 1, -1});
  EXPECT_FALSE(f.balanced());
  EXPECT_TRUE(f.det_a.is_zero());
  EXPECT_TRUE(f.perm_a->is_zero());
  EXPECT_TRUE(f.holds());
  const auto z = factor_invariants_antisym(Matrix::zero(4), {1, -1, 1, -1});
  EXPECT_TRUE(z.det_a.is_zero());
  EXPECT_TRUE(z.holds());
}

TEST(BlockForms, RandomSymAndAntiSym) {
  gen::Rng rng(99);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 12; ++trial) {
      const SignVector c = gen::signs(rng, n);
      const Matrix s = gen::sym_under(rng, c, 0.8);
      const SymBlockForm sf = sym_block_form(s, c);
      const Matrix p = sf.permutation.to_matrix();
      EXPECT_EQ(p.transpose() * s * p, sf.assembled());
      EXPECT_TRUE(factor_invariants_sym(s, c).holds());

      const Matrix t = gen::antisym_under(rng, c, 0.8);
      const AntiSymBlockForm af = antisym_block_form(t, c);
      EXPECT_EQ(af.permutation.to_matrix().transpose() * t * af.permutation.to_matrix(), af.assembled());
      EXPECT_TRUE(factor_invariants_antisym(t, c).holds()) << "n=" << n << " c=" << c.to_string();
    }
  }
}

}  // namespace
}  // namespace sigconj
