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

#include "sigconj/blockform.hpp"

#include <string>

#include "sigconj/core.hpp"
#include "sigconj/decomposition.hpp"

namespace sigconj {

namespace {

std::string position(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

// Every entry on the complementary mask (c_i c_j = -keep) must be zero.
void require_mask(const Matrix& a, const SignVector& c, int keep, ErrorCode code,
                  std::string_view what) {
  require_square(a, what);
  if (a.rows() != c.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": matrix order " + std::to_string(a.rows()) +
                    " does not match sign vector length " + std::to_string(c.size()));
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (c[i] * c[j] != keep && !a(i, j).is_zero()) {
        throw Error(code, std::string(what) + ": entry " + position(i, j) + " = " +
                              a(i, j).to_string() + " must be zero for c = " + c.to_string());
      }
    }
  }
}

Matrix conjugate_by_permutation(const Matrix& a, const Permutation& p) {
  const Matrix pm = p.to_matrix();
  return matrix_product(matrix_product(pm.transpose(), a), pm);
}

Matrix assemble(const Matrix& top_left, const Matrix& top_right, const Matrix& bottom_left,
                const Matrix& bottom_right) {
  const std::size_t r = top_left.rows();
  const std::size_t s = bottom_right.rows();
  Matrix out(r + s, r + s);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) out(i, j) = top_left(i, j);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < s; ++j) out(i, r + j) = top_right(i, j);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < r; ++j) out(r + i, j) = bottom_left(i, j);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) out(r + i, r + j) = bottom_right(i, j);
  return out;
}

}  // namespace

IndexPartition index_partition(const SignVector& c) {
  std::vector<std::size_t> plus;
  std::vector<std::size_t> minus;
  for (std::size_t i = 0; i < c.size(); ++i) (c[i] > 0 ? plus : minus).push_back(i + 1);
  return {IndexSet(std::move(plus)), IndexSet(std::move(minus))};
}

Permutation block_permutation(const SignVector& c) {
  const IndexPartition part = index_partition(c);
  std::vector<std::size_t> images = part.plus_indices.indices();
  images.insert(images.end(), part.minus_indices.indices().begin(),
                part.minus_indices.indices().end());
  return Permutation::from_one_based(images);
}

Matrix SymBlockForm::assembled() const {
  return assemble(d, Matrix(d.rows(), e.rows()), Matrix(e.rows(), d.rows()), e);
}

Matrix AntiSymBlockForm::assembled() const {
  return assemble(Matrix(f.rows(), f.rows()), f, g, Matrix(g.rows(), g.rows()));
}

SymBlockForm sym_block_form(const Matrix& a, const SignVector& c) {
  require_mask(a, c, 1, ErrorCode::NotSymUnderPhi, "sym_block_form");
  SymBlockForm form;
  form.partition = index_partition(c);
  form.permutation = block_permutation(c);
  const auto plus = form.partition.plus_indices.zero_based();
  const auto minus = form.partition.minus_indices.zero_based();
  form.d = a.submatrix(plus, plus);
  form.e = a.submatrix(minus, minus);
  form.conjugated = conjugate_by_permutation(a, form.permutation);
  return form;
}

AntiSymBlockForm antisym_block_form(const Matrix& a, const SignVector& c) {
  require_mask(a, c, -1, ErrorCode::NotAntiSymUnderPhi, "antisym_block_form");
  AntiSymBlockForm form;
  form.partition = index_partition(c);
  form.permutation = block_permutation(c);
  const auto plus = form.partition.plus_indices.zero_based();
  const auto minus = form.partition.minus_indices.zero_based();
  form.f = a.submatrix(plus, minus);
  form.g = a.submatrix(minus, plus);
  form.conjugated = conjugate_by_permutation(a, form.permutation);
  return form;
}

SymFactorization factor_invariants_sym(const Matrix& a, const SignVector& c, const Limits& limits) {
  const SymBlockForm form = sym_block_form(a, c);
  SymFactorization out;
  out.char_poly_a = char_poly(a);
  out.char_poly_blocks = char_poly(form.d) * char_poly(form.e);
  out.det_a = determinant(a);
  out.det_blocks = determinant(form.d) * determinant(form.e);
  if (a.rows() <= limits.permanent_cap) {
    out.perm_a = permanent(a, limits.permanent_cap);
    out.perm_blocks = permanent(form.d, limits.permanent_cap) * permanent(form.e, limits.permanent_cap);
  }
  return out;
}

AntiSymFactorization factor_invariants_antisym(const Matrix& a, const SignVector& c,
                                               const Limits& limits) {
  const AntiSymBlockForm form = antisym_block_form(a, c);
  AntiSymFactorization out;
  out.n = a.rows();
  out.r = form.partition.r();
  out.det_a = determinant(a);
  if (a.rows() <= limits.permanent_cap) out.perm_a = permanent(a, limits.permanent_cap);
  if (out.balanced()) {
    const Scalar product = determinant(form.f) * determinant(form.g);
    // det [[0, F], [G, 0]] = (-1)^(r(n-r)) |F||G|, and r(n-r) = (n/2)^2 has
    // the parity of n/2.
    out.det_blocks = sign_power(out.n / 2) * product;
    out.det_blocks_sign_n = sign_power(out.n) * product;
    if (out.perm_a) {
      out.perm_blocks = permanent(form.f, limits.permanent_cap) * permanent(form.g, limits.permanent_cap);
    }
  }
  return out;
}

}  // namespace sigconj
