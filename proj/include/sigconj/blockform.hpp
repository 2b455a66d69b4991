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

#pragma once

#include <cstddef>
#include <optional>

#include "sigconj/index_set.hpp"
#include "sigconj/invariants.hpp"
#include "sigconj/matrix.hpp"
#include "sigconj/permutation.hpp"
#include "sigconj/polynomial.hpp"
#include "sigconj/sign_vector.hpp"

namespace sigconj {

/// Positions of the +1 signs (I_r) and the -1 signs (J_(n-r)).
struct IndexPartition {
  IndexSet plus_indices;
  IndexSet minus_indices;
  std::size_t r() const noexcept { return plus_indices.size(); }
  std::size_t n() const noexcept { return plus_indices.size() + minus_indices.size(); }
};

IndexPartition index_partition(const SignVector& c);

/// Position k goes to the k-th element of I_r followed by J_(n-r).
Permutation block_permutation(const SignVector& c);

/// Block-diagonal form diag(D, E) of a matrix fixed by phi_c.
struct SymBlockForm {
  IndexPartition partition;
  Permutation permutation;
  Matrix d;
  Matrix e;
  Matrix conjugated;  // P^T A P
  Matrix assembled() const;
  bool holds() const { return conjugated == assembled(); }
};

/// Anti-diagonal form H = [[0, F], [G, 0]] of a matrix negated by phi_c.
struct AntiSymBlockForm {
  IndexPartition partition;
  Permutation permutation;
  Matrix f;
  Matrix g;
  Matrix conjugated;
  Matrix assembled() const;
  bool holds() const { return conjugated == assembled(); }
};

/// Errors: DimensionMismatch, NotSymUnderPhi (names the first offending entry).
SymBlockForm sym_block_form(const Matrix& a, const SignVector& c);
/// Errors: DimensionMismatch, NotAntiSymUnderPhi.
AntiSymBlockForm antisym_block_form(const Matrix& a, const SignVector& c);

struct SymFactorization {
  Polynomial char_poly_a;
  Polynomial char_poly_blocks;  // p_D * p_E
  Scalar det_a;
  Scalar det_blocks;            // |D| * |E|
  std::optional<Scalar> perm_a;       // absent above the permanent cap
  std::optional<Scalar> perm_blocks;  // perm(D) * perm(E)

  bool char_poly_holds() const { return char_poly_a == char_poly_blocks; }
  bool det_holds() const { return det_a == det_blocks; }
  bool perm_holds() const { return perm_a == perm_blocks; }
  bool holds() const { return char_poly_holds() && det_holds() && perm_holds(); }
};

SymFactorization factor_invariants_sym(const Matrix& a, const SignVector& c,
                                       const Limits& limits = {});

struct AntiSymFactorization {
  std::size_t n = 0;
  std::size_t r = 0;
  Scalar det_a;
  std::optional<Scalar> perm_a;
  // Only set when r = n/2.
  std::optional<Scalar> det_blocks;          // (-1)^(n/2) |F| |G|
  std::optional<Scalar> det_blocks_sign_n;   // (-1)^n |F| |G|, kept for comparison
  std::optional<Scalar> perm_blocks;         // perm(F) perm(G)

  bool balanced() const noexcept { return 2 * r == n; }
  bool det_holds() const { return balanced() ? det_a == *det_blocks : det_a.is_zero(); }
  bool perm_holds() const {
    if (!perm_a) return true;
    return balanced() ? (!perm_blocks || *perm_a == *perm_blocks) : perm_a->is_zero();
  }
  bool sign_n_holds() const { return balanced() && det_a == *det_blocks_sign_n; }
  bool holds() const { return det_holds() && perm_holds(); }
};

AntiSymFactorization factor_invariants_antisym(const Matrix& a, const SignVector& c,
                                               const Limits& limits = {});

}  // namespace sigconj
