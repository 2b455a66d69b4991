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

#include "sigconj/index_set.hpp"
#include "sigconj/matrix.hpp"
#include "sigconj/polynomial.hpp"
#include "sigconj/scalar.hpp"

namespace sigconj {

/// Size caps for the exponential kernels plus the worker count. These are
/// configuration: the CLI exposes each one as a flag.
struct Limits {
  std::size_t permanent_cap = 20;  // Ryser, 2^n steps
  std::size_t perm_poly_cap = 12;  // subset sums of permanents, ~3^n
  std::size_t minor_sum_cap = 16;  // full subset enumeration for minor sums
  std::size_t orbit_cap = 12;      // brute-force enumeration over 2^(n-1) sign vectors
  unsigned threads = 1;
};

Scalar trace(const Matrix& a);

/// Fraction-free (Bareiss) elimination after clearing row denominators.
Scalar determinant(const Matrix& a);

/// Ryser inclusion-exclusion walked in Gray-code order, so each step updates
/// the row sums with a single column. Throws SizeCapExceeded above `cap`.
Scalar permanent(const Matrix& a, std::size_t cap = Limits{}.permanent_cap);

/// Rank over Q; works for rectangular matrices.
std::size_t rank(const Matrix& a);

Scalar principal_minor(const Matrix& a, const IndexSet& s);
Scalar principal_permanent(const Matrix& a, const IndexSet& s,
                           std::size_t cap = Limits{}.permanent_cap);

/// Sum of the C(n,k) principal minors of order k. k = 0 yields 1.
Scalar sum_principal_minors(const Matrix& a, std::size_t k, const Limits& limits = {});
Scalar sum_principal_permanents(const Matrix& a, std::size_t k, const Limits& limits = {});

/// p_A(lambda) = |A - lambda I| by Faddeev-LeVerrier.
Polynomial char_poly(const Matrix& a);

/// q_A(lambda) = perm(A - lambda I), assembled from principal permanent sums:
/// [lambda^(n-k)] q_A = (-1)^(n-k) * sum_principal_permanents(A, k).
Polynomial perm_poly(const Matrix& a, const Limits& limits = {});

}  // namespace sigconj
