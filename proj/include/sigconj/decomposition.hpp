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
#include <string_view>

#include "sigconj/matrix.hpp"
#include "sigconj/scalar.hpp"
#include "sigconj/sign_vector.hpp"

namespace sigconj {

enum class SymmetryClass { SymUnderPhi, AntiSymUnderPhi, Neither };

std::string_view to_string(SymmetryClass k) noexcept;

struct DecompositionPair {
  Matrix sym_part;
  Matrix antisym_part;
};

/// Entries with c_i * c_j = 1 kept, the rest zeroed.
Matrix sym_part(const Matrix& a, const SignVector& c);
/// Entries with c_i * c_j = -1 kept, the rest zeroed. Diagonal is always zero.
Matrix antisym_part(const Matrix& a, const SignVector& c);

/// (A + phi_c(A)) / 2 and (A - phi_c(A)) / 2. Same results as the masks,
/// reached without looking at c_i * c_j directly.
Matrix sym_part_by_averaging(const Matrix& a, const SignVector& c);
Matrix antisym_part_by_averaging(const Matrix& a, const SignVector& c);

DecompositionPair split(const Matrix& a, const SignVector& c);

/// The zero matrix is both; it is reported as SymUnderPhi.
SymmetryClass classify(const Matrix& a, const SignVector& c);

/// (A + A^T) / 2 and (A - A^T) / 2.
DecompositionPair classic_split(const Matrix& a);

struct SubspaceDims {
  std::size_t sym;
  std::size_t antisym;
  friend bool operator==(const SubspaceDims&, const SubspaceDims&) = default;
};

/// (r^2 + (n-r)^2, 2r(n-r)) for r plus-signs out of n; RangeError unless 1 <= r <= n.
SubspaceDims subspace_dims(std::size_t n, std::size_t r);

/// The same pair obtained by counting the kept entries of each mask.
SubspaceDims mask_dims(const SignVector& c);

/// lhs = order-2 principal sum of A; rhs_* = the same sum on each part.
struct AdditivityCheck {
  Scalar lhs;
  Scalar rhs_sym;
  Scalar rhs_antisym;
  bool holds() const { return lhs == rhs_sym + rhs_antisym; }
};

AdditivityCheck minor2_additivity(const Matrix& a, const SignVector& c);
AdditivityCheck permanent2_additivity(const Matrix& a, const SignVector& c);
AdditivityCheck minor2_additivity_classic(const Matrix& a);
AdditivityCheck permanent2_additivity_classic(const Matrix& a);

}  // namespace sigconj
