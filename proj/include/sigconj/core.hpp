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

#include "sigconj/error.hpp"
#include "sigconj/matrix.hpp"
#include "sigconj/permutation.hpp"
#include "sigconj/scalar.hpp"
#include "sigconj/sign_vector.hpp"

namespace sigconj {

/// (phi_c(A))_ij = c_i * a_ij * c_j.
Matrix apply_phi(const Matrix& a, const SignVector& c);

/// diag(c_1, ..., c_n); its own inverse.
Matrix signature_matrix(const SignVector& c);

/// P(c) * A * P(c), computed through matrix_product. Agrees with apply_phi.
Matrix conjugate_by_signature(const Matrix& a, const SignVector& c);

}  // namespace sigconj
