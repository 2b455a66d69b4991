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

#include "sigconj/core.hpp"

#include <string>

namespace sigconj {

namespace {

void require_match(const Matrix& a, const SignVector& c, std::string_view operation) {
  require_square(a, operation);
  if (a.rows() != c.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(operation) + ": matrix order " + std::to_string(a.rows()) +
                    " does not match sign vector length " + std::to_string(c.size()));
  }
}

}  // namespace

Matrix apply_phi(const Matrix& a, const SignVector& c) {
  require_match(a, c, "apply_phi");
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (c[i] * c[j] < 0) out(i, j) = -a(i, j);
    }
  }
  return out;
}

Matrix signature_matrix(const SignVector& c) {
  Matrix p(c.size(), c.size());
  for (std::size_t i = 0; i < c.size(); ++i) p(i, i) = Scalar(c[i]);
  return p;
}

Matrix conjugate_by_signature(const Matrix& a, const SignVector& c) {
  require_match(a, c, "conjugate_by_signature");
  const Matrix p = signature_matrix(c);
  return matrix_product(matrix_product(p, a), p);
}

}  // namespace sigconj
