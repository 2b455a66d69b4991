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

#include "sigconj/decomposition.hpp"

#include "sigconj/core.hpp"
#include "sigconj/invariants.hpp"

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

Matrix masked(const Matrix& a, const SignVector& c, int keep) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (c[i] * c[j] == keep) out(i, j) = a(i, j);
  return out;
}

Scalar order2_minor_sum(const Matrix& a) {
  Limits limits;
  limits.minor_sum_cap = std::max(limits.minor_sum_cap, a.rows());
  return sum_principal_minors(a, 2, limits);
}

Scalar order2_permanent_sum(const Matrix& a) {
  Limits limits;
  limits.minor_sum_cap = std::max(limits.minor_sum_cap, a.rows());
  return sum_principal_permanents(a, 2, limits);
}

void require_order_two(const Matrix& a, std::string_view operation) {
  require_square(a, operation);
  if (a.rows() < 2) {
    throw Error(ErrorCode::OrderOutOfRange,
                std::string(operation) + " needs n >= 2 for order-2 principal sums");
  }
}

}  // namespace

std::string_view to_string(SymmetryClass k) noexcept {
  switch (k) {
    case SymmetryClass::SymUnderPhi: return "SymUnderPhi";
    case SymmetryClass::AntiSymUnderPhi: return "AntiSymUnderPhi";
    case SymmetryClass::Neither: return "Neither";
  }
  return "Neither";
}

Matrix sym_part(const Matrix& a, const SignVector& c) {
  require_match(a, c, "sym_part");
  return masked(a, c, 1);
}

Matrix antisym_part(const Matrix& a, const SignVector& c) {
  require_match(a, c, "antisym_part");
  return masked(a, c, -1);
}

Matrix sym_part_by_averaging(const Matrix& a, const SignVector& c) {
  return Scalar(1, 2) * (a + apply_phi(a, c));
}

Matrix antisym_part_by_averaging(const Matrix& a, const SignVector& c) {
  return Scalar(1, 2) * (a - apply_phi(a, c));
}

DecompositionPair split(const Matrix& a, const SignVector& c) {
  return {sym_part(a, c), antisym_part(a, c)};
}

SymmetryClass classify(const Matrix& a, const SignVector& c) {
  const Matrix image = apply_phi(a, c);
  if (image == a) return SymmetryClass::SymUnderPhi;
  if (image == -a) return SymmetryClass::AntiSymUnderPhi;
  return SymmetryClass::Neither;
}

DecompositionPair classic_split(const Matrix& a) {
  require_square(a, "classic_split");
  const Matrix t = a.transpose();
  return {Scalar(1, 2) * (a + t), Scalar(1, 2) * (a - t)};
}

SubspaceDims subspace_dims(std::size_t n, std::size_t r) {
  if (r < 1 || r > n) {
    throw Error(ErrorCode::RangeError, "number of plus signs r = " + std::to_string(r) +
                                           " must satisfy 1 <= r <= n = " + std::to_string(n));
  }
  return {r * r + (n - r) * (n - r), 2 * r * (n - r)};
}

SubspaceDims mask_dims(const SignVector& c) {
  SubspaceDims dims{0, 0};
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) (c[i] * c[j] > 0 ? dims.sym : dims.antisym) += 1;
  return dims;
}

AdditivityCheck minor2_additivity(const Matrix& a, const SignVector& c) {
  require_order_two(a, "minor2_additivity");
  const auto parts = split(a, c);
  return {order2_minor_sum(a), order2_minor_sum(parts.sym_part), order2_minor_sum(parts.antisym_part)};
}

AdditivityCheck permanent2_additivity(const Matrix& a, const SignVector& c) {
  require_order_two(a, "permanent2_additivity");
  const auto parts = split(a, c);
  return {order2_permanent_sum(a), order2_permanent_sum(parts.sym_part),
          order2_permanent_sum(parts.antisym_part)};
}

AdditivityCheck minor2_additivity_classic(const Matrix& a) {
  require_order_two(a, "minor2_additivity_classic");
  const auto parts = classic_split(a);
  return {order2_minor_sum(a), order2_minor_sum(parts.sym_part), order2_minor_sum(parts.antisym_part)};
}

AdditivityCheck permanent2_additivity_classic(const Matrix& a) {
  require_order_two(a, "permanent2_additivity_classic");
  const auto parts = classic_split(a);
  return {order2_permanent_sum(a), order2_permanent_sum(parts.sym_part),
          order2_permanent_sum(parts.antisym_part)};
}

}  // namespace sigconj
