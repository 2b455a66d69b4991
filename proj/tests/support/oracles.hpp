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

// Slow reference implementations used to cross-check the library kernels.
// None of these call into the invariants module.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "sigconj/matrix.hpp"
#include "sigconj/polynomial.hpp"
#include "sigconj/scalar.hpp"
#include "sigconj/sign_vector.hpp"

namespace sigconj::oracle {

/// Sum over all n! permutations.
inline Scalar naive_permanent(const Matrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Scalar total(0);
  do {
    Scalar term(1);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term *= a(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

inline Matrix drop_row_col(const Matrix& a, std::size_t row, std::size_t col) {
  Matrix out(a.rows() - 1, a.cols() - 1);
  for (std::size_t i = 0, oi = 0; i < a.rows(); ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, oj = 0; j < a.cols(); ++j) {
      if (j == col) continue;
      out(oi, oj++) = a(i, j);
    }
    ++oi;
  }
  return out;
}

/// Laplace expansion along the first row.
inline Scalar cofactor_determinant(const Matrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return Scalar(1);
  if (n == 1) return a(0, 0);
  Scalar total(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j).is_zero()) continue;
    Scalar term = a(0, j) * cofactor_determinant(drop_row_col(a, 0, j));
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

/// A - x I.
inline Matrix shifted(const Matrix& a, const Scalar& x) {
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) out(i, i) -= x;
  return out;
}

/// The unique polynomial of degree < xs.size() through the points (xs[k], ys[k]),
/// built from Newton divided differences.
inline Polynomial interpolate(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys) {
  const std::size_t m = xs.size();
  std::vector<Scalar> d = ys;
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t k = m - 1; k >= level; --k) {
      d[k] = (d[k] - d[k - 1]) / (xs[k] - xs[k - level]);
    }
  }
  Polynomial result = Polynomial::constant(d[m - 1]);
  for (std::size_t k = m - 1; k-- > 0;) {
    result = result * Polynomial({-xs[k], Scalar(1)}) + Polynomial::constant(d[k]);
  }
  return result;
}

/// perm(A - x I) sampled at x = 0..n and interpolated.
inline Polynomial interpolated_perm_poly(const Matrix& a) {
  std::vector<Scalar> xs, ys;
  for (std::size_t k = 0; k <= a.rows(); ++k) {
    xs.emplace_back(static_cast<long>(k));
    ys.push_back(naive_permanent(shifted(a, xs.back())));
  }
  return interpolate(xs, ys);
}

/// |A - x I| sampled at x = 0..n with a caller-supplied determinant.
template <class Det>
Polynomial interpolated_char_poly(const Matrix& a, Det det) {
  std::vector<Scalar> xs, ys;
  for (std::size_t k = 0; k <= a.rows(); ++k) {
    xs.emplace_back(static_cast<long>(k));
    ys.push_back(det(shifted(a, xs.back())));
  }
  return interpolate(xs, ys);
}

/// Entrywise definition c_i a_ij c_j, written independently of apply_phi.
inline Matrix entrywise_phi(const Matrix& a, const SignVector& c) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(i, j) = (c[i] * c[j] == 1) ? a(i, j) : -a(i, j);
    }
  }
  return out;
}

/// Submatrix on the rows/columns whose bit is set in `mask`.
inline Matrix masked_principal(const Matrix& a, std::uint64_t mask) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (mask >> i & 1U) idx.push_back(i);
  Matrix out(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = a(idx[i], idx[j]);
  return out;
}

}  // namespace sigconj::oracle
