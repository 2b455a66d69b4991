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

#include "sigconj/invariants.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "parallel.hpp"
#include "sigconj/error.hpp"

namespace sigconj {

namespace {

// Row i of A multiplied by the lcm of its denominators. For any principal
// index set S, det(A[S]) = det(B[S]) / prod_{i in S} scale_i, and likewise for
// the permanent.
struct IntegerImage {
  std::size_t n = 0;
  std::vector<mpz_class> entries;
  std::vector<mpz_class> row_scale;

  const mpz_class& at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
};

IntegerImage integer_image(const Matrix& a) {
  IntegerImage img;
  img.n = a.rows();
  img.entries.resize(a.rows() * a.cols());
  img.row_scale.assign(a.rows(), mpz_class(1));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    mpz_class& l = img.row_scale[i];
    for (std::size_t j = 0; j < a.cols(); ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).value().get_den_mpz_t());
    }
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const mpq_class& q = a(i, j).value();
      img.entries[i * a.cols() + j] = q.get_num() * (l / q.get_den());
    }
  }
  return img;
}

std::vector<mpz_class> principal_block(const IntegerImage& img, const std::vector<std::size_t>& idx) {
  std::vector<mpz_class> m(idx.size() * idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t s = 0; s < idx.size(); ++s) m[r * idx.size() + s] = img.at(idx[r], idx[s]);
  return m;
}

mpz_class scale_product(const IntegerImage& img, const std::vector<std::size_t>& idx) {
  mpz_class p = 1;
  for (std::size_t i : idx) p *= img.row_scale[i];
  return p;
}

// Bareiss: after step k every trailing entry is a (k+1)x(k+1) minor, so the
// division by the previous pivot is exact.
mpz_class bareiss_determinant(std::vector<mpz_class> m, std::size_t n) {
  if (n == 0) return 1;
  int sign = 1;
  mpz_class previous = 1;
  mpz_class t;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k * n + k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot * n + k] == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[pivot * n + j]);
      sign = -sign;
    }
    const mpz_class& p = m[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        t = m[i * n + j] * p - m[i * n + k] * m[k * n + j];
        mpz_divexact(m[i * n + j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      m[i * n + k] = 0;
    }
    previous = p;
  }
  mpz_class det = m[n * n - 1];
  return sign < 0 ? mpz_class(-det) : det;
}

unsigned bit_length(const mpz_class& x) {
  return x == 0 ? 0U : static_cast<unsigned>(mpz_sizeinbase(x.get_mpz_t(), 2));
}

// Every partial result of Ryser is bounded by 2^n (n*B)^n where B bounds the
// entries; the native path is taken when that fits comfortably in 125 bits.
bool fits_native(const std::vector<mpz_class>& m, std::size_t n) {
  unsigned b = 0;
  for (const auto& x : m) b = std::max(b, bit_length(x));
  const unsigned nb = std::bit_width(static_cast<unsigned>(n));
  return b <= 62 && n * (nb + b + 1) <= 125;
}

mpz_class to_mpz(__int128 v) {
  const bool negative = v < 0;
  unsigned __int128 u = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1
                                 : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(u >> 64));
  mpz_class out = (hi << 64) + mpz_class(static_cast<unsigned long>(u & ~std::uint64_t{0}));
  return negative ? mpz_class(-out) : out;
}

template <class Int, class Load>
Int ryser_gray(std::size_t n, Load load) {
  // perm = (-1)^n sum_{S} (-1)^|S| prod_i sum_{j in S} a_ij
  std::vector<Int> row_sum(n, Int(0));
  Int total(0);
  Int term;
  std::uint64_t gray = 0;
  const std::uint64_t steps = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < steps; ++k) {
    const unsigned j = static_cast<unsigned>(std::countr_zero(k));
    gray ^= std::uint64_t{1} << j;
    const bool added = (gray >> j) & 1U;
    for (std::size_t i = 0; i < n; ++i) {
      if (added) {
        row_sum[i] += load(i, j);
      } else {
        row_sum[i] -= load(i, j);
      }
    }
    term = row_sum[0];
    for (std::size_t i = 1; i < n; ++i) {
      if (term == 0) break;
      term *= row_sum[i];
    }
    if (std::popcount(gray) % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return (n % 2 == 0) ? total : Int(-total);
}

mpz_class ryser_permanent(const std::vector<mpz_class>& m, std::size_t n) {
  if (n == 0) return 1;
  if (fits_native(m, n)) {
    std::vector<__int128> native(m.size());
    for (std::size_t k = 0; k < m.size(); ++k) native[k] = m[k].get_si();
    return to_mpz(ryser_gray<__int128>(n, [&](std::size_t i, std::size_t j) { return native[i * n + j]; }));
  }
  return ryser_gray<mpz_class>(n, [&](std::size_t i, std::size_t j) -> const mpz_class& { return m[i * n + j]; });
}

void require_permanent_cap(std::size_t n, std::size_t cap) {
  if (n > cap || n > 62) {
    throw Error(ErrorCode::SizeCapExceeded, "permanent of order " + std::to_string(n) +
                                                " exceeds the cap " + std::to_string(cap));
  }
}

// All k-subsets of {0..n-1} as bitmasks, in increasing numeric order.
std::vector<std::uint64_t> k_subsets(std::size_t n, std::size_t k) {
  std::vector<std::uint64_t> out;
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  while (mask < limit) {
    out.push_back(mask);
    const std::uint64_t c = mask & (~mask + 1);
    const std::uint64_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
  return out;
}

std::vector<std::size_t> mask_indices(std::uint64_t mask) {
  std::vector<std::size_t> idx;
  while (mask) {
    idx.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return idx;
}

template <class Kernel>
Scalar principal_sum(const Matrix& a, std::size_t k, const Limits& limits, std::string_view what,
                     Kernel kernel) {
  require_square(a, what);
  const std::size_t n = a.rows();
  if (k > n) {
    throw Error(ErrorCode::OrderOutOfRange, std::string(what) + ": order " + std::to_string(k) +
                                                " exceeds matrix order " + std::to_string(n));
  }
  if (n > limits.minor_sum_cap || n > 62) {
    throw Error(ErrorCode::SizeCapExceeded, std::string(what) + ": order " + std::to_string(n) +
                                                " exceeds the subset-sum cap " +
                                                std::to_string(limits.minor_sum_cap));
  }
  const IntegerImage img = integer_image(a);
  const std::vector<std::uint64_t> subsets = k_subsets(n, k);
  std::vector<mpq_class> partial(detail::chunk_count(subsets.size(), limits.threads));
  detail::for_each_chunk(subsets.size(), limits.threads,
                         [&](std::size_t chunk, std::size_t begin, std::size_t end) {
                           mpq_class acc = 0;
                           for (std::size_t s = begin; s < end; ++s) {
                             const auto idx = mask_indices(subsets[s]);
                             mpz_class value = kernel(principal_block(img, idx), idx.size());
                             if (value == 0) continue;
                             mpq_class term(value, scale_product(img, idx));
                             term.canonicalize();
                             acc += term;
                           }
                           partial[chunk] = acc;
                         });
  mpq_class total = 0;
  for (const auto& p : partial) total += p;
  return Scalar(total);
}

}  // namespace

Scalar trace(const Matrix& a) {
  require_square(a, "trace");
  Scalar t(0);
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

Scalar determinant(const Matrix& a) {
  require_square(a, "determinant");
  const IntegerImage img = integer_image(a);
  mpz_class scale = 1;
  for (const auto& s : img.row_scale) scale *= s;
  return Scalar(mpq_class(bareiss_determinant(img.entries, img.n), scale));
}

Scalar permanent(const Matrix& a, std::size_t cap) {
  require_square(a, "permanent");
  require_permanent_cap(a.rows(), cap);
  const IntegerImage img = integer_image(a);
  mpz_class scale = 1;
  for (const auto& s : img.row_scale) scale *= s;
  return Scalar(mpq_class(ryser_permanent(img.entries, img.n), scale));
}

std::size_t rank(const Matrix& a) {
  Matrix m = a;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r) {
      for (std::size_t j = col; j < m.cols(); ++j) std::swap(m(pivot, j), m(r, j));
    }
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, col).is_zero()) continue;
      const Scalar factor = m(i, col) / m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
    }
    ++r;
  }
  return r;
}

Scalar principal_minor(const Matrix& a, const IndexSet& s) {
  require_square(a, "principal_minor");
  s.require_within(a.rows());
  const auto idx = s.zero_based();
  return determinant(a.submatrix(idx, idx));
}

Scalar principal_permanent(const Matrix& a, const IndexSet& s, std::size_t cap) {
  require_square(a, "principal_permanent");
  s.require_within(a.rows());
  const auto idx = s.zero_based();
  return permanent(a.submatrix(idx, idx), cap);
}

Scalar sum_principal_minors(const Matrix& a, std::size_t k, const Limits& limits) {
  return principal_sum(a, k, limits, "sum_principal_minors",
                       [](std::vector<mpz_class> block, std::size_t m) {
                         return bareiss_determinant(std::move(block), m);
                       });
}

Scalar sum_principal_permanents(const Matrix& a, std::size_t k, const Limits& limits) {
  require_permanent_cap(k, limits.permanent_cap);
  return principal_sum(a, k, limits, "sum_principal_permanents",
                       [](const std::vector<mpz_class>& block, std::size_t m) {
                         return ryser_permanent(block, m);
                       });
}

Polynomial char_poly(const Matrix& a) {
  require_square(a, "char_poly");
  const std::size_t n = a.rows();
  // det(lambda I - A) = sum_k c_k lambda^k with
  //   M_0 = 0, c_n = 1, M_k = A M_(k-1) + c_(n-k+1) I, c_(n-k) = -tr(A M_k) / k.
  std::vector<Scalar> c(n + 1);
  c[n] = Scalar(1);
  Matrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = matrix_product(a, m);
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    const Scalar t = trace(matrix_product(a, m));
    c[n - k] = -t / Scalar(static_cast<long>(k));
  }
  // |A - lambda I| = (-1)^n det(lambda I - A)
  if (n % 2 == 1) {
    for (auto& x : c) x = -x;
  }
  return Polynomial(std::move(c));
}

Polynomial perm_poly(const Matrix& a, const Limits& limits) {
  require_square(a, "perm_poly");
  const std::size_t n = a.rows();
  if (n > limits.perm_poly_cap) {
    throw Error(ErrorCode::SizeCapExceeded, "perm_poly of order " + std::to_string(n) +
                                                " exceeds the cap " +
                                                std::to_string(limits.perm_poly_cap));
  }
  Limits inner = limits;
  inner.minor_sum_cap = std::max(inner.minor_sum_cap, n);
  inner.permanent_cap = std::max(inner.permanent_cap, n);
  std::vector<Scalar> coeffs(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    coeffs[n - k] = sign_power(n - k) * sum_principal_permanents(a, k, inner);
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace sigconj
