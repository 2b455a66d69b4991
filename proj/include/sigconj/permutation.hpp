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
#include <string>
#include <vector>

#include "sigconj/matrix.hpp"

namespace sigconj {

/// Bijection on {0..n-1}; printed 1-based.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t n);
  static Permutation from_one_based(const std::vector<std::size_t>& images);

  std::size_t size() const noexcept { return images_.size(); }
  std::size_t operator[](std::size_t k) const { return images_[k]; }
  const std::vector<std::size_t>& images() const noexcept { return images_; }

  Permutation inverse() const;

  /// 0/1 matrix P whose k-th column is e_{sigma(k)}, so that
  /// (P^T A P)(k, l) = A(sigma(k), sigma(l)).
  Matrix to_matrix() const;

  /// "(1,3,2)"
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

}  // namespace sigconj
