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

#include "sigconj/permutation.hpp"

#include "sigconj/error.hpp"

namespace sigconj {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t image : images_) {
    if (image >= images_.size() || seen[image]) {
      throw Error(ErrorCode::InvalidArgument, "images do not form a permutation");
    }
    seen[image] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  for (std::size_t k = 0; k < n; ++k) images[k] = k;
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_based(const std::vector<std::size_t>& images) {
  std::vector<std::size_t> zero_based;
  zero_based.reserve(images.size());
  for (std::size_t image : images) {
    if (image == 0) throw Error(ErrorCode::InvalidArgument, "permutation images are 1-based");
    zero_based.push_back(image - 1);
  }
  return Permutation(std::move(zero_based));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) inv[images_[k]] = k;
  return Permutation(std::move(inv));
}

Matrix Permutation::to_matrix() const {
  Matrix p(images_.size(), images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) p(images_[k], k) = Scalar(1);
  return p;
}

std::string Permutation::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(images_[k] + 1);
  }
  return s + ")";
}

}  // namespace sigconj
