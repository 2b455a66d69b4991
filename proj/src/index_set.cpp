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

#include "sigconj/index_set.hpp"

#include "sigconj/error.hpp"

namespace sigconj {

IndexSet::IndexSet(std::vector<std::size_t> one_based) : indices_(std::move(one_based)) {
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (indices_[k] == 0) throw Error(ErrorCode::IndexOutOfRange, "indices are 1-based");
    if (k > 0 && indices_[k] <= indices_[k - 1]) {
      throw Error(ErrorCode::InvalidArgument, "index set must be strictly increasing");
    }
  }
}

IndexSet IndexSet::from_mask(std::uint64_t mask, std::size_t n) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < n && i < 64; ++i) {
    if ((mask >> i) & 1U) idx.push_back(i + 1);
  }
  return IndexSet(std::move(idx));
}

std::vector<std::size_t> IndexSet::zero_based() const {
  std::vector<std::size_t> out(indices_.size());
  for (std::size_t k = 0; k < indices_.size(); ++k) out[k] = indices_[k] - 1;
  return out;
}

void IndexSet::require_within(std::size_t n) const {
  if (!indices_.empty() && indices_.back() > n) {
    throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(indices_.back()) +
                                                " exceeds matrix order " + std::to_string(n));
  }
}

std::string IndexSet::to_string() const {
  std::string s = "{";
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(indices_[k]);
  }
  return s + "}";
}

}  // namespace sigconj
