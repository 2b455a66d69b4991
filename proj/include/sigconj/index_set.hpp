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
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace sigconj {

/// Strictly increasing 1-based indices i_1 < ... < i_k. The empty set is
/// allowed; its principal minor and permanent are both 1.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::vector<std::size_t> one_based);
  IndexSet(std::initializer_list<std::size_t> one_based)
      : IndexSet(std::vector<std::size_t>(one_based)) {}

  /// Indices of the set bits of `mask` (bit 0 -> index 1).
  static IndexSet from_mask(std::uint64_t mask, std::size_t n);

  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  std::vector<std::size_t> zero_based() const;

  /// Throws IndexOutOfRange unless every index is <= n.
  void require_within(std::size_t n) const;

  /// "{1,3}"
  std::string to_string() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<std::size_t> indices_;
};

}  // namespace sigconj
