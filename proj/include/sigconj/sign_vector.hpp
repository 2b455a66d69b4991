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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sigconj {

/// A vector c in {-1,+1}^n with c_1 = +1. Construction rejects anything else,
/// so every SignVector names exactly one admissible map.
class SignVector {
 public:
  explicit SignVector(std::vector<std::int8_t> signs);
  SignVector(std::initializer_list<int> signs);

  static SignVector ones(std::size_t n);

  /// The admissible vector whose coordinates 2..n, read as bits (-1 -> 1,
  /// coordinate 2 most significant), spell `index`. Index order therefore
  /// matches lexicographic order of the bitstrings. Requires n <= 64.
  static SignVector from_index(std::size_t n, std::uint64_t index);

  /// Number of admissible vectors of length n, 2^(n-1). Requires n <= 64.
  static std::uint64_t admissible_count(std::size_t n);

  std::size_t size() const noexcept { return signs_.size(); }
  int operator[](std::size_t i) const { return signs_[i]; }
  std::span<const std::int8_t> signs() const noexcept { return signs_; }

  std::uint64_t index() const;
  std::size_t count_plus() const noexcept;

  /// "(1,1,-1)"
  std::string to_string() const;

  friend bool operator==(const SignVector&, const SignVector&) = default;
  friend auto operator<=>(const SignVector&, const SignVector&) = default;

 private:
  std::vector<std::int8_t> signs_;
};

/// Tokens separated by commas and/or whitespace, each one of +, -, 1, -1, +1.
/// Errors: Empty, MalformedSign, FirstCoordinateNotOne.
SignVector parse_sign_vector(std::string_view text);

}  // namespace sigconj
