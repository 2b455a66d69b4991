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
#include <string>
#include <string_view>
#include <vector>

#include "sigconj/sign_vector.hpp"

namespace sigconj {

/// An element phi_c of the group Psi_n, represented by its sign vector.
/// Distinct admissible vectors give distinct maps, so vector equality is map
/// equality.
class GroupElement {
 public:
  explicit GroupElement(SignVector signs) : signs_(std::move(signs)) {}

  const SignVector& signs() const noexcept { return signs_; }
  std::size_t degree() const noexcept { return signs_.size(); }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

 private:
  SignVector signs_;
};

/// phi_c o phi_d = phi_e with e_i = c_i * d_i.
GroupElement compose(const GroupElement& c, const GroupElement& d);

GroupElement identity_element(std::size_t n);

/// Coordinates in Z_2^(n-1): character k is '1' iff c_(k+2) = -1.
std::string to_bits(const GroupElement& g);
GroupElement from_bits(std::string_view bits);

/// All 2^(n-1) elements, ordered lexicographically by bitstring.
std::vector<GroupElement> group_elements(std::size_t n);

/// Number of distinct matrices phi_c(J) over all admissible c, where J is the
/// all-ones matrix. The first row of phi_c(J) is c itself, so this counts the
/// maps themselves. Requires n <= 20.
std::size_t count_distinct_maps(std::size_t n);

struct CayleyTable {
  std::vector<GroupElement> order;
  std::vector<std::string> labels;
  /// cells[i][j] indexes `order`: order[cells[i][j]] = order[i] o order[j].
  std::vector<std::vector<std::size_t>> cells;

  const GroupElement& at(std::size_t i, std::size_t j) const { return order[cells[i][j]]; }
};

inline constexpr std::size_t kCayleyTableCap = 6;

/// Cayley table of Psi_n for n <= 6. Rows and columns are lexicographic by
/// bitstring, except n = 3 which uses the classical listing
/// c1 = (1,1,-1), c2 = (1,-1,1), c3 = (1,-1,-1), id = (1,1,1).
CayleyTable cayley_table(std::size_t n);

/// Cayley table for a caller-chosen ordering of all elements of Psi_n.
CayleyTable cayley_table(std::vector<GroupElement> order, std::vector<std::string> labels);

/// The n = 3 listing c1, c2, c3, id.
std::vector<GroupElement> klein_four_listing();

}  // namespace sigconj
