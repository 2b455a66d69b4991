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

#include "sigconj/group.hpp"

#include <set>

#include "sigconj/core.hpp"
#include "sigconj/error.hpp"
#include "sigconj/io.hpp"

namespace sigconj {

GroupElement compose(const GroupElement& c, const GroupElement& d) {
  if (c.degree() != d.degree()) {
    throw Error(ErrorCode::DimensionMismatch, "cannot compose maps of degree " +
                                                  std::to_string(c.degree()) + " and " +
                                                  std::to_string(d.degree()));
  }
  std::vector<std::int8_t> e(c.degree());
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = static_cast<std::int8_t>(c.signs()[i] * d.signs()[i]);
  }
  return GroupElement(SignVector(std::move(e)));
}

GroupElement identity_element(std::size_t n) { return GroupElement(SignVector::ones(n)); }

std::string to_bits(const GroupElement& g) {
  std::string bits;
  bits.reserve(g.degree() - 1);
  for (std::size_t k = 1; k < g.degree(); ++k) bits += g.signs()[k] < 0 ? '1' : '0';
  return bits;
}

GroupElement from_bits(std::string_view bits) {
  std::vector<std::int8_t> signs{1};
  for (char ch : bits) {
    if (ch != '0' && ch != '1') {
      throw Error(ErrorCode::MalformedSign, "bitstring may only contain 0 and 1");
    }
    signs.push_back(ch == '1' ? -1 : 1);
  }
  return GroupElement(SignVector(std::move(signs)));
}

std::vector<GroupElement> group_elements(std::size_t n) {
  if (n > 24) {
    throw Error(ErrorCode::SizeCapExceeded, "listing Psi_n is limited to n <= 24");
  }
  const std::uint64_t count = SignVector::admissible_count(n);
  std::vector<GroupElement> out;
  out.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) out.emplace_back(SignVector::from_index(n, idx));
  return out;
}

std::size_t count_distinct_maps(std::size_t n) {
  if (n > 20) throw Error(ErrorCode::SizeCapExceeded, "map count witness is limited to n <= 20");
  Matrix ones(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ones(i, j) = Scalar(1);
  std::set<std::string> images;
  for (const auto& g : group_elements(n)) images.insert(render_csv(apply_phi(ones, g.signs())));
  return images.size();
}

CayleyTable cayley_table(std::vector<GroupElement> order, std::vector<std::string> labels) {
  if (order.empty()) throw Error(ErrorCode::Empty, "Cayley table needs at least one element");
  const std::size_t n = order.front().degree();
  if (n > kCayleyTableCap) {
    throw Error(ErrorCode::SizeCapExceeded, "Cayley table of Psi_" + std::to_string(n) +
                                                " exceeds the cap n <= " +
                                                std::to_string(kCayleyTableCap));
  }
  if (order.size() != SignVector::admissible_count(n) ||
      std::set<GroupElement>(order.begin(), order.end()).size() != order.size()) {
    throw Error(ErrorCode::InvalidArgument, "ordering must list every element of Psi_n once");
  }
  if (labels.size() != order.size()) {
    throw Error(ErrorCode::InvalidArgument, "one label per element is required");
  }
  std::vector<std::size_t> position(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (order[k].degree() != n) throw Error(ErrorCode::DimensionMismatch, "mixed degrees in ordering");
    position[order[k].signs().index()] = k;
  }
  CayleyTable table{std::move(order), std::move(labels), {}};
  table.cells.assign(table.order.size(), std::vector<std::size_t>(table.order.size()));
  for (std::size_t i = 0; i < table.order.size(); ++i)
    for (std::size_t j = 0; j < table.order.size(); ++j)
      table.cells[i][j] = position[compose(table.order[i], table.order[j]).signs().index()];
  return table;
}

std::vector<GroupElement> klein_four_listing() {
  return {GroupElement(SignVector{1, 1, -1}), GroupElement(SignVector{1, -1, 1}),
          GroupElement(SignVector{1, -1, -1}), GroupElement(SignVector{1, 1, 1})};
}

CayleyTable cayley_table(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::Empty, "Psi_n needs n >= 1");
  if (n > kCayleyTableCap) {
    throw Error(ErrorCode::SizeCapExceeded, "Cayley table of Psi_" + std::to_string(n) +
                                                " exceeds the cap n <= " +
                                                std::to_string(kCayleyTableCap));
  }
  if (n == 3) return cayley_table(klein_four_listing(), {"c1", "c2", "c3", "id"});
  auto elements = group_elements(n);
  std::vector<std::string> labels;
  for (const auto& g : elements) {
    labels.push_back(g == identity_element(n) ? std::string("id") : to_bits(g));
  }
  return cayley_table(std::move(elements), std::move(labels));
}

}  // namespace sigconj
