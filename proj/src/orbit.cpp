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

#include "sigconj/orbit.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "parallel.hpp"
#include "sigconj/core.hpp"
#include "sigconj/io.hpp"

namespace sigconj {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    std::size_t root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) x = std::exchange(parent_[x], root);
    return root;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

void require_enumerable(const Matrix& a, const Limits& limits, std::string_view what) {
  require_square(a, what);
  if (a.rows() == 0) throw Error(ErrorCode::Empty, std::string(what) + " needs n >= 1");
  if (a.rows() > limits.orbit_cap || a.rows() > 62) {
    throw Error(ErrorCode::SizeCapExceeded, std::string(what) + ": order " +
                                                std::to_string(a.rows()) +
                                                " exceeds the enumeration cap " +
                                                std::to_string(limits.orbit_cap));
  }
}

mpz_class power_of_two(std::size_t e) {
  mpz_class p = 1;
  return p << static_cast<mp_bitcnt_t>(e);
}

}  // namespace

ComponentLabeling graph_components(const Matrix& a) {
  require_square(a, "graph_components");
  const std::size_t n = a.rows();
  DisjointSets sets(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!a(i, j).is_zero() || !a(j, i).is_zero()) sets.unite(i, j);

  ComponentLabeling out;
  out.labels.assign(n, 0);
  std::vector<std::size_t> root_label(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = sets.find(i);
    if (root_label[root] == 0) root_label[root] = ++out.t;
    out.labels[i] = root_label[root];
  }
  return out;
}

std::vector<Matrix> enumerate_orbit(const Matrix& a, const Limits& limits) {
  require_enumerable(a, limits, "enumerate_orbit");
  const std::size_t n = a.rows();
  const std::uint64_t count = SignVector::admissible_count(n);
  std::vector<Matrix> images(count);
  std::vector<std::string> keys(count);
  detail::for_each_chunk(count, limits.threads, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      images[idx] = apply_phi(a, SignVector::from_index(n, idx));
      keys[idx] = render_csv(images[idx]);
    }
  });
  std::set<std::string> seen;
  std::vector<Matrix> distinct;
  for (std::size_t idx = 0; idx < count; ++idx) {
    if (seen.insert(keys[idx]).second) distinct.push_back(std::move(images[idx]));
  }
  return distinct;
}

OrbitReport orbit_size(const Matrix& a, const Limits& limits) {
  require_square(a, "orbit_size");
  if (a.rows() == 0) throw Error(ErrorCode::Empty, "orbit_size needs n >= 1");
  OrbitReport report;
  report.n = a.rows();
  report.t = graph_components(a).t;
  report.orbit_size = power_of_two(report.n - report.t);
  report.stabilizer_size = power_of_two(report.t - 1);
  if (report.n <= limits.orbit_cap && report.n <= 62) report.enumerated = enumerate_orbit(a, limits);
  return report;
}

std::vector<SignVector> stabilizer_elements(const Matrix& a, const Limits& limits) {
  require_enumerable(a, limits, "stabilizer_elements");
  const std::size_t n = a.rows();
  const ComponentLabeling comp = graph_components(a);
  // Component 1 holds vertex 1 and is pinned to +1; components 2..t are free.
  std::vector<SignVector> out;
  const std::uint64_t choices = std::uint64_t{1} << (comp.t - 1);
  out.reserve(choices);
  for (std::uint64_t pick = 0; pick < choices; ++pick) {
    std::vector<std::int8_t> signs(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t label = comp.labels[i];
      signs[i] = (label > 1 && ((pick >> (label - 2)) & 1U)) ? std::int8_t{-1} : std::int8_t{1};
    }
    out.emplace_back(std::move(signs));
  }
  std::sort(out.begin(), out.end(),
            [](const SignVector& x, const SignVector& y) { return x.index() < y.index(); });
  return out;
}

std::vector<SignVector> brute_force_stabilizer(const Matrix& a, const Limits& limits) {
  require_enumerable(a, limits, "brute_force_stabilizer");
  const std::size_t n = a.rows();
  std::vector<SignVector> out;
  for (std::uint64_t idx = 0; idx < SignVector::admissible_count(n); ++idx) {
    SignVector c = SignVector::from_index(n, idx);
    if (apply_phi(a, c) == a) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace sigconj
