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
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "sigconj/invariants.hpp"
#include "sigconj/matrix.hpp"
#include "sigconj/sign_vector.hpp"

namespace sigconj {

/// labels[i] is the component id (1..t) of vertex i+1. Ids are assigned in
/// order of each component's smallest vertex.
struct ComponentLabeling {
  std::vector<std::size_t> labels;
  std::size_t t = 0;
};

/// Components of the simple graph with an edge {i,j}, i != j, whenever
/// a_ij != 0 or a_ji != 0. The diagonal never contributes.
ComponentLabeling graph_components(const Matrix& a);

struct OrbitReport {
  std::size_t n = 0;
  std::size_t t = 0;
  mpz_class orbit_size;       // 2^(n-t)
  mpz_class stabilizer_size;  // 2^(t-1)
  /// Distinct phi_c(A) in order of first appearance over ascending sign
  /// index; only filled when n <= orbit_cap.
  std::optional<std::vector<Matrix>> enumerated;

  bool enumeration_matches() const {
    return !enumerated || mpz_class(enumerated->size()) == orbit_size;
  }
};

OrbitReport orbit_size(const Matrix& a, const Limits& limits = {});

/// Distinct phi_c(A) over every admissible c. SizeCapExceeded above orbit_cap.
std::vector<Matrix> enumerate_orbit(const Matrix& a, const Limits& limits = {});

/// Every c with phi_c(A) = A, built from the components: the component of
/// vertex 1 is pinned to +1 and each other component picks a sign freely.
/// Sorted by sign index.
std::vector<SignVector> stabilizer_elements(const Matrix& a, const Limits& limits = {});

/// Same set by testing all 2^(n-1) vectors. Sorted by sign index.
std::vector<SignVector> brute_force_stabilizer(const Matrix& a, const Limits& limits = {});

}  // namespace sigconj
