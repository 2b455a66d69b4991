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

#include <json.hpp>

#include "sigconj/matrix.hpp"
#include "sigconj/polynomial.hpp"
#include "sigconj/scalar.hpp"
#include "sigconj/sign_vector.hpp"

namespace sigconj::detail {

using Json = nlohmann::ordered_json;

/// {"n": rows, ["m": cols,] "entries": [[...]]}, entries as "p/q" strings.
Json matrix_document(const Matrix& a);

inline Json to_json(const Scalar& x) { return x.to_string(); }
inline Json to_json(const Matrix& a) { return matrix_document(a); }
inline Json to_json(const SignVector& c) { return c.to_string(); }

/// Coefficients ascending by power.
inline Json to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.to_string());
  return out;
}

}  // namespace sigconj::detail
