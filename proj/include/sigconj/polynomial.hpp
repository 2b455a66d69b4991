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

#include "sigconj/scalar.hpp"

namespace sigconj {

/// Polynomial in lambda with exact rational coefficients, lowest power first.
/// Trailing zeros are trimmed; the zero polynomial is stored as {0}.
class Polynomial {
 public:
  Polynomial() : coefficients_{Scalar(0)} {}
  explicit Polynomial(std::vector<Scalar> coefficients);

  static Polynomial constant(const Scalar& value) { return Polynomial({value}); }

  const std::vector<Scalar>& coefficients() const noexcept { return coefficients_; }
  std::size_t degree() const noexcept { return coefficients_.size() - 1; }
  bool is_zero() const { return coefficients_.size() == 1 && coefficients_[0].is_zero(); }

  /// [lambda^k]; zero past the degree.
  Scalar coefficient(std::size_t k) const;

  Scalar evaluate(const Scalar& lambda) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Human-readable form, highest power first, e.g. "l^2 - 5*l - 2".
  std::string to_string() const;

 private:
  std::vector<Scalar> coefficients_;
};

}  // namespace sigconj
