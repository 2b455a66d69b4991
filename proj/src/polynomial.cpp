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

#include "sigconj/polynomial.hpp"

#include <algorithm>

namespace sigconj {

Polynomial::Polynomial(std::vector<Scalar> coefficients) : coefficients_(std::move(coefficients)) {
  while (coefficients_.size() > 1 && coefficients_.back().is_zero()) coefficients_.pop_back();
  if (coefficients_.empty()) coefficients_.emplace_back(0);
}

Scalar Polynomial::coefficient(std::size_t k) const {
  return k < coefficients_.size() ? coefficients_[k] : Scalar(0);
}

Scalar Polynomial::evaluate(const Scalar& lambda) const {
  Scalar acc(0);
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc *= lambda;
    acc += *it;
  }
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Scalar> out(std::max(a.coefficients_.size(), b.coefficients_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coefficient(k) + b.coefficient(k);
  return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::vector<Scalar> out(a.coefficients_.size() + b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    if (a.coefficients_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
      out[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t k = coefficients_.size(); k-- > 0;) {
    const Scalar& c = coefficients_[k];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Scalar magnitude = negative ? -c : c;
    if (s.empty()) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    const bool unit = magnitude == Scalar(1);
    if (k == 0 || !unit) s += magnitude.to_string();
    if (k > 0) {
      if (!unit) s += "*";
      s += "l";
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

}  // namespace sigconj
