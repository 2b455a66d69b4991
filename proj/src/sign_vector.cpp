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

#include "sigconj/sign_vector.hpp"

#include <algorithm>
#include <cctype>

#include "sigconj/error.hpp"

namespace sigconj {

SignVector::SignVector(std::vector<std::int8_t> signs) : signs_(std::move(signs)) {
  if (signs_.empty()) throw Error(ErrorCode::Empty, "sign vector is empty");
  for (std::size_t i = 0; i < signs_.size(); ++i) {
    if (signs_[i] != 1 && signs_[i] != -1) {
      throw Error(ErrorCode::MalformedSign,
                  "sign " + std::to_string(i + 1) + " is " + std::to_string(signs_[i]) +
                      ", expected +1 or -1");
    }
  }
  if (signs_.front() != 1) {
    throw Error(ErrorCode::FirstCoordinateNotOne, "first sign must be +1 (c_1 = 1)");
  }
}

SignVector::SignVector(std::initializer_list<int> signs)
    : SignVector(std::vector<std::int8_t>(signs.begin(), signs.end())) {}

SignVector SignVector::ones(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::Empty, "sign vector length must be at least 1");
  return SignVector(std::vector<std::int8_t>(n, 1));
}

std::uint64_t SignVector::admissible_count(std::size_t n) {
  if (n == 0 || n > 64) {
    throw Error(ErrorCode::SizeCapExceeded, "admissible sign vectors are indexed for 1 <= n <= 64");
  }
  return std::uint64_t{1} << (n - 1);
}

SignVector SignVector::from_index(std::size_t n, std::uint64_t index) {
  if (index >= admissible_count(n)) {
    throw Error(ErrorCode::RangeError, "sign index " + std::to_string(index) + " out of range");
  }
  std::vector<std::int8_t> signs(n, 1);
  for (std::size_t k = 1; k < n; ++k) {
    if ((index >> (n - 1 - k)) & 1U) signs[k] = -1;
  }
  return SignVector(std::move(signs));
}

std::uint64_t SignVector::index() const {
  if (signs_.size() > 64) throw Error(ErrorCode::SizeCapExceeded, "sign index needs n <= 64");
  std::uint64_t idx = 0;
  for (std::size_t k = 1; k < signs_.size(); ++k) idx = (idx << 1) | (signs_[k] < 0 ? 1U : 0U);
  return idx;
}

std::size_t SignVector::count_plus() const noexcept {
  return static_cast<std::size_t>(std::count(signs_.begin(), signs_.end(), std::int8_t{1}));
}

std::string SignVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < signs_.size(); ++i) {
    if (i) s += ',';
    s += signs_[i] > 0 ? "1" : "-1";
  }
  return s + ")";
}

SignVector parse_sign_vector(std::string_view text) {
  std::vector<std::int8_t> signs;
  std::size_t pos = 0;
  auto is_sep = [](char ch) { return ch == ',' || std::isspace(static_cast<unsigned char>(ch)); };
  while (pos < text.size()) {
    while (pos < text.size() && is_sep(text[pos])) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !is_sep(text[end])) ++end;
    const std::string_view token = text.substr(pos, end - pos);
    if (token == "+" || token == "1" || token == "+1") {
      signs.push_back(1);
    } else if (token == "-" || token == "-1") {
      signs.push_back(-1);
    } else {
      throw Error(ErrorCode::MalformedSign, "unknown sign token '" + std::string(token) +
                                                "' at position " + std::to_string(signs.size() + 1));
    }
    pos = end;
  }
  if (signs.empty()) throw Error(ErrorCode::Empty, "sign vector is empty");
  return SignVector(std::move(signs));
}

}  // namespace sigconj
