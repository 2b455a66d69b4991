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

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <string>
#include <string_view>
#include <type_traits>

namespace sigconj {

/// Exact rational number. Always kept in lowest terms with a positive
/// denominator, so structural equality is numeric equality.
class Scalar {
 public:
  Scalar() = default;

  template <std::integral T>
  Scalar(T value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      value_ = static_cast<long>(value);
    } else {
      value_ = static_cast<unsigned long>(value);
    }
  }

  Scalar(long numerator, long denominator);

  explicit Scalar(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }
  explicit Scalar(const mpz_class& integer) : value_(integer) {}

  /// Accepts "p", "-p", "+p" and "p/q" with q != 0.
  static Scalar parse(std::string_view text);

  const mpq_class& value() const noexcept { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const noexcept { return sgn(value_) == 0; }
  bool is_integer() const noexcept { return value_.get_den() == 1; }
  int sign() const noexcept { return sgn(value_); }

  /// "p/q", or the bare integer when q == 1.
  std::string to_string() const;

  Scalar& operator+=(const Scalar& rhs) { value_ += rhs.value_; return *this; }
  Scalar& operator-=(const Scalar& rhs) { value_ -= rhs.value_; return *this; }
  Scalar& operator*=(const Scalar& rhs) { value_ *= rhs.value_; return *this; }
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  friend Scalar operator-(const Scalar& x) { return Scalar(mpq_class(-x.value_)); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

/// (-1)^k as a Scalar.
inline Scalar sign_power(std::size_t k) { return (k % 2 == 0) ? Scalar(1) : Scalar(-1); }

}  // namespace sigconj
