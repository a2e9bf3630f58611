// Copyright 2026 The whtree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "whtree/bigint.hpp"

namespace wht {

// Exact rational number, always in lowest terms with a positive denominator.
//
// Equality-sensitive logic throughout the library (tie-breaking, majorization
// strictness) relies on these comparisons being exact; there is deliberately
// no floating-point constructor.
class Rational {
 public:
  Rational() : num_(), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}
  Rational(int v) : num_(static_cast<long long>(v)), den_(1) {}
  Rational(BigInt num, BigInt den);
  explicit Rational(BigInt num) : num_(std::move(num)), den_(1) {}

  // Accepts "p", "-p", "p/q" (q > 0) and decimal strings like "3.25".
  static Rational parse(std::string_view s);
  // Canonical rendering: "p" for integers, "p/q" otherwise, lowest terms.
  std::string to_string() const;

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  int sign() const { return num_.sign(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_.is_one(); }

  Rational operator-() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);  // throws on b == 0

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  std::strong_ordering operator<=>(const Rational& o) const;
  bool operator==(const Rational& o) const = default;

  friend std::ostream& operator<<(std::ostream& os, const Rational& v);

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

// Weights and index values are exact rationals end to end.
using Weight = Rational;
using IndexValue = Rational;

}  // namespace wht
