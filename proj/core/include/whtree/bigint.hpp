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
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace wht {

// Arbitrary-precision signed integer, sign + magnitude with 32-bit limbs
// (little-endian, no trailing zero limbs; zero has an empty limb vector).
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);
  BigInt(unsigned long long v);
  template <std::signed_integral T>
    requires(!std::same_as<T, long long>)
  BigInt(T v) : BigInt(static_cast<long long>(v)) {}
  template <std::unsigned_integral T>
    requires(!std::same_as<T, unsigned long long>)
  BigInt(T v) : BigInt(static_cast<unsigned long long>(v)) {}

  // Parses an optional leading '-' followed by decimal digits.
  static BigInt from_decimal(std::string_view s);
  std::string to_decimal() const;

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }
  bool is_one() const { return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1; }
  bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }

  // Number of limbs of the magnitude; 0 for zero.
  std::size_t limb_count() const { return limbs_.size(); }
  bool magnitude_fits_u64() const { return limbs_.size() <= 2; }
  std::uint64_t magnitude_u64() const {
    std::uint64_t lo = limbs_.empty() ? 0 : limbs_[0];
    std::uint64_t hi = limbs_.size() > 1 ? limbs_[1] : 0;
    return (hi << 32) | lo;
  }

  BigInt operator-() const;
  BigInt abs() const;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  // Truncated division: quotient rounds toward zero, remainder has the
  // dividend's sign. Throws on division by zero.
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);
  static void divmod(const BigInt& a, const BigInt& b, BigInt& quot, BigInt& rem);

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }
  BigInt& operator/=(const BigInt& o) { return *this = *this / o; }

  // Non-negative gcd of magnitudes; gcd(0, 0) = 0.
  static BigInt gcd(const BigInt& a, const BigInt& b);

  std::strong_ordering operator<=>(const BigInt& o) const;
  bool operator==(const BigInt& o) const = default;

  friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

 private:
  static int compare_magnitudes(const std::vector<std::uint32_t>& a,
                                const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> add_magnitudes(const std::vector<std::uint32_t>& a,
                                                   const std::vector<std::uint32_t>& b);
  // Requires |a| >= |b|.
  static std::vector<std::uint32_t> sub_magnitudes(const std::vector<std::uint32_t>& a,
                                                   const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> mul_magnitudes(const std::vector<std::uint32_t>& a,
                                                   const std::vector<std::uint32_t>& b);
  static void divmod_magnitudes(const std::vector<std::uint32_t>& a,
                                const std::vector<std::uint32_t>& b,
                                std::vector<std::uint32_t>& quot,
                                std::vector<std::uint32_t>& rem);
  static BigInt from_magnitude(int sign, std::vector<std::uint32_t> limbs);
  void trim();

  int sign_ = 0;
  std::vector<std::uint32_t> limbs_;
};

BigInt factorial(unsigned n);
// Binomial coefficient C(n, k) computed by exact multiply/divide steps.
BigInt binomial(unsigned n, unsigned k);

}  // namespace wht
