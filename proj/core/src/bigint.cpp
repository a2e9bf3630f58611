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

#include "whtree/bigint.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "whtree/error.hpp"

namespace wht {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
constexpr std::uint32_t kDecChunkDigits = 9;
constexpr std::uint32_t kDecChunk = 1000000000u;  // 10^9 < 2^32
}  // namespace

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  // Avoid UB on LLONG_MIN by widening before negation.
  unsigned long long m = v < 0 ? -static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
  limbs_.push_back(static_cast<std::uint32_t>(m));
  if (m >> 32) limbs_.push_back(static_cast<std::uint32_t>(m >> 32));
}

BigInt::BigInt(unsigned long long v) {
  if (v == 0) return;
  sign_ = 1;
  limbs_.push_back(static_cast<std::uint32_t>(v));
  if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) sign_ = 0;
}

BigInt BigInt::from_magnitude(int sign, std::vector<std::uint32_t> limbs) {
  BigInt r;
  r.sign_ = sign;
  r.limbs_ = std::move(limbs);
  r.trim();
  return r;
}

int BigInt::compare_magnitudes(const std::vector<std::uint32_t>& a,
                               const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<std::uint32_t> BigInt::add_magnitudes(const std::vector<std::uint32_t>& a,
                                                  const std::vector<std::uint32_t>& b) {
  const auto& big = a.size() >= b.size() ? a : b;
  const auto& small = a.size() >= b.size() ? b : a;
  std::vector<std::uint32_t> r;
  r.reserve(big.size() + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < big.size(); ++i) {
    std::uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0);
    r.push_back(static_cast<std::uint32_t>(s));
    carry = s >> 32;
  }
  if (carry) r.push_back(static_cast<std::uint32_t>(carry));
  return r;
}

std::vector<std::uint32_t> BigInt::sub_magnitudes(const std::vector<std::uint32_t>& a,
                                                  const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> r;
  r.reserve(a.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
    if (d < 0) {
      d += static_cast<std::int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    r.push_back(static_cast<std::uint32_t>(d));
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<std::uint32_t> BigInt::mul_magnitudes(const std::vector<std::uint32_t>& a,
                                                  const std::vector<std::uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint32_t> r(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t carry = 0;
    std::uint64_t ai = a[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t cur = r[i + j] + carry + ai * b[j];
      r[i + j] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    std::size_t k = i + b.size();
    while (carry) {
      std::uint64_t cur = r[k] + carry;
      r[k] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
      ++k;
    }
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// Knuth algorithm D on 32-bit limbs.
void BigInt::divmod_magnitudes(const std::vector<std::uint32_t>& a,
                               const std::vector<std::uint32_t>& b,
                               std::vector<std::uint32_t>& quot,
                               std::vector<std::uint32_t>& rem) {
  quot.clear();
  rem.clear();
  if (b.empty()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  if (compare_magnitudes(a, b) < 0) {
    rem = a;
    return;
  }
  if (b.size() == 1) {
    std::uint64_t d = b[0];
    quot.assign(a.size(), 0);
    std::uint64_t r = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
      std::uint64_t cur = (r << 32) | a[i];
      quot[i] = static_cast<std::uint32_t>(cur / d);
      r = cur % d;
    }
    while (!quot.empty() && quot.back() == 0) quot.pop_back();
    if (r) rem.push_back(static_cast<std::uint32_t>(r));
    return;
  }

  const int shift = std::countl_zero(b.back());
  const std::size_t n = b.size();
  const std::size_t m = a.size() - n;

  // Normalized copies: v.back() has its top bit set.
  std::vector<std::uint32_t> v(n), u(a.size() + 1, 0);
  for (std::size_t i = n; i-- > 0;) {
    std::uint64_t hi = static_cast<std::uint64_t>(b[i]) << shift;
    std::uint64_t lo = (i > 0 && shift) ? (b[i - 1] >> (32 - shift)) : 0;
    v[i] = static_cast<std::uint32_t>(hi | lo);
  }
  for (std::size_t i = a.size(); i-- > 0;) {
    std::uint64_t hi = static_cast<std::uint64_t>(a[i]) << shift;
    std::uint64_t lo = (i > 0 && shift) ? (a[i - 1] >> (32 - shift)) : 0;
    std::uint64_t w = hi | lo;
    u[i] = static_cast<std::uint32_t>(w);
    if (shift) u[i + 1] |= static_cast<std::uint32_t>(hi >> 32);
  }

  quot.assign(m + 1, 0);
  for (std::size_t j = m + 1; j-- > 0;) {
    std::uint64_t top = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
    std::uint64_t qhat = top / v[n - 1];
    std::uint64_t rhat = top % v[n - 1];
    while (qhat >= kBase ||
           qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
      --qhat;
      rhat += v[n - 1];
      if (rhat >= kBase) break;
    }
    // u[j..j+n] -= qhat * v
    std::int64_t borrow = 0;
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t p = qhat * v[i] + carry;
      carry = p >> 32;
      std::int64_t d = static_cast<std::int64_t>(u[j + i]) - borrow -
                       static_cast<std::int64_t>(p & 0xffffffffull);
      if (d < 0) {
        d += static_cast<std::int64_t>(kBase);
        borrow = 1;
      } else {
        borrow = 0;
      }
      u[j + i] = static_cast<std::uint32_t>(d);
    }
    std::int64_t d = static_cast<std::int64_t>(u[j + n]) - borrow -
                     static_cast<std::int64_t>(carry);
    if (d < 0) {
      // qhat was one too large; add v back.
      d += static_cast<std::int64_t>(kBase);
      --qhat;
      std::uint64_t c = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t s = static_cast<std::uint64_t>(u[j + i]) + v[i] + c;
        u[j + i] = static_cast<std::uint32_t>(s);
        c = s >> 32;
      }
      d += static_cast<std::int64_t>(c);
      d &= static_cast<std::int64_t>(kBase) - 1;
    }
    u[j + n] = static_cast<std::uint32_t>(d);
    quot[j] = static_cast<std::uint32_t>(qhat);
  }
  while (!quot.empty() && quot.back() == 0) quot.pop_back();

  rem.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t lo = u[i] >> shift;
    std::uint64_t hi = (i + 1 < u.size() && shift) ? (static_cast<std::uint64_t>(u[i + 1]) << (32 - shift)) : 0;
    rem[i] = static_cast<std::uint32_t>(lo | hi);
  }
  while (!rem.empty() && rem.back() == 0) rem.pop_back();
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  if (r.sign_ < 0) r.sign_ = 1;
  return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  if (a.sign_ == b.sign_)
    return BigInt::from_magnitude(a.sign_, BigInt::add_magnitudes(a.limbs_, b.limbs_));
  int cmp = BigInt::compare_magnitudes(a.limbs_, b.limbs_);
  if (cmp == 0) return BigInt{};
  if (cmp > 0) return BigInt::from_magnitude(a.sign_, BigInt::sub_magnitudes(a.limbs_, b.limbs_));
  return BigInt::from_magnitude(b.sign_, BigInt::sub_magnitudes(b.limbs_, a.limbs_));
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0 || b.sign_ == 0) return BigInt{};
  return BigInt::from_magnitude(a.sign_ * b.sign_, BigInt::mul_magnitudes(a.limbs_, b.limbs_));
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& quot, BigInt& rem) {
  std::vector<std::uint32_t> q, r;
  divmod_magnitudes(a.limbs_, b.limbs_, q, r);
  quot = from_magnitude(a.sign_ * b.sign_, std::move(q));
  rem = from_magnitude(a.sign_, std::move(r));
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return r;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
  if (a.magnitude_fits_u64() && b.magnitude_fits_u64())
    return BigInt(static_cast<unsigned long long>(
        std::gcd(a.magnitude_u64(), b.magnitude_u64())));
  BigInt x = a.abs(), y = b.abs();
  while (!y.is_zero()) {
    BigInt q, r;
    divmod(x, y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

std::strong_ordering BigInt::operator<=>(const BigInt& o) const {
  if (sign_ != o.sign_) return sign_ <=> o.sign_;
  int cmp = compare_magnitudes(limbs_, o.limbs_);
  if (sign_ < 0) cmp = -cmp;
  return cmp <=> 0;
}

BigInt BigInt::from_decimal(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty integer literal");
  BigInt r;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t take = std::min<std::size_t>(kDecChunkDigits, s.size() - i);
    std::uint32_t chunk = 0;
    std::uint32_t pow10 = 1;
    for (std::size_t k = 0; k < take; ++k) {
      char c = s[i + k];
      if (c < '0' || c > '9')
        throw Error(ErrorCode::ParseError, std::string("invalid digit '") + c + "' in integer literal");
      chunk = chunk * 10 + static_cast<std::uint32_t>(c - '0');
      pow10 *= 10;  // overflows only past 9 digits, which take prevents
    }
    r = r * BigInt(static_cast<unsigned long long>(pow10)) + BigInt(static_cast<unsigned long long>(chunk));
    i += take;
  }
  if (negative && !r.is_zero()) r.sign_ = -1;
  return r;
}

std::string BigInt::to_decimal() const {
  if (is_zero()) return "0";
  std::vector<std::uint32_t> chunks;
  std::vector<std::uint32_t> cur = limbs_;
  while (!cur.empty()) {
    std::uint64_t r = 0;
    for (std::size_t i = cur.size(); i-- > 0;) {
      std::uint64_t x = (r << 32) | cur[i];
      cur[i] = static_cast<std::uint32_t>(x / kDecChunk);
      r = x % kDecChunk;
    }
    while (!cur.empty() && cur.back() == 0) cur.pop_back();
    chunks.push_back(static_cast<std::uint32_t>(r));
  }
  std::string out;
  if (sign_ < 0) out.push_back('-');
  out += std::to_string(chunks.back());
  for (std::size_t i = chunks.size() - 1; i-- > 0;) {
    std::string part = std::to_string(chunks[i]);
    out.append(kDecChunkDigits - part.size(), '0');
    out += part;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_decimal(); }

BigInt factorial(unsigned n) {
  BigInt r(1);
  for (unsigned i = 2; i <= n; ++i) r *= BigInt(static_cast<unsigned long long>(i));
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return BigInt{};
  if (k > n - k) k = n - k;
  BigInt r(1);
  for (unsigned i = 1; i <= k; ++i) {
    r *= BigInt(static_cast<unsigned long long>(n - k + i));
    r /= BigInt(static_cast<unsigned long long>(i));
  }
  return r;
}

}  // namespace wht
