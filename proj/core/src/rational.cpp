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

#include "whtree/rational.hpp"

#include <ostream>
#include <utility>

#include "whtree/error.hpp"

namespace wht {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_.sign() < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  if (den_.is_one()) return;
  BigInt g = BigInt::gcd(num_, den_);
  if (!g.is_one()) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) {
    Rational r;
    r.num_ = a.num_ + b.num_;
    r.den_ = a.den_;
    r.normalize();
    return r;
  }
  Rational r;
  r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
  r.den_ = a.den_ * b.den_;
  r.normalize();
  return r;
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  Rational r;
  r.num_ = a.num_ * b.num_;
  r.den_ = a.den_ * b.den_;
  r.normalize();
  return r;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational division by zero");
  Rational r;
  r.num_ = a.num_ * b.den_;
  r.den_ = a.den_ * b.num_;
  r.normalize();
  return r;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  int sa = num_.sign(), sb = o.num_.sign();
  if (sa != sb) return sa <=> sb;
  if (sa == 0) return std::strong_ordering::equal;
  // Zero-allocation path: both fractions fit in 64-bit magnitudes, so the
  // cross products fit in 128 bits.
  if (num_.magnitude_fits_u64() && den_.magnitude_fits_u64() &&
      o.num_.magnitude_fits_u64() && o.den_.magnitude_fits_u64()) {
    unsigned __int128 lhs =
        static_cast<unsigned __int128>(num_.magnitude_u64()) * o.den_.magnitude_u64();
    unsigned __int128 rhs =
        static_cast<unsigned __int128>(o.num_.magnitude_u64()) * den_.magnitude_u64();
    if (lhs == rhs) return std::strong_ordering::equal;
    bool mag_less = lhs < rhs;
    if (sa < 0) mag_less = !mag_less;
    return mag_less ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  BigInt lhs = num_ * o.den_;
  BigInt rhs = o.num_ * den_;
  return lhs <=> rhs;
}

Rational Rational::parse(std::string_view s) {
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty rational literal");
  auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    std::string_view p = s.substr(0, slash);
    std::string_view q = s.substr(slash + 1);
    if (p.empty() || q.empty())
      throw Error(ErrorCode::ParseError, "malformed fraction '" + std::string(s) + "'");
    if (q[0] == '-' || q[0] == '+')
      throw Error(ErrorCode::ParseError, "denominator must be a positive integer in '" + std::string(s) + "'");
    BigInt den = BigInt::from_decimal(q);
    if (den.is_zero())
      throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(s) + "'");
    return Rational(BigInt::from_decimal(p), std::move(den));
  }
  auto dot = s.find('.');
  if (dot != std::string_view::npos) {
    std::string_view ipart = s.substr(0, dot);
    std::string_view fpart = s.substr(dot + 1);
    if (fpart.empty() || fpart.find_first_not_of("0123456789") != std::string_view::npos)
      throw Error(ErrorCode::ParseError, "malformed decimal '" + std::string(s) + "'");
    bool negative = !ipart.empty() && ipart[0] == '-';
    BigInt whole = ipart.empty() || ipart == "-" || ipart == "+"
                       ? BigInt{}
                       : BigInt::from_decimal(ipart).abs();
    BigInt scale(1);
    for (std::size_t i = 0; i < fpart.size(); ++i) scale *= BigInt(10);
    BigInt num = whole * scale + BigInt::from_decimal(fpart);
    if (negative) num = -num;
    return Rational(std::move(num), std::move(scale));
  }
  return Rational(BigInt::from_decimal(s));
}

std::string Rational::to_string() const {
  if (den_.is_one()) return num_.to_decimal();
  return num_.to_decimal() + "/" + den_.to_decimal();
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

}  // namespace wht
