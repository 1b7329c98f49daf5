// Copyright 2026 The singlab Authors
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

#include "singlab/exactnum.hpp"

#include <ostream>
#include <utility>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "singlab/error.hpp"

namespace singlab {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidQuotient: return "InvalidQuotient";
    case ErrorCode::NonMinimalChain: return "NonMinimalChain";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotMinusOneCurve: return "NotMinusOneCurve";
    case ErrorCode::InvalidN: return "InvalidN";
    case ErrorCode::InvalidTypeT: return "InvalidTypeT";
    case ErrorCode::InvalidConfiguration: return "InvalidConfiguration";
    case ErrorCode::Mismatch: return "Mismatch";
    case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorCode::RowLimitExceeded: return "RowLimitExceeded";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::EmptyChain: return "EmptyChain";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

using Float = boost::multiprecision::cpp_bin_float_50;

}  // namespace

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) {
    throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  }
  normalize();
}

void Rational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational out = *this;
  out.num_ = -out.num_;
  return out;
}

Rational Rational::reciprocal() const {
  if (num_.is_zero()) {
    throw Error(ErrorCode::DivisionByZero, "reciprocal of zero");
  }
  return Rational(den_, num_);
}

Rational& Rational::operator+=(const Rational& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_.is_zero()) {
    throw Error(ErrorCode::DivisionByZero, "division by zero rational");
  }
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

std::string Rational::approx(int digits) const {
  if (num_.is_zero()) return "0";
  Float value = Float(num_) / Float(den_);
  return value.str(digits);
}

double Rational::to_double() const {
  return (Float(num_) / Float(den_)).convert_to<double>();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

BigInt floor_mod(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r.sign() < 0) r += m;
  return r;
}

BigInt mod_inverse(const BigInt& q, const BigInt& p) {
  if (p < 2) {
    throw Error(ErrorCode::NotInvertible, "modulus must be at least 2, got " + p.str());
  }
  // Extended Euclid on (p, q mod p), tracking only the coefficient of q.
  BigInt r0 = p;
  BigInt r1 = floor_mod(q, p);
  BigInt t0 = 0;
  BigInt t1 = 1;
  while (!r1.is_zero()) {
    BigInt quot = r0 / r1;
    BigInt r2 = r0 - quot * r1;
    BigInt t2 = t0 - quot * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0 != 1) {
    throw Error(ErrorCode::NotInvertible,
                q.str() + " is not invertible modulo " + p.str());
  }
  return floor_mod(t0, p);
}

Rational cf_eval(std::span<const std::int64_t> chain) {
  if (chain.empty()) {
    throw Error(ErrorCode::EmptyChain, "continued fraction of an empty chain");
  }
  // Tail value x_i = e_i - 1/x_{i+1}; result is 1/x_1.
  Rational tail(chain.back());
  for (std::size_t i = chain.size() - 1; i-- > 0;) {
    if (tail.is_zero()) {
      throw Error(ErrorCode::DivisionByZero,
                  "nested denominator vanishes at position " + std::to_string(i + 1));
    }
    tail = Rational(chain[i]) - tail.reciprocal();
  }
  if (tail.is_zero()) {
    throw Error(ErrorCode::DivisionByZero, "nested denominator vanishes at position 0");
  }
  return tail.reciprocal();
}

}  // namespace singlab
