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

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace singlab {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(BigInt value) : num_(std::move(value)), den_(1) {}  // NOLINT
  Rational(std::int64_t value) : num_(value), den_(1) {}       // NOLINT
  Rational(int value) : num_(value), den_(1) {}                // NOLINT
  /// Throws Error(DivisionByZero) when `den` is zero.
  Rational(BigInt num, BigInt den);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  int sign() const noexcept { return num_.sign(); }

  Rational operator-() const;
  Rational reciprocal() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "n/d", or just "n" when the denominator is 1.
  std::string str() const;
  /// Decimal rendering with `digits` significant digits (printf %.Ng style).
  std::string approx(int digits = 15) const;
  double to_double() const;

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

BigInt floor_mod(const BigInt& a, const BigInt& m);

/// Multiplicative inverse of q modulo p, in [1, p-1].
/// Throws Error(NotInvertible) if p < 2 or gcd(q, p) != 1.
BigInt mod_inverse(const BigInt& q, const BigInt& p);

/// Evaluates the bracket [e_1, ..., e_k] = 1/(e_1 - 1/(e_2 - ... 1/e_k)),
/// right to left. For a chain with all e_i >= 2 this is q/p in (0, 1).
/// Throws Error(DivisionByZero) when a nested denominator vanishes, which can
/// only happen if some e_i <= 1, and Error(EmptyChain) on an empty chain.
Rational cf_eval(std::span<const std::int64_t> chain);

}  // namespace singlab
