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

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "singlab/exactnum.hpp"

namespace singlab {

/// The cyclic group (1/p)(1,q) acting by (z1, z2) -> (zeta z1, zeta^q z2),
/// with p >= 2, 1 <= q < p and gcd(p, q) = 1.
class CyclicQuotient {
 public:
  /// Throws Error(InvalidQuotient) when the invariants do not hold.
  CyclicQuotient(BigInt p, BigInt q);

  const BigInt& p() const noexcept { return p_; }
  const BigInt& q() const noexcept { return q_; }
  /// q^{-1;p}, the inverse of q modulo p in [1, p-1].
  BigInt q_inverse() const { return mod_inverse(q_, p_); }
  /// The same group presented with q replaced by q^{-1;p}.
  CyclicQuotient inverse_presentation() const { return {p_, q_inverse()}; }

  std::string str() const { return "1/" + p_.str() + "(1," + q_.str() + ")"; }

  friend bool operator==(const CyclicQuotient&, const CyclicQuotient&) = default;

 private:
  BigInt p_;
  BigInt q_;
};

/// A linear chain of rational curves recorded as minus self-intersections.
/// A (-1)-curve is the entry 1; minimal chains have every entry >= 2.
class ResolutionChain {
 public:
  ResolutionChain() = default;
  explicit ResolutionChain(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {}
  ResolutionChain(std::initializer_list<std::int64_t> entries) : entries_(entries) {}

  std::span<const std::int64_t> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  std::int64_t sum() const;
  bool is_minimal() const;

  /// Sub-chain over the inclusive index range [first, last].
  ResolutionChain slice(std::size_t first, std::size_t last) const;

  /// "(e1,e2,...)".
  std::string str() const;

  friend bool operator==(const ResolutionChain&, const ResolutionChain&) = default;
  friend auto operator<=>(const ResolutionChain&, const ResolutionChain&) = default;

 private:
  std::vector<std::int64_t> entries_;
};

/// Parses "3,2,2" or "(3,2,2)". Throws Error(InvalidConfiguration) on bad text.
ResolutionChain parse_chain(std::string_view text);

/// Minimal (Hirzebruch-Jung) resolution string of (1/p)(1,q), produced by
/// the modified Euclidean algorithm p = e_1 q - a_1, q = e_2 a_1 - a_2, ...
ResolutionChain hj_resolve(const CyclicQuotient& g);

/// The group whose HJ string is `c`. Throws Error(NonMinimalChain) if some
/// entry is <= 1 and Error(EmptyChain) on an empty chain.
CyclicQuotient chain_to_quotient(const ResolutionChain& c);

ResolutionChain reverse_chain(const ResolutionChain& c);

std::ostream& operator<<(std::ostream& os, const CyclicQuotient& g);
std::ostream& operator<<(std::ostream& os, const ResolutionChain& c);

enum class Side { Left, Right };

/// Blow up a free point of curve `index`; the new (-1)-curve sits on `side`,
/// which must be an end of the chain so the result stays linear.
struct OnCurve {
  std::size_t index;
  Side side;
};

/// Blow up the node between curves `index` and `index + 1`.
struct AtNode {
  std::size_t index;
};

using BlowUpSite = std::variant<OnCurve, AtNode>;

/// Throws Error(IndexOutOfRange) for an invalid site, including an OnCurve
/// side that already has a neighbour.
ResolutionChain blow_up(const ResolutionChain& c, const BlowUpSite& site);

/// Contracts the (-1)-curve at `index`; its neighbours lose one each.
/// Throws Error(NotMinusOneCurve) if entry `index` is not 1, and
/// Error(IndexOutOfRange) if `index` is past the end.
ResolutionChain blow_down(const ResolutionChain& c, std::size_t index);

/// The chain (1, 2, ..., 2, n+1) with n-3 twos, reached from (n) by n-2
/// blow-ups: first on the (-n)-curve, then each time on the fresh (-1)-curve.
/// Throws Error(InvalidN) if n < 3.
ResolutionChain non_minimal_graph(std::int64_t n);

/// The explicit blow-up sequence whose result is non_minimal_graph(n).
std::vector<BlowUpSite> non_minimal_blow_up_sequence(std::int64_t n);

}  // namespace singlab
