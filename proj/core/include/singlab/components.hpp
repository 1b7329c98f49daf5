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
#include <string>
#include <vector>

#include "singlab/exactnum.hpp"
#include "singlab/hjres.hpp"
#include "singlab/type_t.hpp"

namespace singlab {

/// Inclusive, 0-based index range [first, last] of a chain.
struct Interval {
  std::size_t first;
  std::size_t last;

  std::size_t size() const noexcept { return last - first + 1; }
  /// "[first..last]".
  std::string str() const;

  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// Parses "A..B". Throws Error(InvalidArgument) on malformed text.
Interval parse_interval(std::string_view text);

struct Contraction {
  Interval interval;
  TypeTParams params;
};

/// The HJ chain of a group together with disjoint type T substrings that
/// are contracted and smoothed. No contractions is the Artin configuration.
///
/// Each contracted substring of length l with params (r, s, d) removes l
/// curves and contributes s - 1 to b2, so b2 = k - sum(l_j) + sum(s_j - 1).
class ResolutionConfiguration {
 public:
  static ResolutionConfiguration artin(const CyclicQuotient& quotient);

  /// Throws Error(InvalidConfiguration) if intervals overlap, run past the
  /// chain, or cover a substring that is not of type T.
  ResolutionConfiguration(CyclicQuotient quotient, std::vector<Interval> intervals);

  const CyclicQuotient& quotient() const noexcept { return quotient_; }
  const ResolutionChain& chain() const noexcept { return chain_; }
  const std::vector<Contraction>& contractions() const noexcept { return contractions_; }
  bool is_artin() const noexcept { return contractions_.empty(); }
  std::int64_t b2() const noexcept { return b2_; }

  /// True for a single contraction that is either the whole chain or a
  /// type T string with one, two or three (-2)-curves attached on one end.
  bool is_certified() const;

  /// "artin", or the contractions as "contract[a..b]=T(r,s,d)" joined by ';',
  /// prefixed with "candidate;" unless is_certified().
  std::string label() const;

 private:
  ResolutionConfiguration(CyclicQuotient quotient, ResolutionChain chain,
                          std::vector<Contraction> contractions);

  CyclicQuotient quotient_;
  ResolutionChain chain_;
  std::vector<Contraction> contractions_;
  std::int64_t b2_ = 0;
};

struct InvariantReport {
  BigInt p;
  BigInt q;
  ResolutionChain chain;
  std::int64_t k = 0;
  std::int64_t sum_e = 0;
  BigInt q_inv;
  Rational eta;
  std::int64_t b2 = 0;
  Rational c_value;
  bool positive = false;
  std::string label;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

/// Rows ordered by (p, q, label).
bool report_less(const InvariantReport& a, const InvariantReport& b);

/// C(X) = 2 + (k - b2) - sum(e_i - 2) + (2 - q^{-1;p} - q)/p, cross-checked
/// against 2 - b2 + 2/p - 3 eta. Throws Error(Mismatch) if they differ.
InvariantReport c_invariant(const ResolutionConfiguration& cfg);

/// The closed-form values for m (-2)-curves attached to T(r, s, r - d).
struct FamilyClosedForm {
  BigInt p;
  BigInt q;
  BigInt q_inv;
  Rational eta;
  Rational c;
};

struct FamilyResult {
  ResolutionChain chain;
  InvariantReport report;
  FamilyClosedForm closed_form;
};

/// (2, ..., 2) with m twos followed by type_t_string(T(r, s, r - d)).
/// Throws Error(UnsupportedFamily) unless m is 1, 2 or 3 and
/// Error(InvalidTypeT) unless 1 <= d <= r - 1 with gcd(r, d) = 1.
ResolutionChain family_attach_chain(int m, std::int64_t r, std::int64_t s, std::int64_t d);

FamilyClosedForm family_closed_form(int m, std::int64_t r, std::int64_t s, std::int64_t d);

/// Runs the attach chain through chain_to_quotient, eta_exact and
/// c_invariant with the type T substring contracted, and compares every
/// value with family_closed_form. Throws Error(Mismatch) on disagreement.
FamilyResult attach_family(int m, std::int64_t r, std::int64_t s, std::int64_t d);

/// Minimal resolution graph listed for the d = 1 families:
///   m = 1, s = 1: (2^{r-1}, r+2)     m = 1, s = 2: (2^{r-1}, 3, r+1)
///   m = 1, s = 3: (2^{r-1}, 3, 2, r+1)
///   m = 2, s = 1: (2^r, r+2)         m = 3, s = 1: (2^{r+1}, r+2)
/// Throws Error(UnsupportedFamily) for any other (m, s).
ResolutionChain family_minimal_graph(int m, std::int64_t r, std::int64_t s);

struct TheoremRow {
  std::string family;
  std::int64_t r = 0;  // 0 for the fixed groups
  InvariantReport report;
};

/// Rows for the three Artin-only groups 1/3(1,1), 1/5(1,2), 1/7(1,3) and
/// for every r in [2, r_max] of the five non-Artin families
///   (1)  1/(r^2+r+1)(1,r)                     b2 = 1
///   (2a) 1/(r^2+2r+2)(1,r+1)                  b2 = 2
///   (2b) 1/(2r^2+2r+1)(1,2r+1)                b2 = 2
///   (3a) 1/(r^2+3r+3)(1,r+2)                  b2 = 3
///   (3b) 1/(3r^2+3r+1)(1,3r+2)                b2 = 3
/// each in the presentation named above.
std::vector<TheoremRow> theorem_tables(std::int64_t r_max);

}  // namespace singlab
