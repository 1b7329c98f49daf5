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
#include <iosfwd>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "singlab/exactnum.hpp"
#include "singlab/hjres.hpp"

namespace singlab {

/// Parameters of the type T(r, s, d) singularity (1/(r^2 s))(1, r s d - 1):
/// r >= 2, s >= 1, gcd(r, d) = 1, with d stored canonically in [1, r-1].
class TypeTParams {
 public:
  /// Reduces d modulo r. Throws Error(InvalidTypeT) if r < 2, s < 1 or
  /// gcd(r, d) != 1.
  TypeTParams(std::int64_t r, std::int64_t s, std::int64_t d);

  std::int64_t r() const noexcept { return r_; }
  std::int64_t s() const noexcept { return s_; }
  std::int64_t d() const noexcept { return d_; }

  /// "T(r,s,d)".
  std::string str() const;

  friend bool operator==(const TypeTParams&, const TypeTParams&) = default;
  friend auto operator<=>(const TypeTParams&, const TypeTParams&) = default;

 private:
  std::int64_t r_;
  std::int64_t s_;
  std::int64_t d_;
};

/// The two moves that produce type T strings from a seed:
///   Left:  (e_1, ..., e_k) -> (2, e_1, ..., e_k + 1)
///   Right: (e_1, ..., e_k) -> (e_1 + 1, ..., e_k, 2)
std::ostream& operator<<(std::ostream& os, const TypeTParams& t);

enum class TMove { Left, Right };

/// (4) for s = 1, (3,3) for s = 2, (3, 2, ..., 2, 3) with s-2 twos for s >= 3.
ResolutionChain type_t_seed(std::int64_t s);

ResolutionChain apply_move(const ResolutionChain& chain, TMove move);

/// Moves taking the seed to the string of `t`.
///
/// The moves act on the pair (d, r - d) like the Stern-Brocot tree: Right
/// sends (a, b) to (a, a + b), Left sends it to (a + b, b), and the seed is
/// (1, 1). The path is therefore the subtractive Euclidean algorithm on
/// (d, r - d) run backwards. It has r - 2 steps only for d = 1 or d = r - 1;
/// for other d it is shorter.
std::vector<TMove> move_path(const TypeTParams& t);

/// (r^2 s, r s d - 1).
CyclicQuotient type_t_group(const TypeTParams& t);

/// HJ string of type_t_group(t).
ResolutionChain type_t_string(const TypeTParams& t);

/// The same string built from the seed by move_path(t).
ResolutionChain type_t_string_by_moves(const TypeTParams& t);

struct TypeTEntry {
  TypeTParams params;
  ResolutionChain chain;

  friend bool operator==(const TypeTEntry&, const TypeTEntry&) = default;
};

/// Every type T string with r <= r_max and s <= s_max, grown from the seeds
/// by the moves and sorted by (r, s, d). Each (r, s) cell holds exactly
/// phi(r) strings. Recovered params are re-derived by recognize_type_t and
/// compared with the tracked move state; a disagreement throws
/// Error(Mismatch).
std::vector<TypeTEntry> enumerate_type_t(std::int64_t r_max, std::int64_t s_max);

/// Arithmetic recognizer: reads (p, q) off the chain and looks for r >= 2
/// with r^2 | p, s = p / r^2, r s | q + 1 and d = (q + 1)/(r s) valid.
std::optional<TypeTParams> recognize_type_t_arithmetic(const ResolutionChain& c);

/// Graph recognizer: undoes moves (drop a terminal 2, lower the far end)
/// with backtracking until a seed is reached, then replays the moves on the
/// Stern-Brocot pair to recover r and d.
std::optional<TypeTParams> recognize_type_t_peeling(const ResolutionChain& c);

/// Runs both recognizers. Throws Error(Mismatch) if they disagree and
/// Error(NonMinimalChain) if some entry is below 2.
std::optional<TypeTParams> recognize_type_t(const ResolutionChain& c);

struct ImportpropInvariants {
  std::int64_t length;  // r + s - 2
  std::int64_t sum;     // 3r + 2s - 4
  Rational eta;         // (1/3)(3 - s - 2/(r^2 s))
  Rational c;           // 4/(r^2 s)
};

/// Closed-form invariants of T(r, s, d). The length and entry sum are those
/// of the strings reached by r - 2 moves (d = 1 or d = r - 1); eta and C hold
/// for every d.
ImportpropInvariants importprop_invariants(const TypeTParams& t);

/// T(r, s, r - d): the same singularity with its string reversed.
TypeTParams conjugate(const TypeTParams& t);

}  // namespace singlab
