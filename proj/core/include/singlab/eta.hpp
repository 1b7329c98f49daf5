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
#include <vector>

#include "singlab/exactnum.hpp"
#include "singlab/hjres.hpp"

namespace singlab {

class TypeTParams;

/// Rotation angles of the element g^j of (1/p)(1,q) on C^2.
struct GroupElementRotation {
  std::int64_t j;
  double angle1;  // 2 pi j / p
  double angle2;  // 2 pi (j q mod p) / p
};

/// Rotation data for every non-identity element, j = 1 .. p-1.
/// Throws Error(Overflow) when p does not fit in 64 bits.
std::vector<GroupElementRotation> rotations(const CyclicQuotient& g);

/// eta(S^3/Gamma) = (1/3)(sum e_i + (q^{-1;p} + q)/p) - k, exact.
Rational eta_exact(const CyclicQuotient& g);

/// eta(S^3/Gamma) = (1/p) sum_{j=1}^{p-1} cot(pi j/p) cot(pi j q/p), in double
/// precision with compensated summation. Only meant as an oracle for
/// eta_exact; cost is linear in p.
double eta_cotangent(const CyclicQuotient& g);

/// (1/3)(3 - s - 2/(r^2 s)).
Rational eta_type_t_closed_form(const TypeTParams& t);

}  // namespace singlab
