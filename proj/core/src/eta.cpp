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

#include "singlab/eta.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "singlab/error.hpp"
#include "singlab/type_t.hpp"

namespace singlab {

namespace {

std::int64_t narrow_order(const CyclicQuotient& g) {
  if (g.p() > std::numeric_limits<std::int64_t>::max()) {
    throw Error(ErrorCode::Overflow, "group order too large for rotation enumeration: " + g.str());
  }
  return g.p().convert_to<std::int64_t>();
}

}  // namespace

std::vector<GroupElementRotation> rotations(const CyclicQuotient& g) {
  const std::int64_t p = narrow_order(g);
  const std::int64_t q = g.q().convert_to<std::int64_t>();
  std::vector<GroupElementRotation> out;
  out.reserve(static_cast<std::size_t>(p - 1));
  std::int64_t jq = 0;
  for (std::int64_t j = 1; j < p; ++j) {
    jq = (jq + q) % p;
    out.push_back({j, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(p),
                   2.0 * std::numbers::pi * static_cast<double>(jq) / static_cast<double>(p)});
  }
  return out;
}

Rational eta_exact(const CyclicQuotient& g) {
  const ResolutionChain chain = hj_resolve(g);
  const Rational twist(g.q_inverse() + g.q(), g.p());
  return Rational(1, 3) * (Rational(chain.sum()) + twist) -
         Rational(static_cast<std::int64_t>(chain.size()));
}

double eta_cotangent(const CyclicQuotient& g) {
  double sum = 0.0;
  double carry = 0.0;
  for (const auto& rot : rotations(g)) {
    const double term = (std::cos(rot.angle1 / 2.0) / std::sin(rot.angle1 / 2.0)) *
                       (std::cos(rot.angle2 / 2.0) / std::sin(rot.angle2 / 2.0));
    // Kahan summation.
    const double y = term - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return sum / g.p().convert_to<double>();
}

Rational eta_type_t_closed_form(const TypeTParams& t) {
  const BigInt order = BigInt(t.r()) * t.r() * t.s();
  return Rational(1, 3) * (Rational(3 - t.s()) - Rational(BigInt(2), order));
}

}  // namespace singlab
