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

#include "singlab/type_t.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <ostream>

#include "singlab/error.hpp"
#include "singlab/eta.hpp"

namespace singlab {

TypeTParams::TypeTParams(std::int64_t r, std::int64_t s, std::int64_t d) : r_(r), s_(s), d_(0) {
  if (r < 2) throw Error(ErrorCode::InvalidTypeT, "r must be at least 2, got " + std::to_string(r));
  if (s < 1) throw Error(ErrorCode::InvalidTypeT, "s must be at least 1, got " + std::to_string(s));
  d_ = ((d % r) + r) % r;
  if (std::gcd(r, d_) != 1) {
    throw Error(ErrorCode::InvalidTypeT,
                "d must be coprime to r, got r=" + std::to_string(r) + " d=" + std::to_string(d));
  }
}

std::string TypeTParams::str() const {
  return "T(" + std::to_string(r_) + "," + std::to_string(s_) + "," + std::to_string(d_) + ")";
}

std::ostream& operator<<(std::ostream& os, const TypeTParams& t) { return os << t.str(); }

ResolutionChain type_t_seed(std::int64_t s) {
  if (s < 1) throw Error(ErrorCode::InvalidTypeT, "s must be at least 1, got " + std::to_string(s));
  if (s == 1) return ResolutionChain{4};
  std::vector<std::int64_t> entries(static_cast<std::size_t>(s), 2);
  entries.front() = 3;
  entries.back() = 3;
  return ResolutionChain(std::move(entries));
}

ResolutionChain apply_move(const ResolutionChain& chain, TMove move) {
  if (chain.empty()) throw Error(ErrorCode::EmptyChain, "cannot extend an empty chain");
  std::vector<std::int64_t> out(chain.entries().begin(), chain.entries().end());
  if (move == TMove::Left) {
    out.back() += 1;
    out.insert(out.begin(), 2);
  } else {
    out.front() += 1;
    out.push_back(2);
  }
  return ResolutionChain(std::move(out));
}

std::vector<TMove> move_path(const TypeTParams& t) {
  std::vector<TMove> path;
  std::int64_t a = t.d();
  std::int64_t b = t.r() - t.d();
  while (a != b) {
    if (a < b) {
      b -= a;
      path.push_back(TMove::Right);
    } else {
      a -= b;
      path.push_back(TMove::Left);
    }
  }
  std::reverse(path.begin(), path.end());
  return path;
}

CyclicQuotient type_t_group(const TypeTParams& t) {
  const BigInt rs = BigInt(t.r()) * t.s();
  return CyclicQuotient(rs * t.r(), rs * t.d() - 1);
}

ResolutionChain type_t_string(const TypeTParams& t) { return hj_resolve(type_t_group(t)); }

ResolutionChain type_t_string_by_moves(const TypeTParams& t) {
  ResolutionChain chain = type_t_seed(t.s());
  for (TMove move : move_path(t)) chain = apply_move(chain, move);
  return chain;
}

namespace {

void grow(const ResolutionChain& chain, std::int64_t a, std::int64_t b, std::int64_t s,
          std::int64_t r_max, std::vector<TypeTEntry>& out) {
  TypeTParams params(a + b, s, a);
  auto recovered = recognize_type_t(chain);
  if (!recovered || *recovered != params) {
    throw Error(ErrorCode::Mismatch, "move tree reached " + chain.str() + " as " + params.str() +
                                         " but recognition gave " +
                                         (recovered ? recovered->str() : "none"));
  }
  out.push_back({params, chain});
  if (2 * a + b <= r_max) grow(apply_move(chain, TMove::Right), a, a + b, s, r_max, out);
  if (a + 2 * b <= r_max) grow(apply_move(chain, TMove::Left), a + b, b, s, r_max, out);
}

}  // namespace

std::vector<TypeTEntry> enumerate_type_t(std::int64_t r_max, std::int64_t s_max) {
  std::vector<TypeTEntry> out;
  if (r_max < 2 || s_max < 1) return out;
  for (std::int64_t s = 1; s <= s_max; ++s) {
    grow(type_t_seed(s), 1, 1, s, r_max, out);
  }
  std::sort(out.begin(), out.end(), [](const TypeTEntry& x, const TypeTEntry& y) {
    if (x.params != y.params) return x.params < y.params;
    return x.chain < y.chain;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<TypeTParams> recognize_type_t_arithmetic(const ResolutionChain& c) {
  const CyclicQuotient g = chain_to_quotient(c);
  const BigInt& p = g.p();
  const BigInt q_plus_one = g.q() + 1;
  for (BigInt r = 2; r * r <= p; ++r) {
    const BigInt r2 = r * r;
    if (p % r2 != 0) continue;
    const BigInt s = p / r2;
    const BigInt rs = r * s;
    if (q_plus_one % rs != 0) continue;
    const BigInt d = q_plus_one / rs;
    if (d < 1 || d >= r || boost::multiprecision::gcd(r, d) != 1) continue;
    return TypeTParams(r.convert_to<std::int64_t>(), s.convert_to<std::int64_t>(),
                       d.convert_to<std::int64_t>());
  }
  return std::nullopt;
}

namespace {

/// s of the seed `chain`, or 0 when it is not a seed.
std::int64_t seed_index(const std::deque<std::int64_t>& chain) {
  if (chain.size() == 1) return chain.front() == 4 ? 1 : 0;
  if (chain.front() != 3 || chain.back() != 3) return 0;
  for (std::size_t i = 1; i + 1 < chain.size(); ++i) {
    if (chain[i] != 2) return 0;
  }
  return static_cast<std::int64_t>(chain.size());
}

/// Peels moves off `chain`; on success `undone` holds them last-applied first.
std::int64_t peel(std::deque<std::int64_t>& chain, std::vector<TMove>& undone) {
  if (std::int64_t s = seed_index(chain)) return s;
  if (chain.size() < 2) return 0;

  if (chain.front() == 2 && chain.back() >= 3) {
    chain.pop_front();
    chain.back() -= 1;
    undone.push_back(TMove::Left);
    if (std::int64_t s = peel(chain, undone)) return s;
    undone.pop_back();
    chain.back() += 1;
    chain.push_front(2);
  }
  if (chain.back() == 2 && chain.front() >= 3) {
    chain.pop_back();
    chain.front() -= 1;
    undone.push_back(TMove::Right);
    if (std::int64_t s = peel(chain, undone)) return s;
    undone.pop_back();
    chain.front() += 1;
    chain.push_back(2);
  }
  return 0;
}

}  // namespace

std::optional<TypeTParams> recognize_type_t_peeling(const ResolutionChain& c) {
  if (c.empty()) throw Error(ErrorCode::EmptyChain, "cannot recognize an empty chain");
  if (!c.is_minimal()) {
    throw Error(ErrorCode::NonMinimalChain, "chain " + c.str() + " contains an entry below 2");
  }
  std::deque<std::int64_t> work(c.entries().begin(), c.entries().end());
  std::vector<TMove> undone;
  const std::int64_t s = peel(work, undone);
  if (s == 0) return std::nullopt;
  std::int64_t a = 1;
  std::int64_t b = 1;
  for (auto it = undone.rbegin(); it != undone.rend(); ++it) {
    if (*it == TMove::Right) {
      b += a;
    } else {
      a += b;
    }
  }
  return TypeTParams(a + b, s, a);
}

std::optional<TypeTParams> recognize_type_t(const ResolutionChain& c) {
  auto by_arithmetic = recognize_type_t_arithmetic(c);
  auto by_peeling = recognize_type_t_peeling(c);
  if (by_arithmetic != by_peeling) {
    throw Error(ErrorCode::Mismatch,
                "type T recognizers disagree on " + c.str() + ": arithmetic gives " +
                    (by_arithmetic ? by_arithmetic->str() : "none") + ", peeling gives " +
                    (by_peeling ? by_peeling->str() : "none"));
  }
  return by_arithmetic;
}

ImportpropInvariants importprop_invariants(const TypeTParams& t) {
  const BigInt order = BigInt(t.r()) * t.r() * t.s();
  return {t.r() + t.s() - 2, 3 * t.r() + 2 * t.s() - 4, eta_type_t_closed_form(t),
          Rational(BigInt(4), order)};
}

TypeTParams conjugate(const TypeTParams& t) { return TypeTParams(t.r(), t.s(), t.r() - t.d()); }

}  // namespace singlab
