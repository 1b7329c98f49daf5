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

#include "singlab/hjres.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>

#include "singlab/error.hpp"

namespace singlab {

CyclicQuotient::CyclicQuotient(BigInt p, BigInt q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_ < 2) {
    throw Error(ErrorCode::InvalidQuotient, "group order must be at least 2, got " + p_.str());
  }
  if (q_ < 1 || q_ >= p_) {
    throw Error(ErrorCode::InvalidQuotient,
                "weight must satisfy 1 <= q < p, got q=" + q_.str() + " p=" + p_.str());
  }
  if (boost::multiprecision::gcd(p_, q_) != 1) {
    throw Error(ErrorCode::InvalidQuotient,
                "p and q must be coprime, got p=" + p_.str() + " q=" + q_.str());
  }
}

std::int64_t ResolutionChain::sum() const {
  return std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0});
}

bool ResolutionChain::is_minimal() const {
  return std::all_of(entries_.begin(), entries_.end(), [](std::int64_t e) { return e >= 2; });
}

ResolutionChain ResolutionChain::slice(std::size_t first, std::size_t last) const {
  if (first > last || last >= entries_.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "slice [" + std::to_string(first) + ".." +
                                                std::to_string(last) + "] of a chain of length " +
                                                std::to_string(entries_.size()));
  }
  return ResolutionChain(std::vector<std::int64_t>(entries_.begin() + first,
                                                   entries_.begin() + last + 1));
}

std::string ResolutionChain::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  out += ')';
  return out;
}

ResolutionChain parse_chain(std::string_view text) {
  if (!text.empty() && text.front() == '(') text.remove_prefix(1);
  if (!text.empty() && text.back() == ')') text.remove_suffix(1);
  std::vector<std::int64_t> entries;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view token = text.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::InvalidConfiguration, "bad chain entry '" + std::string(token) + "'");
    }
    entries.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (entries.empty()) {
    throw Error(ErrorCode::EmptyChain, "no chain entries given");
  }
  return ResolutionChain(std::move(entries));
}

ResolutionChain hj_resolve(const CyclicQuotient& g) {
  std::vector<std::int64_t> entries;
  BigInt prev = g.p();
  BigInt cur = g.q();
  // prev = e * cur - rem with 0 <= rem < cur; remainders strictly decrease.
  while (true) {
    BigInt e = (prev + cur - 1) / cur;
    BigInt rem = e * cur - prev;
    if (e > std::numeric_limits<std::int64_t>::max()) {
      throw Error(ErrorCode::Overflow, "chain entry exceeds 64 bits for " + g.str());
    }
    entries.push_back(e.convert_to<std::int64_t>());
    if (rem.is_zero()) break;
    prev = std::move(cur);
    cur = std::move(rem);
  }
  return ResolutionChain(std::move(entries));
}

CyclicQuotient chain_to_quotient(const ResolutionChain& c) {
  if (c.empty()) {
    throw Error(ErrorCode::EmptyChain, "cannot build a group from an empty chain");
  }
  if (!c.is_minimal()) {
    throw Error(ErrorCode::NonMinimalChain, "chain " + c.str() + " contains an entry below 2");
  }
  Rational value = cf_eval(c.entries());
  return CyclicQuotient(value.den(), value.num());
}

std::ostream& operator<<(std::ostream& os, const CyclicQuotient& g) { return os << g.str(); }

std::ostream& operator<<(std::ostream& os, const ResolutionChain& c) { return os << c.str(); }

ResolutionChain reverse_chain(const ResolutionChain& c) {
  std::vector<std::int64_t> entries(c.entries().rbegin(), c.entries().rend());
  return ResolutionChain(std::move(entries));
}

namespace {

struct BlowUpVisitor {
  const ResolutionChain& chain;

  ResolutionChain operator()(const OnCurve& site) const {
    if (site.index >= chain.size()) {
      throw Error(ErrorCode::IndexOutOfRange, "curve " + std::to_string(site.index) +
                                                  " does not exist in " + chain.str());
    }
    const bool occupied = site.side == Side::Left ? site.index > 0
                                                  : site.index + 1 < chain.size();
    if (occupied) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "curve " + std::to_string(site.index) + " of " + chain.str() + " has a neighbour on the " +
                      (site.side == Side::Left ? "left" : "right") +
                      "; blow up the node instead");
    }
    std::vector<std::int64_t> out(chain.entries().begin(), chain.entries().end());
    out[site.index] += 1;
    auto pos = out.begin() + static_cast<std::ptrdiff_t>(site.index) +
               (site.side == Side::Right ? 1 : 0);
    out.insert(pos, 1);
    return ResolutionChain(std::move(out));
  }

  ResolutionChain operator()(const AtNode& site) const {
    if (site.index + 1 >= chain.size()) {
      throw Error(ErrorCode::IndexOutOfRange, "node " + std::to_string(site.index) +
                                                  " does not exist in " + chain.str());
    }
    std::vector<std::int64_t> out(chain.entries().begin(), chain.entries().end());
    out[site.index] += 1;
    out[site.index + 1] += 1;
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(site.index) + 1, 1);
    return ResolutionChain(std::move(out));
  }
};

}  // namespace

ResolutionChain blow_up(const ResolutionChain& c, const BlowUpSite& site) {
  return std::visit(BlowUpVisitor{c}, site);
}

ResolutionChain blow_down(const ResolutionChain& c, std::size_t index) {
  if (index >= c.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "curve " + std::to_string(index) + " does not exist in " + c.str());
  }
  if (c[index] != 1) {
    throw Error(ErrorCode::NotMinusOneCurve, "curve " + std::to_string(index) + " of " + c.str() +
                                                 " has self-intersection " +
                                                 std::to_string(-c[index]));
  }
  std::vector<std::int64_t> out(c.entries().begin(), c.entries().end());
  if (index > 0) out[index - 1] -= 1;
  if (index + 1 < out.size()) out[index + 1] -= 1;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(index));
  return ResolutionChain(std::move(out));
}

std::vector<BlowUpSite> non_minimal_blow_up_sequence(std::int64_t n) {
  if (n < 3) {
    throw Error(ErrorCode::InvalidN, "non-minimal graph needs n >= 3, got " + std::to_string(n));
  }
  // The first blow-up is on the (-n)-curve, every later one on the new
  // (-1)-curve; both sit at index 0 with the new curve to their left.
  return std::vector<BlowUpSite>(static_cast<std::size_t>(n - 2), OnCurve{0, Side::Left});
}

ResolutionChain non_minimal_graph(std::int64_t n) {
  ResolutionChain chain{n};
  for (const auto& site : non_minimal_blow_up_sequence(n)) {
    chain = blow_up(chain, site);
  }
  return chain;
}

}  // namespace singlab
