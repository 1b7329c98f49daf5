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

#include "singlab/components.hpp"

#include <algorithm>
#include <charconv>

#include "singlab/error.hpp"
#include "singlab/eta.hpp"

namespace singlab {

std::string Interval::str() const {
  return "[" + std::to_string(first) + ".." + std::to_string(last) + "]";
}

Interval parse_interval(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    throw Error(ErrorCode::InvalidArgument, "interval must look like A..B, got '" +
                                                std::string(text) + "'");
  }
  auto parse = [&](std::string_view part) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw Error(ErrorCode::InvalidArgument, "bad interval bound in '" + std::string(text) + "'");
    }
    return value;
  };
  Interval out{parse(text.substr(0, dots)), parse(text.substr(dots + 2))};
  if (out.first > out.last) {
    throw Error(ErrorCode::InvalidArgument, "interval " + out.str() + " is reversed");
  }
  return out;
}

ResolutionConfiguration ResolutionConfiguration::artin(const CyclicQuotient& quotient) {
  return ResolutionConfiguration(quotient, hj_resolve(quotient), {});
}

ResolutionConfiguration::ResolutionConfiguration(CyclicQuotient quotient, ResolutionChain chain,
                                                 std::vector<Contraction> contractions)
    : quotient_(std::move(quotient)),
      chain_(std::move(chain)),
      contractions_(std::move(contractions)) {
  b2_ = static_cast<std::int64_t>(chain_.size());
  for (const auto& c : contractions_) {
    b2_ -= static_cast<std::int64_t>(c.interval.size());
    b2_ += c.params.s() - 1;
  }
}

ResolutionConfiguration::ResolutionConfiguration(CyclicQuotient quotient,
                                                 std::vector<Interval> intervals)
    : ResolutionConfiguration(quotient, hj_resolve(quotient), {}) {
  std::sort(intervals.begin(), intervals.end());
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    const Interval& iv = intervals[i];
    if (iv.first > iv.last || iv.last >= chain_.size()) {
      throw Error(ErrorCode::InvalidConfiguration,
                  "interval " + iv.str() + " does not fit the chain " + chain_.str());
    }
    if (i > 0 && intervals[i - 1].last >= iv.first) {
      throw Error(ErrorCode::InvalidConfiguration, "intervals " + intervals[i - 1].str() +
                                                       " and " + iv.str() + " overlap");
    }
    const ResolutionChain sub = chain_.slice(iv.first, iv.last);
    auto params = recognize_type_t(sub);
    if (!params) {
      throw Error(ErrorCode::InvalidConfiguration,
                  "substring " + sub.str() + " at " + iv.str() + " is not of type T");
    }
    contractions_.push_back({iv, *params});
    b2_ -= static_cast<std::int64_t>(iv.size());
    b2_ += params->s() - 1;
  }
}

bool ResolutionConfiguration::is_certified() const {
  if (contractions_.size() != 1) return false;
  const Interval& iv = contractions_.front().interval;
  const std::size_t k = chain_.size();
  if (iv.first == 0 && iv.last + 1 == k) return true;
  auto all_twos = [&](std::size_t first, std::size_t end) {
    for (std::size_t i = first; i < end; ++i) {
      if (chain_[i] != 2) return false;
    }
    return true;
  };
  // m twos on the left, or (conjugate presentation) on the right.
  if (iv.last + 1 == k && iv.first >= 1 && iv.first <= 3 && all_twos(0, iv.first)) return true;
  const std::size_t right = k - 1 - iv.last;
  return iv.first == 0 && right >= 1 && right <= 3 && all_twos(iv.last + 1, k);
}

std::string ResolutionConfiguration::label() const {
  if (contractions_.empty()) return "artin";
  std::string out = is_certified() ? "" : "candidate;";
  for (std::size_t i = 0; i < contractions_.size(); ++i) {
    if (i) out += ';';
    out += "contract" + contractions_[i].interval.str() + "=" + contractions_[i].params.str();
  }
  return out;
}

bool report_less(const InvariantReport& a, const InvariantReport& b) {
  if (a.p != b.p) return a.p < b.p;
  if (a.q != b.q) return a.q < b.q;
  return a.label < b.label;
}

InvariantReport c_invariant(const ResolutionConfiguration& cfg) {
  const CyclicQuotient& g = cfg.quotient();
  InvariantReport out;
  out.p = g.p();
  out.q = g.q();
  out.chain = cfg.chain();
  out.k = static_cast<std::int64_t>(out.chain.size());
  out.sum_e = out.chain.sum();
  out.q_inv = g.q_inverse();
  out.eta = eta_exact(g);
  out.b2 = cfg.b2();
  out.label = cfg.label();

  const Rational by_chain = Rational(2 + (out.k - out.b2) - (out.sum_e - 2 * out.k)) +
                            Rational(2 - out.q_inv - out.q, out.p);
  const Rational by_eta =
      Rational(2 - out.b2) + Rational(BigInt(2), out.p) - Rational(3) * out.eta;
  if (by_chain != by_eta) {
    throw Error(ErrorCode::Mismatch, "C(X) for " + g.str() + " " + out.label + ": chain form " +
                                         by_chain.str() + " but eta form " + by_eta.str());
  }
  out.c_value = by_chain;
  out.positive = out.c_value.sign() > 0;
  return out;
}

namespace {

void check_family_args(int m, std::int64_t r, std::int64_t d) {
  if (m < 1 || m > 3) {
    throw Error(ErrorCode::UnsupportedFamily,
                "only 1, 2 or 3 attached (-2)-curves are supported, got " + std::to_string(m));
  }
  if (r < 2 || d < 1 || d > r - 1) {
    throw Error(ErrorCode::InvalidTypeT, "need 1 <= d <= r-1, got r=" + std::to_string(r) +
                                             " d=" + std::to_string(d));
  }
}

}  // namespace

ResolutionChain family_attach_chain(int m, std::int64_t r, std::int64_t s, std::int64_t d) {
  check_family_args(m, r, d);
  const ResolutionChain t_string = type_t_string(TypeTParams(r, s, r - d));
  std::vector<std::int64_t> entries(static_cast<std::size_t>(m), 2);
  entries.insert(entries.end(), t_string.entries().begin(), t_string.entries().end());
  return ResolutionChain(std::move(entries));
}

FamilyClosedForm family_closed_form(int m, std::int64_t r, std::int64_t s, std::int64_t d) {
  check_family_args(m, r, d);
  const BigInt R(r), S(s), D(d);
  const BigInt drs = D * R * S;
  const BigInt r2s = R * R * S;
  FamilyClosedForm out;
  out.p = m + m * drs + r2s;
  out.q = (m - 1) * (1 + drs) + r2s;
  out.q_inv = drs + m * D * D * S - 1;
  const Rational third(1, 3);
  switch (m) {
    case 1:
      out.eta = third * Rational(S * (-1 + D * D + 2 * D * R + 2 * R * R - R * (D + R) * S), out.p);
      break;
    case 2:
      out.eta =
          third * Rational(S * (-2 + 2 * D * D + 2 * D * R + R * R - R * (2 * D + R) * S), out.p);
      break;
    default:
      out.eta = third * Rational(-2 - S * (3 - 3 * D * D + R * (3 * D + R) * S), out.p);
      break;
  }
  out.c = Rational(4 - m * D * D * S, out.p);
  return out;
}

FamilyResult attach_family(int m, std::int64_t r, std::int64_t s, std::int64_t d) {
  FamilyResult out;
  out.chain = family_attach_chain(m, r, s, d);
  out.closed_form = family_closed_form(m, r, s, d);

  const CyclicQuotient g = chain_to_quotient(out.chain);
  const std::size_t k = out.chain.size();
  ResolutionConfiguration cfg(g, {Interval{static_cast<std::size_t>(m), k - 1}});
  if (cfg.chain() != out.chain) {
    throw Error(ErrorCode::Mismatch, "attach chain " + out.chain.str() +
                                         " is not the HJ string of " + g.str());
  }
  out.report = c_invariant(cfg);

  const FamilyClosedForm& cf = out.closed_form;
  auto mismatch = [&](const std::string& what, const std::string& got, const std::string& want) {
    throw Error(ErrorCode::Mismatch, "family m=" + std::to_string(m) + " r=" + std::to_string(r) +
                                         " s=" + std::to_string(s) + " d=" + std::to_string(d) +
                                         ": " + what + " pipeline " + got + " closed form " +
                                         want);
  };
  if (out.report.p != cf.p) mismatch("p", out.report.p.str(), cf.p.str());
  if (out.report.q != cf.q) mismatch("q", out.report.q.str(), cf.q.str());
  if (out.report.q_inv != cf.q_inv) mismatch("q_inv", out.report.q_inv.str(), cf.q_inv.str());
  if (out.report.eta != cf.eta) mismatch("eta", out.report.eta.str(), cf.eta.str());
  if (out.report.c_value != cf.c) mismatch("C", out.report.c_value.str(), cf.c.str());
  if (out.report.b2 != s - 1 + m) {
    mismatch("b2", std::to_string(out.report.b2), std::to_string(s - 1 + m));
  }
  return out;
}

ResolutionChain family_minimal_graph(int m, std::int64_t r, std::int64_t s) {
  if (r < 2) throw Error(ErrorCode::InvalidTypeT, "r must be at least 2, got " + std::to_string(r));
  auto twos = [](std::int64_t n) { return std::vector<std::int64_t>(static_cast<std::size_t>(n), 2); };
  std::vector<std::int64_t> out;
  if (m == 1 && s == 1) {
    out = twos(r - 1);
    out.push_back(r + 2);
  } else if (m == 1 && s == 2) {
    out = twos(r - 1);
    out.insert(out.end(), {3, r + 1});
  } else if (m == 1 && s == 3) {
    out = twos(r - 1);
    out.insert(out.end(), {3, 2, r + 1});
  } else if (m == 2 && s == 1) {
    out = twos(r);
    out.push_back(r + 2);
  } else if (m == 3 && s == 1) {
    out = twos(r + 1);
    out.push_back(r + 2);
  } else {
    throw Error(ErrorCode::UnsupportedFamily, "no listed graph for m=" + std::to_string(m) +
                                                  " s=" + std::to_string(s));
  }
  return ResolutionChain(std::move(out));
}

namespace {

/// The d = 1 attach configuration read in the reversed presentation, where
/// the type T substring comes first and the (-2)-curves last.
InvariantReport reversed_family_row(int m, std::int64_t r, std::int64_t s, const BigInt& p,
                                    const BigInt& q) {
  const ResolutionChain attach = family_attach_chain(m, r, s, 1);
  const CyclicQuotient g(p, q);
  const std::size_t k = attach.size();
  ResolutionConfiguration cfg(g, {Interval{0, k - 1 - static_cast<std::size_t>(m)}});
  if (cfg.chain() != reverse_chain(attach)) {
    throw Error(ErrorCode::Mismatch, g.str() + " resolves to " + cfg.chain().str() +
                                         ", expected the reverse of " + attach.str());
  }
  return c_invariant(cfg);
}

}  // namespace

std::vector<TheoremRow> theorem_tables(std::int64_t r_max) {
  std::vector<TheoremRow> rows;
  for (auto [p, q] : {std::pair{3, 1}, std::pair{5, 2}, std::pair{7, 3}}) {
    rows.push_back({"theorem1", 0,
                    c_invariant(ResolutionConfiguration::artin(CyclicQuotient(p, q)))});
  }
  struct Family {
    const char* name;
    int m;
    std::int64_t s;
    BigInt (*p)(const BigInt&);
    BigInt (*q)(const BigInt&);
  };
  const Family families[] = {
      {"exthm2(1)", 1, 1, [](const BigInt& r) -> BigInt { return r * r + r + 1; },
       [](const BigInt& r) -> BigInt { return r; }},
      {"exthm2(2a)", 2, 1, [](const BigInt& r) -> BigInt { return r * r + 2 * r + 2; },
       [](const BigInt& r) -> BigInt { return r + 1; }},
      {"exthm2(2b)", 1, 2, [](const BigInt& r) -> BigInt { return 2 * r * r + 2 * r + 1; },
       [](const BigInt& r) -> BigInt { return 2 * r + 1; }},
      {"exthm2(3a)", 3, 1, [](const BigInt& r) -> BigInt { return r * r + 3 * r + 3; },
       [](const BigInt& r) -> BigInt { return r + 2; }},
      {"exthm2(3b)", 1, 3, [](const BigInt& r) -> BigInt { return 3 * r * r + 3 * r + 1; },
       [](const BigInt& r) -> BigInt { return 3 * r + 2; }},
  };
  for (const Family& f : families) {
    for (std::int64_t r = 2; r <= r_max; ++r) {
      const BigInt rb(r);
      rows.push_back({f.name, r, reversed_family_row(f.m, r, f.s, f.p(rb), f.q(rb))});
    }
  }
  return rows;
}

}  // namespace singlab
