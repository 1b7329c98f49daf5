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

#include <gtest/gtest.h>

#include <functional>

#include "oracles.hpp"
#include "singlab/error.hpp"
#include "singlab/hjres.hpp"

namespace singlab {
namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::Mismatch;
}

TEST(CyclicQuotient, RejectsInvalidGroups) {
  EXPECT_EQ(code_of([] { CyclicQuotient(1, 0); }), ErrorCode::InvalidQuotient);
  EXPECT_EQ(code_of([] { CyclicQuotient(6, 4); }), ErrorCode::InvalidQuotient);
  EXPECT_EQ(code_of([] { CyclicQuotient(5, 5); }), ErrorCode::InvalidQuotient);
  EXPECT_EQ(code_of([] { CyclicQuotient(5, 0); }), ErrorCode::InvalidQuotient);
  EXPECT_EQ(CyclicQuotient(7, 3).q_inverse(), 5);
  EXPECT_EQ(CyclicQuotient(7, 3).str(), "1/7(1,3)");
}

TEST(HjResolve, Examples) {
  EXPECT_EQ(hj_resolve(CyclicQuotient(5, 2)), (ResolutionChain{3, 2}));
  EXPECT_EQ(hj_resolve(CyclicQuotient(3, 1)), (ResolutionChain{3}));
  EXPECT_EQ(hj_resolve(CyclicQuotient(7, 3)), (ResolutionChain{3, 2, 2}));
  EXPECT_EQ(hj_resolve(CyclicQuotient(7, 4)), (ResolutionChain{2, 4}));
}

TEST(HjResolve, SU2SeriesIsAllTwos) {
  for (std::int64_t p = 2; p <= 50; ++p) {
    const ResolutionChain chain = hj_resolve(CyclicQuotient(p, p - 1));
    EXPECT_EQ(chain, ResolutionChain(std::vector<std::int64_t>(p - 1, 2)));
    EXPECT_EQ(cf_eval(chain.entries()), Rational(BigInt(p - 1), BigInt(p)));
  }
}

TEST(HjResolve, MatchesBruteForceSearch) {
  for (std::int64_t p = 2; p <= 40; ++p) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto chain = hj_resolve(CyclicQuotient(p, q));
      const std::vector<std::int64_t> got(chain.entries().begin(), chain.entries().end());
      EXPECT_EQ(got, oracle::brute_force_hj(p, q)) << p << "," << q;
    }
  }
}

TEST(HjResolve, RoundTripAndReversalDuality) {
  for (std::int64_t p = 2; p <= 200; ++p) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const CyclicQuotient g(p, q);
      const ResolutionChain chain = hj_resolve(g);
      ASSERT_TRUE(chain.is_minimal());
      ASSERT_EQ(cf_eval(chain.entries()), Rational(BigInt(q), BigInt(p)));
      ASSERT_EQ(chain_to_quotient(chain), g);
      ASSERT_EQ(hj_resolve(g.inverse_presentation()), reverse_chain(chain));
    }
  }
}

TEST(ChainToQuotient, ExamplesAndErrors) {
  EXPECT_EQ(chain_to_quotient({2, 4}), CyclicQuotient(7, 4));
  EXPECT_EQ(chain_to_quotient({3}), CyclicQuotient(3, 1));
  EXPECT_EQ(chain_to_quotient({2, 2, 4}), CyclicQuotient(10, 7));
  EXPECT_EQ(code_of([] { chain_to_quotient({1, 4}); }), ErrorCode::NonMinimalChain);
  EXPECT_EQ(code_of([] { chain_to_quotient(ResolutionChain{}); }), ErrorCode::EmptyChain);
}

TEST(ReverseChain, Examples) {
  EXPECT_EQ(reverse_chain({3, 2}), (ResolutionChain{2, 3}));
  EXPECT_EQ(reverse_chain({4}), (ResolutionChain{4}));
  const ResolutionChain reversed = reverse_chain({3, 2, 2});
  EXPECT_EQ(reversed, (ResolutionChain{2, 2, 3}));
  EXPECT_EQ(chain_to_quotient(reversed), CyclicQuotient(7, 5));
}

TEST(ParseChain, AcceptsBothSpellings) {
  EXPECT_EQ(parse_chain("3,2,2"), (ResolutionChain{3, 2, 2}));
  EXPECT_EQ(parse_chain("(5, 2)"), (ResolutionChain{5, 2}));
  EXPECT_THROW(parse_chain("3,,2"), Error);
  EXPECT_THROW(parse_chain("x"), Error);
  EXPECT_THROW(parse_chain(""), Error);
}

TEST(BlowUp, Examples) {
  EXPECT_EQ(blow_up({3}, OnCurve{0, Side::Left}), (ResolutionChain{1, 4}));
  EXPECT_EQ(blow_up({1, 4}, OnCurve{0, Side::Left}), (ResolutionChain{1, 2, 4}));
  EXPECT_EQ(blow_up({1, 5}, OnCurve{0, Side::Left}), (ResolutionChain{1, 2, 5}));
  EXPECT_EQ(blow_up({1, 5}, AtNode{0}), (ResolutionChain{2, 1, 6}));
  EXPECT_EQ(blow_up({3, 2}, OnCurve{1, Side::Right}), (ResolutionChain{3, 3, 1}));
}

TEST(BlowUp, IndexErrors) {
  EXPECT_EQ(code_of([] { blow_up({3}, OnCurve{1, Side::Left}); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([] { blow_up({3}, AtNode{0}); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([] { blow_up({3, 2}, AtNode{1}); }), ErrorCode::IndexOutOfRange);
}

TEST(BlowDown, ExamplesAndErrors) {
  EXPECT_EQ(blow_down({1, 4}, 0), (ResolutionChain{3}));
  EXPECT_EQ(blow_down({2, 1, 6}, 1), (ResolutionChain{1, 5}));
  EXPECT_EQ(blow_down({3, 1, 3}, 1), (ResolutionChain{2, 2}));
  EXPECT_EQ(code_of([] { blow_down({3, 2}, 0); }), ErrorCode::NotMinusOneCurve);
  EXPECT_EQ(code_of([] { blow_down({1}, 3); }), ErrorCode::IndexOutOfRange);
}

void for_each_chain(std::size_t max_len, std::int64_t lo, std::int64_t hi,
                    const std::function<void(const ResolutionChain&)>& fn) {
  std::vector<std::int64_t> entries;
  std::function<void()> rec = [&] {
    if (!entries.empty()) fn(ResolutionChain(entries));
    if (entries.size() == max_len) return;
    for (std::int64_t e = lo; e <= hi; ++e) {
      entries.push_back(e);
      rec();
      entries.pop_back();
    }
  };
  rec();
}

TEST(BlowUp, BlowDownUndoesEveryBlowUp) {
  std::size_t checked = 0;
  for_each_chain(6, 1, 6, [&](const ResolutionChain& c) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (Side side : {Side::Left, Side::Right}) {
        const bool free = side == Side::Left ? i == 0 : i + 1 == c.size();
        if (!free) {
          ASSERT_EQ(code_of([&] { blow_up(c, OnCurve{i, side}); }), ErrorCode::IndexOutOfRange);
          continue;
        }
        const ResolutionChain up = blow_up(c, OnCurve{i, side});
        const std::size_t fresh = side == Side::Left ? i : i + 1;
        ASSERT_EQ(up[fresh], 1);
        ASSERT_EQ(blow_down(up, fresh), c);
        ++checked;
      }
      if (i + 1 < c.size()) {
        ASSERT_EQ(blow_down(blow_up(c, AtNode{i}), i + 1), c);
        ++checked;
      }
    }
  });
  EXPECT_GT(checked, 250000u);
}

TEST(BlowDown, InteriorBlowDownPreservesBracket) {
  std::size_t checked = 0;
  for_each_chain(6, 1, 6, [&](const ResolutionChain& c) {
    for (std::size_t i = 1; i + 1 < c.size(); ++i) {
      if (c[i] != 1 || c[i - 1] < 2 || c[i + 1] < 2) continue;
      Rational before, after;
      try {
        before = cf_eval(c.entries());
        after = cf_eval(blow_down(c, i).entries());
      } catch (const Error&) {
        continue;
      }
      ASSERT_EQ(before, after) << c.str();
      ++checked;
    }
  });
  EXPECT_GT(checked, 1000u);
}

TEST(NonMinimalGraph, ListedGraphs) {
  EXPECT_EQ(non_minimal_graph(3), (ResolutionChain{1, 4}));
  EXPECT_EQ(non_minimal_graph(4), (ResolutionChain{1, 2, 5}));
  EXPECT_EQ(non_minimal_graph(6), (ResolutionChain{1, 2, 2, 2, 7}));
  EXPECT_EQ(code_of([] { non_minimal_graph(2); }), ErrorCode::InvalidN);
}

TEST(NonMinimalGraph, ExplicitBlowUpSequence) {
  for (std::int64_t n = 3; n <= 10; ++n) {
    ResolutionChain chain{n};
    chain = blow_up(chain, OnCurve{0, Side::Left});
    for (std::int64_t step = 1; step < n - 2; ++step) {
      chain = blow_up(chain, OnCurve{0, Side::Left});
    }
    std::vector<std::int64_t> expected{1};
    expected.insert(expected.end(), static_cast<std::size_t>(n - 3), 2);
    expected.push_back(n + 1);
    EXPECT_EQ(chain, ResolutionChain(expected));
    EXPECT_EQ(non_minimal_graph(n), chain);
    // Contracting the (-1)-curves back recovers (n).
    while (chain.size() > 1) chain = blow_down(chain, 0);
    EXPECT_EQ(chain, ResolutionChain{n});
  }
}

}  // namespace
}  // namespace singlab
