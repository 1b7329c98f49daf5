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

#include <algorithm>
#include <functional>
#include <numeric>

#include <functional>
#include <map>
#include <set>

#include "oracles.hpp"
#include "singlab/error.hpp"
#include "singlab/type_t.hpp"

namespace singlab {
namespace {

Rational frac(std::int64_t n, std::int64_t d) { return Rational(BigInt(n), BigInt(d)); }

TEST(TypeTParams, CanonicalizesAndValidates) {
  EXPECT_EQ(TypeTParams(3, 1, 4), TypeTParams(3, 1, 1));
  EXPECT_EQ(TypeTParams(5, 2, -1).d(), 4);
  EXPECT_THROW(TypeTParams(1, 1, 1), Error);
  EXPECT_THROW(TypeTParams(2, 0, 1), Error);
  EXPECT_THROW(TypeTParams(4, 1, 2), Error);
  EXPECT_THROW(TypeTParams(3, 1, 3), Error);
  EXPECT_EQ(TypeTParams(3, 1, 2).str(), "T(3,1,2)");
}

TEST(TypeTGroup, Examples) {
  EXPECT_EQ(type_t_group(TypeTParams(2, 1, 1)), CyclicQuotient(4, 1));
  EXPECT_EQ(type_t_group(TypeTParams(3, 1, 1)), CyclicQuotient(9, 2));
  EXPECT_EQ(type_t_group(TypeTParams(2, 2, 1)), CyclicQuotient(8, 3));
}

TEST(TypeTString, Examples) {
  EXPECT_EQ(type_t_string(TypeTParams(2, 1, 1)), (ResolutionChain{4}));
  EXPECT_EQ(type_t_string(TypeTParams(3, 1, 1)), (ResolutionChain{5, 2}));
  EXPECT_EQ(type_t_string(TypeTParams(3, 1, 2)), (ResolutionChain{2, 5}));
  EXPECT_EQ(type_t_string(TypeTParams(2, 2, 1)), (ResolutionChain{3, 3}));
  EXPECT_EQ(type_t_string(TypeTParams(5, 1, 2)), (ResolutionChain{3, 5, 2}));
}

TEST(TypeTString, SeedsAndMoves) {
  EXPECT_EQ(type_t_seed(1), (ResolutionChain{4}));
  EXPECT_EQ(type_t_seed(2), (ResolutionChain{3, 3}));
  EXPECT_EQ(type_t_seed(4), (ResolutionChain{3, 2, 2, 3}));
  EXPECT_EQ(apply_move({4}, TMove::Right), (ResolutionChain{5, 2}));
  EXPECT_EQ(apply_move({4}, TMove::Left), (ResolutionChain{2, 5}));
  EXPECT_EQ(apply_move({5, 2}, TMove::Left), (ResolutionChain{2, 5, 3}));
}

TEST(TypeTString, ReachableFromSeedAlongMovePath) {
  for (std::int64_t r = 2; r <= 20; ++r) {
    for (std::int64_t s = 1; s <= 6; ++s) {
      for (std::int64_t d = 1; d < r; ++d) {
        if (std::gcd(r, d) != 1) continue;
        const TypeTParams t(r, s, d);
        ASSERT_EQ(type_t_string_by_moves(t), type_t_string(t)) << t.str();
      }
    }
  }
}

TEST(TypeTString, MovePathLength) {
  // r - 2 moves for the extremal d, fewer otherwise.
  EXPECT_EQ(move_path(TypeTParams(7, 1, 1)).size(), 5u);
  EXPECT_EQ(move_path(TypeTParams(7, 1, 6)).size(), 5u);
  EXPECT_EQ(move_path(TypeTParams(5, 1, 2)).size(), 2u);
  EXPECT_EQ(move_path(TypeTParams(2, 3, 1)).size(), 0u);
}

TEST(TypeTString, LengthAndSumIdentities) {
  for (std::int64_t r = 2; r <= 20; ++r) {
    for (std::int64_t s = 1; s <= 6; ++s) {
      for (std::int64_t d = 1; d < r; ++d) {
        if (std::gcd(r, d) != 1) continue;
        const TypeTParams t(r, s, d);
        const ResolutionChain chain = type_t_string(t);
        const auto len = static_cast<std::int64_t>(chain.size());
        // Holds for every d.
        EXPECT_EQ(chain.sum(), 3 * len + 2 - s) << t.str();
        EXPECT_EQ(len, static_cast<std::int64_t>(move_path(t).size()) + s) << t.str();
        if (d == 1 || d == r - 1) {
          const auto inv = importprop_invariants(t);
          EXPECT_EQ(len, inv.length) << t.str();
          EXPECT_EQ(chain.sum(), inv.sum) << t.str();
        }
      }
    }
  }
}

TEST(TypeTString, IntermediateDHasShorterString) {
  // T(5,1,2) = 1/25(1,9) resolves to (3,5,2): length 3, not r + s - 2 = 4.
  const TypeTParams t(5, 1, 2);
  EXPECT_EQ(type_t_string(t).size(), 3u);
  EXPECT_EQ(importprop_invariants(t).length, 4);
}

TEST(EnumerateTypeT, Examples) {
  const auto two = enumerate_type_t(2, 1);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0].params, TypeTParams(2, 1, 1));
  EXPECT_EQ(two[0].chain, (ResolutionChain{4}));

  auto three = enumerate_type_t(3, 1);
  std::erase_if(three, [](const TypeTEntry& e) { return e.params.r() != 3; });
  ASSERT_EQ(three.size(), 2u);
  EXPECT_EQ(three[0].params, TypeTParams(3, 1, 1));
  EXPECT_EQ(three[0].chain, (ResolutionChain{5, 2}));
  EXPECT_EQ(three[1].params, TypeTParams(3, 1, 2));
  EXPECT_EQ(three[1].chain, (ResolutionChain{2, 5}));

  auto four = enumerate_type_t(4, 1);
  std::erase_if(four, [](const TypeTEntry& e) { return e.params.r() != 4; });
  ASSERT_EQ(four.size(), 2u);
  EXPECT_EQ(four[0].chain, (ResolutionChain{6, 2, 2}));
  EXPECT_EQ(four[1].chain, (ResolutionChain{2, 2, 6}));
}

TEST(EnumerateTypeT, PhiStringsPerCellAndRoundTrip) {
  const auto entries = enumerate_type_t(12, 6);
  std::map<std::pair<std::int64_t, std::int64_t>, std::set<ResolutionChain>> cells;
  for (const auto& e : entries) {
    cells[{e.params.r(), e.params.s()}].insert(e.chain);
    EXPECT_EQ(recognize_type_t(e.chain), e.params);
    EXPECT_EQ(type_t_string(e.params), e.chain);
    EXPECT_EQ(type_t_string(conjugate(e.params)), reverse_chain(e.chain));
  }
  for (std::int64_t r = 2; r <= 12; ++r) {
    for (std::int64_t s = 1; s <= 6; ++s) {
      EXPECT_EQ(static_cast<std::int64_t>(cells[{r, s}].size()), oracle::brute_phi(r))
          << r << "," << s;
    }
  }
}

TEST(EnumerateTypeT, IsSortedAndDeterministic) {
  const auto a = enumerate_type_t(9, 3);
  EXPECT_TRUE(std::is_sorted(a.begin(), a.end(), [](const auto& x, const auto& y) {
    return x.params < y.params;
  }));
  EXPECT_EQ(a, enumerate_type_t(9, 3));
  EXPECT_TRUE(enumerate_type_t(1, 3).empty());
}

TEST(RecognizeTypeT, Examples) {
  EXPECT_EQ(recognize_type_t({4}), TypeTParams(2, 1, 1));
  EXPECT_EQ(recognize_type_t({3, 3}), TypeTParams(2, 2, 1));
  EXPECT_EQ(recognize_type_t({3, 2}), std::nullopt);
  EXPECT_EQ(recognize_type_t({2, 2, 2}), std::nullopt);
  EXPECT_EQ(recognize_type_t({2, 5, 3}), TypeTParams(5, 1, 3));
  EXPECT_THROW(recognize_type_t({1, 4}), Error);
}

TEST(RecognizeTypeT, MethodsAgreeExhaustively) {
  std::size_t recognized = 0;
  std::size_t total = 0;
  std::vector<std::int64_t> entries;
  std::function<void()> rec = [&] {
    if (!entries.empty()) {
      const ResolutionChain c(entries);
      const auto a = recognize_type_t_arithmetic(c);
      const auto b = recognize_type_t_peeling(c);
      ASSERT_EQ(a, b) << c.str();
      recognized += a.has_value();
      ++total;
    }
    if (entries.size() == 6) return;
    for (std::int64_t e = 2; e <= 8; ++e) {
      entries.push_back(e);
      rec();
      entries.pop_back();
    }
  };
  rec();
  EXPECT_EQ(total, 137256u);
  EXPECT_GT(recognized, 100u);
}

TEST(ImportpropInvariants, Examples) {
  auto a = importprop_invariants(TypeTParams(3, 1, 1));
  EXPECT_EQ(a.length, 2);
  EXPECT_EQ(a.sum, 7);
  EXPECT_EQ(a.eta, frac(16, 27));
  EXPECT_EQ(a.c, frac(4, 9));

  auto b = importprop_invariants(TypeTParams(2, 1, 1));
  EXPECT_EQ(b.length, 1);
  EXPECT_EQ(b.sum, 4);
  EXPECT_EQ(b.eta, frac(1, 2));
  EXPECT_EQ(b.c, Rational(1));

  auto c = importprop_invariants(TypeTParams(2, 3, 1));
  EXPECT_EQ(c.length, 3);
  EXPECT_EQ(c.sum, 8);
  EXPECT_EQ(c.eta, frac(-1, 18));
  EXPECT_EQ(c.c, frac(1, 3));
  EXPECT_EQ(type_t_string(TypeTParams(2, 3, 1)), (ResolutionChain{3, 2, 3}));
}

TEST(Conjugate, Examples) {
  EXPECT_EQ(conjugate(TypeTParams(3, 1, 1)), TypeTParams(3, 1, 2));
  EXPECT_EQ(conjugate(TypeTParams(2, 4, 1)), TypeTParams(2, 4, 1));
  const TypeTParams t(5, 1, 2);
  EXPECT_EQ(conjugate(t), TypeTParams(5, 1, 3));
  EXPECT_EQ(type_t_string(conjugate(t)), reverse_chain(type_t_string(t)));
  EXPECT_EQ(hj_resolve(CyclicQuotient(25, 14)), reverse_chain(hj_resolve(CyclicQuotient(25, 9))));
}

}  // namespace
}  // namespace singlab
