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
#include <optional>
#include <string_view>
#include <vector>

#include "singlab/components.hpp"

namespace singlab {

enum class SearchMode { ArtinOnly, SingleContraction, MultiContraction };
enum class OutputFormat { Table, Json, Csv };

inline constexpr std::uint64_t kDefaultRowLimit = 10'000'000;

struct SearchQuery {
  std::int64_t p_max = 2;
  SearchMode mode = SearchMode::ArtinOnly;
  bool positive_only = false;
  OutputFormat output_format = OutputFormat::Table;
  /// Upper bound on disjoint contractions per row in MultiContraction mode.
  std::size_t max_contractions = 3;
  /// Keep only the presentation with q <= q^{-1;p}.
  bool dedup_conjugate = false;
  /// Worker threads; output does not depend on this.
  unsigned workers = 1;
  std::uint64_t row_limit = kDefaultRowLimit;
};

std::optional<SearchMode> parse_search_mode(std::string_view text);
std::optional<OutputFormat> parse_output_format(std::string_view text);

/// SINGLAB_ROW_LIMIT when set to a positive integer, kDefaultRowLimit otherwise.
std::uint64_t row_limit_from_env();

/// Every interval of `chain` whose substring is a type T string.
std::vector<Contraction> type_t_substrings(const ResolutionChain& chain);

/// Artin plus, per mode, every single or every bounded disjoint set of type
/// T contractions of hj_resolve(g).
std::vector<ResolutionConfiguration> configurations(const CyclicQuotient& g, SearchMode mode,
                                                    std::size_t max_contractions = 3);

/// Reports for every coprime (p, q) with 2 <= p <= p_max, sorted by
/// (p, q, label). Throws Error(InvalidArgument) for p_max < 2 and
/// Error(RowLimitExceeded) once more than row_limit rows would be emitted.
std::vector<InvariantReport> scan(const SearchQuery& query);

}  // namespace singlab
