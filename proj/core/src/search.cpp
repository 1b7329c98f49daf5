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

#include "singlab/search.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

#include "singlab/error.hpp"

namespace singlab {

std::optional<SearchMode> parse_search_mode(std::string_view text) {
  if (text == "artin-only") return SearchMode::ArtinOnly;
  if (text == "single-contraction") return SearchMode::SingleContraction;
  if (text == "multi-contraction") return SearchMode::MultiContraction;
  return std::nullopt;
}

std::optional<OutputFormat> parse_output_format(std::string_view text) {
  if (text == "table") return OutputFormat::Table;
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  return std::nullopt;
}

std::uint64_t row_limit_from_env() {
  const char* raw = std::getenv("SINGLAB_ROW_LIMIT");
  if (raw == nullptr) return kDefaultRowLimit;
  std::string_view text(raw);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
    return kDefaultRowLimit;
  }
  return value;
}

std::vector<Contraction> type_t_substrings(const ResolutionChain& chain) {
  // Necessary conditions, both preserved by the moves: the entry sum is
  // 3 l + 2 - s with s >= 1, and at least one end entry is >= 3.
  std::vector<std::int64_t> prefix(chain.size() + 1, 0);
  for (std::size_t i = 0; i < chain.size(); ++i) prefix[i + 1] = prefix[i] + chain[i];
  std::vector<Contraction> out;
  for (std::size_t first = 0; first < chain.size(); ++first) {
    for (std::size_t last = first; last < chain.size(); ++last) {
      const auto len = static_cast<std::int64_t>(last - first + 1);
      const std::int64_t excess = prefix[last + 1] - prefix[first] - 3 * len;
      if (excess > 1) continue;
      if (chain[first] < 3 && chain[last] < 3) continue;
      if (auto params = recognize_type_t(chain.slice(first, last))) {
        out.push_back({Interval{first, last}, *params});
      }
    }
  }
  return out;
}

namespace {

void collect_disjoint(const CyclicQuotient& g, const std::vector<Contraction>& pool,
                      std::size_t start, std::size_t max_size, std::vector<Interval>& picked,
                      std::vector<ResolutionConfiguration>& out) {
  for (std::size_t i = start; i < pool.size(); ++i) {
    if (!picked.empty() && pool[i].interval.first <= picked.back().last) continue;
    picked.push_back(pool[i].interval);
    out.emplace_back(g, picked);
    if (picked.size() < max_size) collect_disjoint(g, pool, i + 1, max_size, picked, out);
    picked.pop_back();
  }
}

}  // namespace

std::vector<ResolutionConfiguration> configurations(const CyclicQuotient& g, SearchMode mode,
                                                    std::size_t max_contractions) {
  std::vector<ResolutionConfiguration> out;
  out.push_back(ResolutionConfiguration::artin(g));
  if (mode == SearchMode::ArtinOnly) return out;
  const std::vector<Contraction> pool = type_t_substrings(out.front().chain());
  const std::size_t limit = mode == SearchMode::SingleContraction ? 1 : max_contractions;
  if (limit == 0) return out;
  std::vector<Interval> picked;
  collect_disjoint(g, pool, 0, limit, picked, out);
  return out;
}

std::vector<InvariantReport> scan(const SearchQuery& query) {
  if (query.p_max < 2) {
    throw Error(ErrorCode::InvalidArgument,
                "p_max must be at least 2, got " + std::to_string(query.p_max));
  }
  const std::int64_t first_p = 2;
  const auto block_count = static_cast<std::size_t>(query.p_max - first_p + 1);
  // One block per group order; workers pull the next order from a counter.
  std::vector<std::vector<InvariantReport>> blocks(block_count);
  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> emitted{0};
  std::atomic<bool> stop{false};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    try {
      for (std::size_t b = next++; b < block_count && !stop; b = next++) {
        const std::int64_t p = first_p + static_cast<std::int64_t>(b);
        std::vector<InvariantReport>& rows = blocks[b];
        for (std::int64_t q = 1; q < p && !stop; ++q) {
          if (std::gcd(p, q) != 1) continue;
          const CyclicQuotient g(p, q);
          if (query.dedup_conjugate && g.q_inverse() < g.q()) continue;
          for (const auto& cfg : configurations(g, query.mode, query.max_contractions)) {
            InvariantReport report = c_invariant(cfg);
            if (query.positive_only && !report.positive) continue;
            if (++emitted > query.row_limit) {
              throw Error(ErrorCode::RowLimitExceeded,
                          "scan exceeded the row limit of " + std::to_string(query.row_limit));
            }
            rows.push_back(std::move(report));
          }
        }
      }
    } catch (...) {
      stop = true;
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  const unsigned workers = std::max(1u, query.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<InvariantReport> out;
  out.reserve(emitted.load());
  for (auto& block : blocks) {
    std::move(block.begin(), block.end(), std::back_inserter(out));
  }
  std::sort(out.begin(), out.end(), report_less);
  return out;
}

}  // namespace singlab
