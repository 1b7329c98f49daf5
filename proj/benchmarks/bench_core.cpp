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

#include <benchmark/benchmark.h>

#include "singlab/eta.hpp"
#include "singlab/hjres.hpp"
#include "singlab/search.hpp"
#include "singlab/type_t.hpp"

namespace {

using namespace singlab;

// q = p - 1 gives the longest chain, p - 1 entries.
void BM_HjResolve(benchmark::State& state) {
  const CyclicQuotient g(BigInt(state.range(0)), BigInt(state.range(0) - 1));
  for (auto _ : state) benchmark::DoNotOptimize(hj_resolve(g));
}
BENCHMARK(BM_HjResolve)->Arg(101)->Arg(1009)->Arg(10007);

void BM_EtaExact(benchmark::State& state) {
  const CyclicQuotient g(BigInt(state.range(0)), BigInt(3));
  for (auto _ : state) benchmark::DoNotOptimize(eta_exact(g));
}
BENCHMARK(BM_EtaExact)->Arg(101)->Arg(1009)->Arg(10007);

void BM_EtaCotangent(benchmark::State& state) {
  const CyclicQuotient g(BigInt(state.range(0)), BigInt(3));
  for (auto _ : state) benchmark::DoNotOptimize(eta_cotangent(g));
}
BENCHMARK(BM_EtaCotangent)->Arg(101)->Arg(1009)->Arg(10007);

void BM_EnumerateTypeT(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_type_t(state.range(0), 6));
}
BENCHMARK(BM_EnumerateTypeT)->Arg(8)->Arg(12);

void BM_Scan(benchmark::State& state) {
  SearchQuery query;
  query.p_max = state.range(0);
  query.mode = SearchMode::SingleContraction;
  for (auto _ : state) benchmark::DoNotOptimize(scan(query));
}
BENCHMARK(BM_Scan)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
