// Copyright 2026 The Sumbench Authors.
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

#include <string>

#include "sumbench/random.h"
#include "sumbench/rouge.h"

namespace {

sumbench::textproc::Tokens RandomTokens(sumbench::Rng& rng, std::size_t len, std::size_t alphabet) {
  sumbench::textproc::Tokens t(len);
  for (auto& w : t) w = "w" + std::to_string(rng.UniformIndex(alphabet));
  return t;
}

void BM_RougeN(benchmark::State& state) {
  sumbench::Rng rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto cand = RandomTokens(rng, n, 200);
  const auto ref = RandomTokens(rng, n, 200);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sumbench::rouge::RougeN(cand, ref, 2));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RougeN)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_RougeL(benchmark::State& state) {
  sumbench::Rng rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto cand = RandomTokens(rng, n, 200);
  const auto ref = RandomTokens(rng, n, 200);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sumbench::rouge::RougeL(cand, ref));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RougeL)->RangeMultiplier(4)->Range(16, 4096)->Complexity(benchmark::oNSquared);

}  // namespace
