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

#include "sumbench/extractive.h"
#include "sumbench/textproc.h"

namespace {

const std::string& Article() {
  static const std::string text = [] {
    std::string s;
    for (int i = 0; i < 40; ++i) {
      s += "Retail sales rose by 2.1% in November, the statistics office said on Tuesday. ";
      s += "Shoppers weren't deterred by higher prices, and analysts expect spending to keep "
           "growing into the new year. ";
    }
    return s;
  }();
  return text;
}

void BM_PorterStem(benchmark::State& state) {
  const char* words[] = {"generalizations", "relational", "hopefulness", "running", "agreed"};
  for (auto _ : state) {
    for (const char* w : words) benchmark::DoNotOptimize(sumbench::textproc::PorterStem(w));
  }
}
BENCHMARK(BM_PorterStem);

void BM_PreprocessArticle(benchmark::State& state) {
  const auto config = sumbench::textproc::PipelineConfig::Full();
  for (auto _ : state) {
    benchmark::DoNotOptimize(sumbench::textproc::Preprocess(Article(), config));
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * Article().size()));
}
BENCHMARK(BM_PreprocessArticle);

void BM_TfidfScores(benchmark::State& state) {
  const auto config = sumbench::textproc::PipelineConfig::Full();
  const auto sentences = sumbench::textproc::SegmentSentences(Article());
  for (auto _ : state) {
    benchmark::DoNotOptimize(sumbench::TfidfSentenceScores(sentences, config));
  }
}
BENCHMARK(BM_TfidfScores);

void BM_GapSentenceScores(benchmark::State& state) {
  const auto config = sumbench::textproc::PipelineConfig::Full();
  const auto sentences = sumbench::textproc::SegmentSentences(Article());
  for (auto _ : state) {
    benchmark::DoNotOptimize(sumbench::GapSentenceScores(sentences, config));
  }
}
BENCHMARK(BM_GapSentenceScores);

}  // namespace
