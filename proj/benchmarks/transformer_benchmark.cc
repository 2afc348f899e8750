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

#include <vector>

#include "sumbench/decoding.h"
#include "sumbench/random.h"
#include "sumbench/tensor.h"
#include "sumbench/training.h"
#include "sumbench/transformer.h"

namespace {

using sumbench::TokenId;
using sumbench::transformer::ModelConfig;
using sumbench::transformer::TransformerModel;

ModelConfig BenchConfig(std::uint32_t d_model) {
  ModelConfig c;
  c.d_model = d_model;
  c.n_heads = 4;
  c.n_enc_layers = 2;
  c.n_dec_layers = 2;
  c.d_ff = 2 * d_model;
  c.vocab_size = 1000;
  c.max_len = 64;
  c.dropout_rate = 0.0;
  return c;
}

std::vector<TokenId> Ids(sumbench::Rng& rng, std::size_t len, std::uint32_t vocab) {
  std::vector<TokenId> ids(len);
  for (auto& id : ids) id = static_cast<TokenId>(5 + rng.UniformIndex(vocab - 5));
  return ids;
}

void BM_MatMul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = sumbench::tensor::Tensor::Full({n, n}, 0.5);
  const auto b = sumbench::tensor::Tensor::Full({n, n}, 0.25);
  sumbench::tensor::NoGradGuard no_grad;
  for (auto _ : state) benchmark::DoNotOptimize(sumbench::tensor::MatMul(a, b));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * 2 * n * n * n));
}
BENCHMARK(BM_MatMul)->RangeMultiplier(2)->Range(16, 256);

void BM_Forward(benchmark::State& state) {
  const TransformerModel model(BenchConfig(static_cast<std::uint32_t>(state.range(0))));
  sumbench::Rng rng(3);
  const auto src = Ids(rng, 48, 1000);
  const auto tgt = Ids(rng, 16, 1000);
  sumbench::tensor::NoGradGuard no_grad;
  for (auto _ : state) benchmark::DoNotOptimize(model.Forward(src, tgt, false));
}
BENCHMARK(BM_Forward)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_TrainStep(benchmark::State& state) {
  TransformerModel model(BenchConfig(32));
  sumbench::Rng rng(4);
  std::vector<sumbench::transformer::SeqPair> pairs;
  for (int i = 0; i < 8; ++i) pairs.emplace_back(Ids(rng, 48, 1000), Ids(rng, 16, 1000));
  sumbench::transformer::TrainConfig train;
  train.steps = 1;
  for (auto _ : state) sumbench::transformer::TrainModel(model, pairs, train);
}
BENCHMARK(BM_TrainStep)->Unit(benchmark::kMillisecond);

void BM_GreedyDecode(benchmark::State& state) {
  const TransformerModel model(BenchConfig(32));
  sumbench::Rng rng(5);
  const auto src = Ids(rng, 48, 1000);
  sumbench::transformer::DecodeOptions options;
  options.max_out = 32;
  if (state.range(0) > 1) {
    options.strategy = sumbench::transformer::DecodeStrategy::kBeam;
    options.beam_width = static_cast<std::size_t>(state.range(0));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(sumbench::transformer::DecodeSummary(model, src, options));
  }
}
BENCHMARK(BM_GreedyDecode)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
