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

#include "sumbench/training.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sumbench/optim.h"

namespace sumbench::transformer {

DivergedLoss::DivergedLoss(std::vector<double> history, std::size_t step)
    : Error(ErrorCode::kDivergedLoss, "non-finite loss at step " + std::to_string(step)),
      history_(std::move(history)) {}

TrainResult TrainModel(TransformerModel& model, std::span<const SeqPair> pairs,
                       const TrainConfig& train, const ProgressFn& progress) {
  if (pairs.empty()) throw Error(ErrorCode::kEmptyTrainingSet, "no training pairs");
  if (train.batch_size == 0) throw Error(ErrorCode::kInvalidArgument, "batch_size must be positive");

  const std::uint64_t seed = model.config().seed;
  Rng order_rng(MixSeed(seed, 1));
  Rng dropout_rng(MixSeed(seed, 2));

  std::vector<tensor::Tensor> params = model.Parameters();
  for (auto& p : params) p.ZeroGrad();
  tensor::AdamState adam;
  adam.learning_rate = train.learning_rate;
  adam.Validate();

  std::vector<std::size_t> order(pairs.size());
  std::iota(order.begin(), order.end(), 0);
  std::size_t cursor = order.size();

  TrainResult result;
  result.loss_history.reserve(train.steps);
  std::vector<const SeqPair*> chosen;
  for (std::size_t step = 0; step < train.steps; ++step) {
    chosen.clear();
    while (chosen.size() < std::min(train.batch_size, pairs.size())) {
      if (cursor == order.size()) {
        order_rng.Shuffle(order);
        cursor = 0;
      }
      chosen.push_back(&pairs[order[cursor++]]);
    }
    const Batch batch = MakeBatch(chosen, model.config().max_len);

    tensor::Tape::Current().Clear();
    const tensor::Tensor logits = model.ForwardBatch(batch, true, &dropout_rng);
    const tensor::Tensor loss = tensor::CrossEntropyLoss(logits, batch.tgt_out, Vocabulary::kPad);
    const double value = loss.item();
    if (!std::isfinite(value)) {
      tensor::Tape::Current().Clear();
      throw DivergedLoss(result.loss_history, step);
    }
    result.loss_history.push_back(value);
    tensor::Backward(loss);
    tensor::ClipGradNorm(params, train.grad_clip);

    adam.learning_rate = train.learning_rate;
    if (train.warmup_steps > 0 && step < train.warmup_steps) {
      adam.learning_rate *= static_cast<double>(step + 1) / static_cast<double>(train.warmup_steps);
    }
    tensor::AdamStep(params, adam);
    if (progress) progress(step, value);
  }
  return result;
}

double EvaluateLoss(const TransformerModel& model, std::span<const SeqPair> pairs,
                    std::size_t batch_size) {
  if (pairs.empty()) throw Error(ErrorCode::kEmptyTrainingSet, "no pairs to evaluate");
  tensor::NoGradGuard no_grad;
  double total = 0.0;
  std::size_t tokens = 0;
  std::vector<const SeqPair*> chosen;
  for (std::size_t start = 0; start < pairs.size(); start += batch_size) {
    chosen.clear();
    for (std::size_t i = start; i < std::min(pairs.size(), start + batch_size); ++i) {
      chosen.push_back(&pairs[i]);
    }
    const Batch batch = MakeBatch(chosen, model.config().max_len);
    const tensor::Tensor logits = model.ForwardBatch(batch, false);
    const std::size_t count = static_cast<std::size_t>(
        std::count_if(batch.tgt_out.begin(), batch.tgt_out.end(),
                      [](TokenId id) { return id != Vocabulary::kPad; }));
    total += tensor::CrossEntropyLoss(logits, batch.tgt_out, Vocabulary::kPad).item() *
             static_cast<double>(count);
    tokens += count;
  }
  return total / static_cast<double>(tokens);
}

}  // namespace sumbench::transformer
