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

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "sumbench/error.h"
#include "sumbench/transformer.h"

namespace sumbench::transformer {

struct TrainConfig {
  double learning_rate = 1e-3;
  std::size_t batch_size = 8;
  std::size_t steps = 1000;
  double grad_clip = 1.0;        // global-norm threshold; <= 0 disables clipping
  std::size_t warmup_steps = 0;  // linear learning-rate warmup
};

struct TrainResult {
  std::vector<double> loss_history;  // mean batch loss per step
};

// Raised when a step produces a non-finite loss; carries the losses so far.
class DivergedLoss : public Error {
 public:
  DivergedLoss(std::vector<double> history, std::size_t step);
  const std::vector<double>& history() const { return history_; }

 private:
  std::vector<double> history_;
};

using ProgressFn = std::function<void(std::size_t step, double loss)>;

// Adam with global-norm clipping on teacher-forced batches. Data order and
// dropout masks are drawn from streams derived from config.seed, so a run is
// a pure function of (initial model, pairs, train config). Throws
// kEmptyTrainingSet and DivergedLoss.
TrainResult TrainModel(TransformerModel& model, std::span<const SeqPair> pairs,
                       const TrainConfig& train, const ProgressFn& progress = {});

// Mean teacher-forced loss over the pairs, dropout off.
double EvaluateLoss(const TransformerModel& model, std::span<const SeqPair> pairs,
                    std::size_t batch_size = 32);

}  // namespace sumbench::transformer
