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

#include <cstdint>
#include <vector>

#include "sumbench/tensor.h"

namespace sumbench::tensor {

struct AdamState {
  std::int64_t step = 0;
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  std::vector<std::vector<double>> m;  // first moments, one per parameter
  std::vector<std::vector<double>> v;  // second moments

  // Throws kInvalidArgument for betas outside (0, 1), epsilon <= 0 or a
  // negative learning rate.
  void Validate() const;
};

// One bias-corrected Adam update of every parameter, then zeroes the
// gradients. Moments are allocated on the first call. Throws kMissingGrad
// when a parameter has no gradient buffer.
void AdamStep(std::vector<Tensor>& params, AdamState& state);

// Global L2 norm of all gradients.
double GradNorm(const std::vector<Tensor>& params);

// Rescales all gradients so their global norm is at most max_norm. Returns
// the norm before clipping. max_norm <= 0 disables clipping.
double ClipGradNorm(std::vector<Tensor>& params, double max_norm);

void ZeroGrads(std::vector<Tensor>& params);

}  // namespace sumbench::tensor
