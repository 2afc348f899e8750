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

#include "sumbench/optim.h"

#include <cmath>

#include "sumbench/error.h"

namespace sumbench::tensor {

void AdamState::Validate() const {
  if (!(beta1 > 0.0 && beta1 < 1.0) || !(beta2 > 0.0 && beta2 < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "Adam betas must lie in (0, 1)");
  }
  if (!(epsilon > 0.0)) throw Error(ErrorCode::kInvalidArgument, "Adam epsilon must be positive");
  if (!(learning_rate >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "learning rate must be non-negative");
  }
}

void AdamStep(std::vector<Tensor>& params, AdamState& state) {
  state.Validate();
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (!params[i].has_grad()) {
      throw Error(ErrorCode::kMissingGrad, "parameter " + std::to_string(i) + " has no gradient");
    }
  }
  if (state.m.size() != params.size()) {
    state.m.assign(params.size(), {});
    state.v.assign(params.size(), {});
    for (std::size_t i = 0; i < params.size(); ++i) {
      state.m[i].assign(params[i].numel(), 0.0);
      state.v[i].assign(params[i].numel(), 0.0);
    }
  }
  ++state.step;
  const double t = static_cast<double>(state.step);
  const double c1 = 1.0 - std::pow(state.beta1, t);
  const double c2 = 1.0 - std::pow(state.beta2, t);
  for (std::size_t i = 0; i < params.size(); ++i) {
    auto& w = params[i].data();
    auto& g = params[i].grad();
    auto& m = state.m[i];
    auto& v = state.v[i];
    if (m.size() != w.size()) {
      throw Error(ErrorCode::kShapeMismatch, "Adam moments do not match parameter " + std::to_string(i));
    }
    for (std::size_t j = 0; j < w.size(); ++j) {
      m[j] = state.beta1 * m[j] + (1.0 - state.beta1) * g[j];
      v[j] = state.beta2 * v[j] + (1.0 - state.beta2) * g[j] * g[j];
      const double m_hat = m[j] / c1;
      const double v_hat = v[j] / c2;
      w[j] -= state.learning_rate * m_hat / (std::sqrt(v_hat) + state.epsilon);
      g[j] = 0.0;
    }
  }
}

double GradNorm(const std::vector<Tensor>& params) {
  double sq = 0.0;
  for (const auto& p : params) {
    for (double g : p.grad()) sq += g * g;
  }
  return std::sqrt(sq);
}

double ClipGradNorm(std::vector<Tensor>& params, double max_norm) {
  const double norm = GradNorm(params);
  if (max_norm > 0.0 && norm > max_norm) {
    const double factor = max_norm / norm;
    for (auto& p : params) {
      for (double& g : p.grad()) g *= factor;
    }
  }
  return norm;
}

void ZeroGrads(std::vector<Tensor>& params) {
  for (auto& p : params) p.ZeroGrad();
}

}  // namespace sumbench::tensor
