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
#include <vector>

#include "sumbench/tensor.h"

namespace sumbench::tensor {

// A scalar-valued function of the parameters, rebuilt from scratch per call.
using ScalarFn = std::function<Tensor()>;

struct GradientCheckReport {
  std::vector<double> max_error;              // per parameter tensor
  std::vector<std::size_t> coordinates;       // checked coordinates per tensor
  double tolerance = 0.0;
  bool passed = false;

  double worst() const;
};

// Coordinates floor(i * numel / count) for i < count, count = min(numel, 64).
std::vector<std::size_t> SampleCoordinates(std::size_t numel, std::size_t max_count = 64);

// One recorded evaluation of f followed by Backward; returns copies of the
// gradients. Existing gradients are zeroed first.
std::vector<std::vector<double>> AnalyticGradients(const ScalarFn& f, std::vector<Tensor>& params);

// Central differences (f(x + h e_i) - f(x - h e_i)) / 2h on the sampled
// coordinates, compared as |a - n| / max(1e-12, |a| + |n|).
GradientCheckReport CompareWithNumeric(const ScalarFn& f, std::vector<Tensor>& params,
                                       const std::vector<std::vector<double>>& analytic, double h,
                                       double tolerance);

GradientCheckReport GradientCheck(const ScalarFn& f, std::vector<Tensor>& params, double h,
                                  double tolerance);

}  // namespace sumbench::tensor
