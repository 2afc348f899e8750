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

#include "sumbench/gradient_check.h"

#include <algorithm>
#include <cmath>

#include "sumbench/error.h"

namespace sumbench::tensor {

double GradientCheckReport::worst() const {
  return max_error.empty() ? 0.0 : *std::max_element(max_error.begin(), max_error.end());
}

std::vector<std::size_t> SampleCoordinates(std::size_t numel, std::size_t max_count) {
  const std::size_t count = std::min(numel, max_count);
  std::vector<std::size_t> coords(count);
  for (std::size_t i = 0; i < count; ++i) coords[i] = i * numel / count;
  return coords;
}

std::vector<std::vector<double>> AnalyticGradients(const ScalarFn& f, std::vector<Tensor>& params) {
  for (auto& p : params) {
    p.set_requires_grad(true);
    p.ZeroGrad();
  }
  Tape::Current().Clear();
  Backward(f());
  std::vector<std::vector<double>> grads;
  grads.reserve(params.size());
  for (auto& p : params) grads.push_back(p.grad());
  return grads;
}

GradientCheckReport CompareWithNumeric(const ScalarFn& f, std::vector<Tensor>& params,
                                       const std::vector<std::vector<double>>& analytic, double h,
                                       double tolerance) {
  if (!(h > 0.0)) throw Error(ErrorCode::kInvalidArgument, "finite-difference step must be positive");
  if (analytic.size() != params.size()) {
    throw Error(ErrorCode::kShapeMismatch, "one analytic gradient per parameter is required");
  }
  NoGradGuard no_grad;
  GradientCheckReport report;
  report.tolerance = tolerance;
  for (std::size_t t = 0; t < params.size(); ++t) {
    auto& data = params[t].data();
    double worst = 0.0;
    const auto coords = SampleCoordinates(data.size());
    for (std::size_t i : coords) {
      const double saved = data[i];
      data[i] = saved + h;
      const double plus = f().item();
      data[i] = saved - h;
      const double minus = f().item();
      data[i] = saved;
      const double numeric = (plus - minus) / (2.0 * h);
      const double a = analytic[t].at(i);
      const double err = std::abs(a - numeric) / std::max(1e-12, std::abs(a) + std::abs(numeric));
      worst = std::max(worst, err);
    }
    report.max_error.push_back(worst);
    report.coordinates.push_back(coords.size());
  }
  report.passed = report.worst() < tolerance;
  return report;
}

GradientCheckReport GradientCheck(const ScalarFn& f, std::vector<Tensor>& params, double h,
                                  double tolerance) {
  const auto analytic = AnalyticGradients(f, params);
  return CompareWithNumeric(f, params, analytic, h, tolerance);
}

}  // namespace sumbench::tensor
