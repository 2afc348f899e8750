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

#include "sumbench/tensor.h"

#include <algorithm>
#include <sstream>

#include "sumbench/error.h"

namespace sumbench::tensor {

std::size_t NumElements(const Shape& shape) {
  std::size_t n = 1;
  for (std::size_t d : shape) n *= d;
  return n;
}

std::string ShapeString(const Shape& shape) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < shape.size(); ++i) out << (i ? "," : "") << shape[i];
  out << ']';
  return out.str();
}

Tensor Tensor::Zeros(Shape shape, bool requires_grad) { return Full(std::move(shape), 0.0, requires_grad); }

Tensor Tensor::Full(Shape shape, double value, bool requires_grad) {
  const std::size_t n = NumElements(shape);
  return FromData(std::move(shape), std::vector<double>(n, value), requires_grad);
}

Tensor Tensor::FromData(Shape shape, std::vector<double> data, bool requires_grad) {
  for (std::size_t d : shape) {
    if (d == 0) throw Error(ErrorCode::kShapeMismatch, "zero-sized dimension in " + ShapeString(shape));
  }
  if (NumElements(shape) != data.size()) {
    throw Error(ErrorCode::kShapeMismatch, "shape " + ShapeString(shape) + " does not hold " +
                                               std::to_string(data.size()) + " values");
  }
  auto impl = std::make_shared<TensorImpl>();
  impl->shape = std::move(shape);
  impl->data = std::move(data);
  Tensor t(std::move(impl));
  t.set_requires_grad(requires_grad);
  return t;
}

Tensor Tensor::Scalar(double value, bool requires_grad) { return FromData({1}, {value}, requires_grad); }

std::vector<double>& Tensor::grad() const {
  if (impl_->grad.size() != impl_->data.size()) impl_->grad.assign(impl_->data.size(), 0.0);
  return impl_->grad;
}

void Tensor::ZeroGrad() const {
  if (!impl_->grad.empty()) std::fill(impl_->grad.begin(), impl_->grad.end(), 0.0);
}

void Tensor::set_requires_grad(bool value) const {
  impl_->requires_grad = value;
  if (value) grad();
}

double Tensor::item() const {
  if (numel() != 1) throw Error(ErrorCode::kNotScalar, "item() on shape " + ShapeString(shape()));
  return impl_->data[0];
}

Tensor Tensor::Clone(bool requires_grad) const { return FromData(shape(), data(), requires_grad); }

Tape& Tape::Current() {
  thread_local Tape tape;
  return tape;
}

bool Tape::Enabled() { return Current().enabled_; }

bool Tape::ShouldRecord(std::initializer_list<const Tensor*> inputs) {
  if (!Enabled()) return false;
  return std::any_of(inputs.begin(), inputs.end(),
                     [](const Tensor* t) { return t->defined() && t->requires_grad(); });
}

void Tape::Record(std::vector<Tensor> inputs, Tensor output, std::function<void()> backward) {
  output.set_requires_grad(true);
  nodes_.push_back(Node{std::move(inputs), std::move(output), std::move(backward)});
}

NoGradGuard::NoGradGuard() : previous_(Tape::Current().enabled_) { Tape::Current().enabled_ = false; }

NoGradGuard::~NoGradGuard() { Tape::Current().enabled_ = previous_; }

void Backward(const Tensor& loss) {
  Tape& tape = Tape::Current();
  if (!loss.defined() || loss.numel() != 1) {
    throw Error(ErrorCode::kNotScalar, "backward needs a scalar loss");
  }
  if (tape.nodes_.empty()) {
    throw Error(ErrorCode::kTapeEmpty, "no recorded operations to differentiate");
  }
  if (!loss.requires_grad()) {
    tape.Clear();
    throw Error(ErrorCode::kTapeEmpty, "loss was not produced by recorded operations");
  }
  Tensor seed = loss;
  seed.grad()[0] = 1.0;
  for (auto it = tape.nodes_.rbegin(); it != tape.nodes_.rend(); ++it) it->backward();
  tape.Clear();
}

}  // namespace sumbench::tensor
