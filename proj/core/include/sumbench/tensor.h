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
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace sumbench {
class Rng;
}

namespace sumbench::tensor {

using Shape = std::vector<std::size_t>;

std::size_t NumElements(const Shape& shape);
std::string ShapeString(const Shape& shape);

struct TensorImpl {
  Shape shape;
  std::vector<double> data;  // row-major
  std::vector<double> grad;  // empty, or data.size() entries
  bool requires_grad = false;
};

// Reference-counted handle; copies alias the same storage.
class Tensor {
 public:
  Tensor() = default;

  static Tensor Zeros(Shape shape, bool requires_grad = false);
  static Tensor Full(Shape shape, double value, bool requires_grad = false);
  // Throws kShapeMismatch when data.size() != product(shape).
  static Tensor FromData(Shape shape, std::vector<double> data, bool requires_grad = false);
  static Tensor Scalar(double value, bool requires_grad = false);

  bool defined() const { return impl_ != nullptr; }
  const Shape& shape() const { return impl_->shape; }
  std::size_t rank() const { return impl_->shape.size(); }
  std::size_t dim(std::size_t axis) const { return impl_->shape.at(axis); }
  std::size_t numel() const { return impl_->data.size(); }

  // Handle semantics: a const Tensor still grants access to the shared storage.
  std::vector<double>& data() const { return impl_->data; }
  // Allocates a zero gradient on first use.
  std::vector<double>& grad() const;
  bool has_grad() const { return !impl_->grad.empty(); }
  void ZeroGrad() const;

  bool requires_grad() const { return impl_->requires_grad; }
  // Enabling allocates a zero gradient.
  void set_requires_grad(bool value) const;

  // Throws kNotScalar unless numel() == 1.
  double item() const;

  // Deep copy of shape and data; the copy is a leaf.
  Tensor Clone(bool requires_grad = false) const;

  TensorImpl* impl() const { return impl_.get(); }
  bool SameStorage(const Tensor& other) const { return impl_ == other.impl_; }

 private:
  explicit Tensor(std::shared_ptr<TensorImpl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<TensorImpl> impl_;
};

// Thread-local record of differentiable operations in execution order, which
// is a topological order of the computation graph.
class Tape {
 public:
  struct Node {
    std::vector<Tensor> inputs;
    Tensor output;
    std::function<void()> backward;  // reads output.grad(), accumulates into inputs
  };

  static Tape& Current();

  // Operations record only while recording is enabled and some input
  // requires a gradient.
  static bool Enabled();
  static bool ShouldRecord(std::initializer_list<const Tensor*> inputs);

  void Record(std::vector<Tensor> inputs, Tensor output, std::function<void()> backward);
  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }
  void Clear() { nodes_.clear(); }

 private:
  friend void Backward(const Tensor& loss);
  friend class NoGradGuard;
  std::vector<Node> nodes_;
  bool enabled_ = true;
};

// Disables recording on this thread for its lifetime.
class NoGradGuard {
 public:
  NoGradGuard();
  ~NoGradGuard();
  NoGradGuard(const NoGradGuard&) = delete;
  NoGradGuard& operator=(const NoGradGuard&) = delete;

 private:
  bool previous_;
};

// Seeds d(loss)/d(loss) = 1, sweeps the tape in reverse accumulating into
// every gradient, then clears the tape. Throws kNotScalar, kTapeEmpty.
void Backward(const Tensor& loss);

// 1 = visible. A mask may cover the trailing dims of the tensor it is
// applied to; it is then repeated over the leading dims.
using Mask = std::vector<std::uint8_t>;

// Elementwise, with b broadcast when its shape is a suffix of a's shape.
Tensor Add(const Tensor& a, const Tensor& b);
Tensor Sub(const Tensor& a, const Tensor& b);
Tensor Mul(const Tensor& a, const Tensor& b);
Tensor Scale(const Tensor& a, double factor);
Tensor Relu(const Tensor& a);
// Scalar sum of all elements.
Tensor Sum(const Tensor& a);

// [..., m, k] x [..., k, n] -> [..., m, n]. Batch dims must be equal or 1
// (missing leading dims count as 1). Throws kShapeMismatch.
Tensor MatMul(const Tensor& a, const Tensor& b);
// Swaps the last two axes.
Tensor Transpose(const Tensor& a);
Tensor Reshape(const Tensor& a, Shape shape);
// Concatenates along the last axis; leading dims must agree.
Tensor ConcatLast(const std::vector<Tensor>& parts);

// Stable softmax over the last axis.
Tensor Softmax(const Tensor& x);
// Softmax over visible entries only; hidden entries become exactly 0.
// Throws kFullyMaskedRow when a row has no visible entry.
Tensor MaskedSoftmax(const Tensor& x, const Mask& visible);
// Per last-axis slice: (x - mean) / sqrt(var + eps) * gain + bias, with the
// biased variance. gain and bias have shape [last dim].
Tensor LayerNorm(const Tensor& x, const Tensor& gain, const Tensor& bias, double epsilon);

// Gathers rows of table [V, d]; the result has shape ids_shape + [d].
// Throws kIdOutOfRange.
Tensor Embedding(const Tensor& table, std::span<const std::int32_t> ids, const Shape& ids_shape);

// Mean of -log softmax(logits)[t, target_t] over positions whose target is not
// pad_id. logits: [..., V], one target per leading position. Throws
// kAllPadding, kShapeMismatch, kIdOutOfRange.
Tensor CrossEntropyLoss(const Tensor& logits, std::span<const std::int32_t> targets,
                        std::int32_t pad_id);

// Inverted dropout. Returns x itself when rate == 0.
Tensor Dropout(const Tensor& x, double rate, Rng& rng);

}  // namespace sumbench::tensor
