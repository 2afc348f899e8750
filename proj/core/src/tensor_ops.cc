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

#include <algorithm>
#include <cmath>
#include <limits>

#include "sumbench/error.h"
#include "sumbench/random.h"
#include "sumbench/tensor.h"

namespace sumbench::tensor {
namespace {

[[noreturn]] void Mismatch(const std::string& op, const Shape& a, const Shape& b) {
  throw Error(ErrorCode::kShapeMismatch, op + ": " + ShapeString(a) + " vs " + ShapeString(b));
}

bool IsSuffix(const Shape& whole, const Shape& suffix) {
  if (suffix.size() > whole.size()) return false;
  return std::equal(suffix.rbegin(), suffix.rend(), whole.rbegin());
}

// Shape of `a` with the last axis dropped, i.e. the number of rows.
std::size_t Rows(const Tensor& t) { return t.numel() / t.shape().back(); }

// C[m,n] += A[m,k] * B[k,n]
void GemmNN(const double* a, const double* b, double* c, std::size_t m, std::size_t k,
            std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    double* c_row = c + i * n;
    const double* a_row = a + i * k;
    for (std::size_t p = 0; p < k; ++p) {
      const double av = a_row[p];
      const double* b_row = b + p * n;
      for (std::size_t j = 0; j < n; ++j) c_row[j] += av * b_row[j];
    }
  }
}

// dA[m,k] += dC[m,n] * B[k,n]^T
void GemmNT(const double* dc, const double* b, double* da, std::size_t m, std::size_t k,
            std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    const double* dc_row = dc + i * n;
    double* da_row = da + i * k;
    for (std::size_t p = 0; p < k; ++p) {
      const double* b_row = b + p * n;
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += dc_row[j] * b_row[j];
      da_row[p] += s;
    }
  }
}

// dB[k,n] += A[m,k]^T * dC[m,n]
void GemmTN(const double* a, const double* dc, double* db, std::size_t m, std::size_t k,
            std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    const double* a_row = a + i * k;
    const double* dc_row = dc + i * n;
    for (std::size_t p = 0; p < k; ++p) {
      const double av = a_row[p];
      double* db_row = db + p * n;
      for (std::size_t j = 0; j < n; ++j) db_row[j] += av * dc_row[j];
    }
  }
}

enum class Binary { kAdd, kSub, kMul };

Tensor Elementwise(const Tensor& a, const Tensor& b, Binary op) {
  const char* name = op == Binary::kAdd ? "add" : op == Binary::kSub ? "sub" : "mul";
  if (!IsSuffix(a.shape(), b.shape())) Mismatch(name, a.shape(), b.shape());
  const std::size_t n = a.numel();
  const std::size_t nb = b.numel();
  Tensor out = Tensor::Zeros(a.shape());
  const auto& x = a.data();
  const auto& y = b.data();
  auto& z = out.data();
  for (std::size_t i = 0; i < n; ++i) {
    const double bv = y[i % nb];
    z[i] = op == Binary::kAdd ? x[i] + bv : op == Binary::kSub ? x[i] - bv : x[i] * bv;
  }
  if (Tape::ShouldRecord({&a, &b})) {
    Tape::Current().Record({a, b}, out, [a, b, out, op, n, nb]() mutable {
      const auto& g = out.grad();
      if (a.requires_grad()) {
        auto& ga = a.grad();
        for (std::size_t i = 0; i < n; ++i) ga[i] += op == Binary::kMul ? g[i] * b.data()[i % nb] : g[i];
      }
      if (b.requires_grad()) {
        auto& gb = b.grad();
        for (std::size_t i = 0; i < n; ++i) {
          const double d = op == Binary::kAdd ? g[i] : op == Binary::kSub ? -g[i] : g[i] * a.data()[i];
          gb[i % nb] += d;
        }
      }
    });
  }
  return out;
}

void CheckMask(const Tensor& x, const Mask& visible) {
  const std::size_t last = x.shape().back();
  if (visible.empty() || x.numel() % visible.size() != 0 || visible.size() % last != 0) {
    throw Error(ErrorCode::kShapeMismatch, "mask of " + std::to_string(visible.size()) +
                                               " entries does not tile " + ShapeString(x.shape()));
  }
}

Tensor SoftmaxImpl(const Tensor& x, const Mask* visible) {
  const std::size_t cols = x.shape().back();
  const std::size_t rows = Rows(x);
  if (visible != nullptr) CheckMask(x, *visible);
  Tensor out = Tensor::Zeros(x.shape());
  const auto& in = x.data();
  auto& s = out.data();
  for (std::size_t r = 0; r < rows; ++r) {
    const std::size_t base = r * cols;
    auto seen = [&](std::size_t j) {
      return visible == nullptr || (*visible)[(base + j) % visible->size()] != 0;
    };
    double max = -std::numeric_limits<double>::infinity();
    std::size_t visible_count = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      if (!seen(j)) continue;
      ++visible_count;
      // NaN must propagate rather than be skipped by the comparison.
      max = std::isnan(in[base + j]) || in[base + j] > max ? in[base + j] : max;
    }
    if (visible_count == 0) {
      throw Error(ErrorCode::kFullyMaskedRow, "softmax row " + std::to_string(r) + " has no visible entry");
    }
    double total = 0.0;
    for (std::size_t j = 0; j < cols; ++j) {
      if (!seen(j)) continue;
      s[base + j] = std::exp(in[base + j] - max);
      total += s[base + j];
    }
    for (std::size_t j = 0; j < cols; ++j) s[base + j] /= total;
  }
  if (Tape::ShouldRecord({&x})) {
    Tape::Current().Record({x}, out, [x, out, rows, cols]() mutable {
      const auto& g = out.grad();
      const auto& sv = out.data();
      auto& gx = x.grad();
      for (std::size_t r = 0; r < rows; ++r) {
        const std::size_t base = r * cols;
        double dot = 0.0;
        for (std::size_t j = 0; j < cols; ++j) dot += g[base + j] * sv[base + j];
        for (std::size_t j = 0; j < cols; ++j) gx[base + j] += sv[base + j] * (g[base + j] - dot);
      }
    });
  }
  return out;
}

}  // namespace

Tensor Add(const Tensor& a, const Tensor& b) { return Elementwise(a, b, Binary::kAdd); }
Tensor Sub(const Tensor& a, const Tensor& b) { return Elementwise(a, b, Binary::kSub); }
Tensor Mul(const Tensor& a, const Tensor& b) { return Elementwise(a, b, Binary::kMul); }

Tensor Scale(const Tensor& a, double factor) {
  Tensor out = Tensor::Zeros(a.shape());
  for (std::size_t i = 0; i < a.numel(); ++i) out.data()[i] = a.data()[i] * factor;
  if (Tape::ShouldRecord({&a})) {
    Tape::Current().Record({a}, out, [a, out, factor]() mutable {
      auto& ga = a.grad();
      const auto& g = out.grad();
      for (std::size_t i = 0; i < ga.size(); ++i) ga[i] += g[i] * factor;
    });
  }
  return out;
}

Tensor Relu(const Tensor& a) {
  Tensor out = Tensor::Zeros(a.shape());
  for (std::size_t i = 0; i < a.numel(); ++i) out.data()[i] = std::max(0.0, a.data()[i]);
  if (Tape::ShouldRecord({&a})) {
    Tape::Current().Record({a}, out, [a, out]() mutable {
      auto& ga = a.grad();
      const auto& g = out.grad();
      for (std::size_t i = 0; i < ga.size(); ++i) {
        if (a.data()[i] > 0.0) ga[i] += g[i];
      }
    });
  }
  return out;
}

Tensor Sum(const Tensor& a) {
  double total = 0.0;
  for (double v : a.data()) total += v;
  Tensor out = Tensor::Scalar(total);
  if (Tape::ShouldRecord({&a})) {
    Tape::Current().Record({a}, out, [a, out]() mutable {
      auto& ga = a.grad();
      const double g = out.grad()[0];
      for (double& v : ga) v += g;
    });
  }
  return out;
}

Tensor MatMul(const Tensor& a, const Tensor& b) {
  if (a.rank() < 2 || b.rank() < 2) Mismatch("matmul", a.shape(), b.shape());
  const std::size_t m = a.shape()[a.rank() - 2];
  const std::size_t k = a.shape().back();
  const std::size_t n = b.shape().back();
  if (b.shape()[b.rank() - 2] != k) Mismatch("matmul", a.shape(), b.shape());

  const Shape a_batch(a.shape().begin(), a.shape().end() - 2);
  const Shape b_batch(b.shape().begin(), b.shape().end() - 2);
  const std::size_t rank = std::max(a_batch.size(), b_batch.size());
  Shape pa(rank - a_batch.size(), 1), pb(rank - b_batch.size(), 1);
  pa.insert(pa.end(), a_batch.begin(), a_batch.end());
  pb.insert(pb.end(), b_batch.begin(), b_batch.end());
  Shape out_shape(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    if (pa[i] != pb[i] && pa[i] != 1 && pb[i] != 1) Mismatch("matmul", a.shape(), b.shape());
    out_shape[i] = std::max(pa[i], pb[i]);
  }
  const std::size_t batches = NumElements(out_shape);
  out_shape.push_back(m);
  out_shape.push_back(n);

  // Matrix offsets (in matrices, not elements) of each operand per output batch.
  std::vector<std::size_t> a_off(batches), b_off(batches);
  const bool shared_b = NumElements(pb) == 1 && NumElements(pa) == batches;
  if (!shared_b) {
    for (std::size_t flat = 0; flat < batches; ++flat) {
      std::size_t rem = flat, ai = 0, bi = 0, a_stride = 1, b_stride = 1;
      for (std::size_t d = rank; d-- > 0;) {
        const std::size_t idx = rem % out_shape[d];
        rem /= out_shape[d];
        if (pa[d] != 1) ai += idx * a_stride;
        if (pb[d] != 1) bi += idx * b_stride;
        a_stride *= pa[d];
        b_stride *= pb[d];
      }
      a_off[flat] = ai;
      b_off[flat] = bi;
    }
  }

  Tensor out = Tensor::Zeros(out_shape);
  if (shared_b) {
    // Every batch uses the same right operand: one [batches*m, k] x [k, n] product.
    GemmNN(a.data().data(), b.data().data(), out.data().data(), batches * m, k, n);
  } else {
    for (std::size_t t = 0; t < batches; ++t) {
      GemmNN(a.data().data() + a_off[t] * m * k, b.data().data() + b_off[t] * k * n,
             out.data().data() + t * m * n, m, k, n);
    }
  }

  if (Tape::ShouldRecord({&a, &b})) {
    Tape::Current().Record({a, b}, out, [a, b, out, a_off, b_off, shared_b, batches, m, k,
                                         n]() mutable {
      const double* g = out.grad().data();
      if (shared_b) {
        if (a.requires_grad()) GemmNT(g, b.data().data(), a.grad().data(), batches * m, k, n);
        if (b.requires_grad()) GemmTN(a.data().data(), g, b.grad().data(), batches * m, k, n);
        return;
      }
      for (std::size_t t = 0; t < batches; ++t) {
        const double* gt = g + t * m * n;
        if (a.requires_grad()) {
          GemmNT(gt, b.data().data() + b_off[t] * k * n, a.grad().data() + a_off[t] * m * k, m, k, n);
        }
        if (b.requires_grad()) {
          GemmTN(a.data().data() + a_off[t] * m * k, gt, b.grad().data() + b_off[t] * k * n, m, k, n);
        }
      }
    });
  }
  return out;
}

Tensor Transpose(const Tensor& a) {
  if (a.rank() < 2) throw Error(ErrorCode::kShapeMismatch, "transpose needs rank >= 2");
  Shape shape = a.shape();
  const std::size_t r = shape[shape.size() - 2];
  const std::size_t c = shape.back();
  std::swap(shape[shape.size() - 2], shape.back());
  const std::size_t batches = a.numel() / (r * c);
  Tensor out = Tensor::Zeros(shape);
  for (std::size_t t = 0; t < batches; ++t) {
    const double* src = a.data().data() + t * r * c;
    double* dst = out.data().data() + t * r * c;
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) dst[j * r + i] = src[i * c + j];
    }
  }
  if (Tape::ShouldRecord({&a})) {
    Tape::Current().Record({a}, out, [a, out, batches, r, c]() mutable {
      const double* g = out.grad().data();
      double* ga = a.grad().data();
      for (std::size_t t = 0; t < batches; ++t) {
        for (std::size_t i = 0; i < r; ++i) {
          for (std::size_t j = 0; j < c; ++j) ga[t * r * c + i * c + j] += g[t * r * c + j * r + i];
        }
      }
    });
  }
  return out;
}

Tensor Reshape(const Tensor& a, Shape shape) {
  if (NumElements(shape) != a.numel()) Mismatch("reshape", a.shape(), shape);
  Tensor out = Tensor::FromData(std::move(shape), a.data());
  if (Tape::ShouldRecord({&a})) {
    Tape::Current().Record({a}, out, [a, out]() mutable {
      auto& ga = a.grad();
      const auto& g = out.grad();
      for (std::size_t i = 0; i < ga.size(); ++i) ga[i] += g[i];
    });
  }
  return out;
}

Tensor ConcatLast(const std::vector<Tensor>& parts) {
  if (parts.empty()) throw Error(ErrorCode::kShapeMismatch, "concat of zero tensors");
  const Shape lead(parts[0].shape().begin(), parts[0].shape().end() - 1);
  std::size_t total = 0;
  for (const auto& p : parts) {
    if (Shape(p.shape().begin(), p.shape().end() - 1) != lead) Mismatch("concat", parts[0].shape(), p.shape());
    total += p.shape().back();
  }
  Shape shape = lead;
  shape.push_back(total);
  const std::size_t rows = Rows(parts[0]);
  Tensor out = Tensor::Zeros(shape);
  std::size_t col = 0;
  for (const auto& p : parts) {
    const std::size_t w = p.shape().back();
    for (std::size_t r = 0; r < rows; ++r) {
      std::copy_n(p.data().begin() + static_cast<std::ptrdiff_t>(r * w), w,
                  out.data().begin() + static_cast<std::ptrdiff_t>(r * total + col));
    }
    col += w;
  }
  bool record = false;
  for (const auto& p : parts) record = record || Tape::ShouldRecord({&p});
  if (record) {
    Tape::Current().Record(parts, out, [parts, out, rows, total]() mutable {
      const auto& g = out.grad();
      std::size_t col = 0;
      for (auto& p : parts) {
        const std::size_t w = p.shape().back();
        if (p.requires_grad()) {
          auto& gp = p.grad();
          for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t j = 0; j < w; ++j) gp[r * w + j] += g[r * total + col + j];
          }
        }
        col += w;
      }
    });
  }
  return out;
}

Tensor Softmax(const Tensor& x) { return SoftmaxImpl(x, nullptr); }

Tensor MaskedSoftmax(const Tensor& x, const Mask& visible) { return SoftmaxImpl(x, &visible); }

Tensor LayerNorm(const Tensor& x, const Tensor& gain, const Tensor& bias, double epsilon) {
  const std::size_t d = x.shape().back();
  if (gain.shape() != Shape{d}) Mismatch("layer_norm gain", x.shape(), gain.shape());
  if (bias.shape() != Shape{d}) Mismatch("layer_norm bias", x.shape(), bias.shape());
  const std::size_t rows = Rows(x);
  Tensor out = Tensor::Zeros(x.shape());
  std::vector<double> xhat(x.numel());
  std::vector<double> inv_std(rows);
  const auto& in = x.data();
  for (std::size_t r = 0; r < rows; ++r) {
    const double* row = in.data() + r * d;
    double mean = 0.0;
    for (std::size_t j = 0; j < d; ++j) mean += row[j];
    mean /= static_cast<double>(d);
    double var = 0.0;
    for (std::size_t j = 0; j < d; ++j) var += (row[j] - mean) * (row[j] - mean);
    var /= static_cast<double>(d);
    inv_std[r] = 1.0 / std::sqrt(var + epsilon);
    for (std::size_t j = 0; j < d; ++j) {
      xhat[r * d + j] = (row[j] - mean) * inv_std[r];
      out.data()[r * d + j] = xhat[r * d + j] * gain.data()[j] + bias.data()[j];
    }
  }
  if (Tape::ShouldRecord({&x, &gain, &bias})) {
    Tape::Current().Record({x, gain, bias}, out, [x, gain, bias, out, xhat = std::move(xhat),
                                                  inv_std = std::move(inv_std), rows, d]() mutable {
      const auto& g = out.grad();
      std::vector<double> dxhat(d);
      for (std::size_t r = 0; r < rows; ++r) {
        const double* gr = g.data() + r * d;
        const double* xr = xhat.data() + r * d;
        if (gain.requires_grad()) {
          auto& gg = gain.grad();
          for (std::size_t j = 0; j < d; ++j) gg[j] += gr[j] * xr[j];
        }
        if (bias.requires_grad()) {
          auto& gb = bias.grad();
          for (std::size_t j = 0; j < d; ++j) gb[j] += gr[j];
        }
        if (x.requires_grad()) {
          double mean_d = 0.0, mean_dx = 0.0;
          for (std::size_t j = 0; j < d; ++j) {
            dxhat[j] = gr[j] * gain.data()[j];
            mean_d += dxhat[j];
            mean_dx += dxhat[j] * xr[j];
          }
          mean_d /= static_cast<double>(d);
          mean_dx /= static_cast<double>(d);
          double* gx = x.grad().data() + r * d;
          for (std::size_t j = 0; j < d; ++j) gx[j] += inv_std[r] * (dxhat[j] - mean_d - xr[j] * mean_dx);
        }
      }
    });
  }
  return out;
}

Tensor Embedding(const Tensor& table, std::span<const std::int32_t> ids, const Shape& ids_shape) {
  if (table.rank() != 2) throw Error(ErrorCode::kShapeMismatch, "embedding table must be [V, d]");
  if (NumElements(ids_shape) != ids.size()) {
    throw Error(ErrorCode::kShapeMismatch, "ids do not fill " + ShapeString(ids_shape));
  }
  const std::size_t vocab = table.dim(0);
  const std::size_t d = table.dim(1);
  for (std::int32_t id : ids) {
    if (id < 0 || static_cast<std::size_t>(id) >= vocab) {
      throw Error(ErrorCode::kIdOutOfRange,
                  "token id " + std::to_string(id) + " outside vocabulary of " + std::to_string(vocab));
    }
  }
  Shape shape = ids_shape;
  shape.push_back(d);
  Tensor out = Tensor::Zeros(shape);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    std::copy_n(table.data().begin() + static_cast<std::ptrdiff_t>(ids[i] * d), d,
                out.data().begin() + static_cast<std::ptrdiff_t>(i * d));
  }
  if (Tape::ShouldRecord({&table})) {
    std::vector<std::int32_t> kept(ids.begin(), ids.end());
    Tape::Current().Record({table}, out, [table, out, kept = std::move(kept), d]() mutable {
      auto& gt = table.grad();
      const auto& g = out.grad();
      for (std::size_t i = 0; i < kept.size(); ++i) {
        for (std::size_t j = 0; j < d; ++j) gt[static_cast<std::size_t>(kept[i]) * d + j] += g[i * d + j];
      }
    });
  }
  return out;
}

Tensor CrossEntropyLoss(const Tensor& logits, std::span<const std::int32_t> targets,
                        std::int32_t pad_id) {
  const std::size_t vocab = logits.shape().back();
  const std::size_t rows = Rows(logits);
  if (targets.size() != rows) {
    throw Error(ErrorCode::kShapeMismatch, std::to_string(targets.size()) + " targets for logits " +
                                               ShapeString(logits.shape()));
  }
  std::vector<double> probs(logits.numel(), 0.0);
  double total = 0.0;
  std::size_t count = 0;
  const auto& x = logits.data();
  for (std::size_t r = 0; r < rows; ++r) {
    const std::int32_t t = targets[r];
    if (t == pad_id) continue;
    if (t < 0 || static_cast<std::size_t>(t) >= vocab) {
      throw Error(ErrorCode::kIdOutOfRange, "target id " + std::to_string(t) + " outside vocabulary");
    }
    const double* row = x.data() + r * vocab;
    const double max = *std::max_element(row, row + vocab);
    double z = 0.0;
    for (std::size_t j = 0; j < vocab; ++j) z += std::exp(row[j] - max);
    const double log_z = max + std::log(z);
    total += log_z - row[t];
    for (std::size_t j = 0; j < vocab; ++j) probs[r * vocab + j] = std::exp(row[j] - log_z);
    ++count;
  }
  if (count == 0) throw Error(ErrorCode::kAllPadding, "every target position is padding");
  Tensor out = Tensor::Scalar(total / static_cast<double>(count));
  if (Tape::ShouldRecord({&logits})) {
    std::vector<std::int32_t> kept(targets.begin(), targets.end());
    Tape::Current().Record({logits}, out, [logits, out, probs = std::move(probs), kept = std::move(kept),
                                           pad_id, vocab, count]() mutable {
      const double g = out.grad()[0] / static_cast<double>(count);
      auto& gl = logits.grad();
      for (std::size_t r = 0; r < kept.size(); ++r) {
        if (kept[r] == pad_id) continue;
        for (std::size_t j = 0; j < vocab; ++j) gl[r * vocab + j] += g * probs[r * vocab + j];
        gl[r * vocab + static_cast<std::size_t>(kept[r])] -= g;
      }
    });
  }
  return out;
}

Tensor Dropout(const Tensor& x, double rate, Rng& rng) {
  if (!(rate >= 0.0 && rate < 1.0)) throw Error(ErrorCode::kInvalidArgument, "dropout rate must lie in [0, 1)");
  if (rate == 0.0) return x;
  const double keep_scale = 1.0 / (1.0 - rate);
  std::vector<double> mask(x.numel());
  for (double& m : mask) m = rng.UniformDouble() >= rate ? keep_scale : 0.0;
  Tensor out = Tensor::Zeros(x.shape());
  for (std::size_t i = 0; i < x.numel(); ++i) out.data()[i] = x.data()[i] * mask[i];
  if (Tape::ShouldRecord({&x})) {
    Tape::Current().Record({x}, out, [x, out, mask = std::move(mask)]() mutable {
      auto& gx = x.grad();
      const auto& g = out.grad();
      for (std::size_t i = 0; i < gx.size(); ++i) gx[i] += g[i] * mask[i];
    });
  }
  return out;
}

}  // namespace sumbench::tensor
