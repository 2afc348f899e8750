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

#include "sumbench/transformer.h"

#include <algorithm>
#include <cmath>

#include "sumbench/error.h"

namespace sumbench::transformer {

using tensor::Add;
using tensor::LayerNorm;
using tensor::MatMul;
using tensor::Shape;

namespace {

constexpr double kLayerNormEpsilon = 1e-5;

Tensor XavierUniform(Rng& rng, std::size_t fan_in, std::size_t fan_out) {
  const double limit = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
  std::vector<double> data(fan_in * fan_out);
  for (double& w : data) w = rng.UniformReal(-limit, limit);
  return Tensor::FromData({fan_in, fan_out}, std::move(data), true);
}

MultiHeadParams InitAttention(Rng& rng, const ModelConfig& c) {
  MultiHeadParams p;
  for (std::uint32_t h = 0; h < c.n_heads; ++h) {
    p.w_q.push_back(XavierUniform(rng, c.d_model, c.d_k()));
    p.w_k.push_back(XavierUniform(rng, c.d_model, c.d_k()));
    p.w_v.push_back(XavierUniform(rng, c.d_model, c.d_k()));
  }
  p.w_o = XavierUniform(rng, static_cast<std::size_t>(c.n_heads) * c.d_k(), c.d_model);
  return p;
}

NormParams InitNorm(const ModelConfig& c) {
  return NormParams{Tensor::Full({c.d_model}, 1.0, true), Tensor::Zeros({c.d_model}, true)};
}

FeedForwardParams InitFeedForward(Rng& rng, const ModelConfig& c) {
  FeedForwardParams f;
  f.w1 = XavierUniform(rng, c.d_model, c.d_ff);
  f.b1 = Tensor::Zeros({c.d_ff}, true);
  f.w2 = XavierUniform(rng, c.d_ff, c.d_model);
  f.b2 = Tensor::Zeros({c.d_model}, true);
  return f;
}

void AppendAttention(std::vector<NamedTensor>& out, const std::string& prefix,
                     const MultiHeadParams& p) {
  for (std::size_t h = 0; h < p.w_q.size(); ++h) {
    const std::string idx = std::to_string(h);
    out.push_back({prefix + ".w_q." + idx, p.w_q[h]});
    out.push_back({prefix + ".w_k." + idx, p.w_k[h]});
    out.push_back({prefix + ".w_v." + idx, p.w_v[h]});
  }
  out.push_back({prefix + ".w_o", p.w_o});
}

void AppendNorm(std::vector<NamedTensor>& out, const std::string& prefix, const NormParams& p) {
  out.push_back({prefix + ".gain", p.gain});
  out.push_back({prefix + ".bias", p.bias});
}

void AppendFeedForward(std::vector<NamedTensor>& out, const std::string& prefix,
                       const FeedForwardParams& f) {
  out.push_back({prefix + ".w1", f.w1});
  out.push_back({prefix + ".b1", f.b1});
  out.push_back({prefix + ".w2", f.w2});
  out.push_back({prefix + ".b2", f.b2});
}

Tensor FeedForward(const Tensor& x, const FeedForwardParams& f) {
  const Tensor hidden = tensor::Relu(Add(MatMul(x, f.w1), f.b1));
  return Add(MatMul(hidden, f.w2), f.b2);
}

Tensor Norm(const Tensor& x, const NormParams& n) {
  return LayerNorm(x, n.gain, n.bias, kLayerNormEpsilon);
}

// visible[b, i, j] = ids[b, j] != PAD, for `rows` query positions.
Mask KeyPaddingMask(std::span<const TokenId> ids, std::size_t batch, std::size_t len,
                    std::size_t rows) {
  Mask mask(batch * rows * len);
  for (std::size_t b = 0; b < batch; ++b) {
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < len; ++j) {
        mask[(b * rows + i) * len + j] = ids[b * len + j] != Vocabulary::kPad ? 1 : 0;
      }
    }
  }
  return mask;
}

Mask CausalMask(std::size_t len) {
  Mask mask(len * len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = 0; j <= i; ++j) mask[i * len + j] = 1;
  }
  return mask;
}

void CheckLength(std::size_t len, std::size_t max_len, const char* what) {
  if (len == 0) throw Error(ErrorCode::kInvalidArgument, std::string(what) + " sequence is empty");
  if (len > max_len) {
    throw Error(ErrorCode::kSequenceTooLong, std::string(what) + " length " + std::to_string(len) +
                                                 " exceeds max_len " + std::to_string(max_len));
  }
}

}  // namespace

void ModelConfig::Validate() const {
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::kInvalidArgument, msg); };
  if (d_model == 0 || n_heads == 0 || d_ff == 0) fail("model sizes must be positive");
  if (n_enc_layers == 0 || n_dec_layers == 0) fail("need at least one encoder and decoder layer");
  if (d_model % n_heads != 0) fail("d_model must be divisible by n_heads");
  if (vocab_size < 6) fail("vocab_size must be >= 6");
  if (max_len < 2) fail("max_len must be >= 2");
  if (!(dropout_rate >= 0.0 && dropout_rate < 1.0)) fail("dropout must lie in [0, 1)");
}

Tensor PositionalEncoding(std::size_t max_len, std::size_t d_model) {
  if (d_model % 2 != 0) {
    throw Error(ErrorCode::kOddDimension, "positional encoding needs an even d_model, got " +
                                              std::to_string(d_model));
  }
  std::vector<double> pe(max_len * d_model);
  for (std::size_t pos = 0; pos < max_len; ++pos) {
    for (std::size_t i = 0; i < d_model / 2; ++i) {
      const double angle = static_cast<double>(pos) /
                           std::pow(10000.0, static_cast<double>(2 * i) / static_cast<double>(d_model));
      pe[pos * d_model + 2 * i] = std::sin(angle);
      pe[pos * d_model + 2 * i + 1] = std::cos(angle);
    }
  }
  return Tensor::FromData({max_len, d_model}, std::move(pe));
}

Tensor ScaledDotAttention(const Tensor& q, const Tensor& k, const Tensor& v, const Mask* mask) {
  if (q.rank() < 2 || k.rank() < 2 || v.rank() < 2 || q.shape().back() != k.shape().back() ||
      k.shape()[k.rank() - 2] != v.shape()[v.rank() - 2]) {
    throw Error(ErrorCode::kShapeMismatch, "attention shapes Q" + tensor::ShapeString(q.shape()) +
                                               " K" + tensor::ShapeString(k.shape()) + " V" +
                                               tensor::ShapeString(v.shape()));
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(q.shape().back()));
  const Tensor scores = tensor::Scale(MatMul(q, tensor::Transpose(k)), scale);
  const Tensor weights = mask ? tensor::MaskedSoftmax(scores, *mask) : tensor::Softmax(scores);
  return MatMul(weights, v);
}

Tensor MultiHeadAttention(const Tensor& x_q, const Tensor& x_kv, const Mask* mask,
                          const MultiHeadParams& params) {
  std::vector<Tensor> heads;
  heads.reserve(params.w_q.size());
  for (std::size_t h = 0; h < params.w_q.size(); ++h) {
    heads.push_back(ScaledDotAttention(MatMul(x_q, params.w_q[h]), MatMul(x_kv, params.w_k[h]),
                                       MatMul(x_kv, params.w_v[h]), mask));
  }
  return MatMul(tensor::ConcatLast(heads), params.w_o);
}

Batch MakeBatch(std::span<const SeqPair* const> pairs, std::size_t max_len) {
  Batch batch;
  batch.size = pairs.size();
  for (const SeqPair* p : pairs) {
    CheckLength(p->first.size(), max_len, "source");
    if (p->second.size() + 1 > max_len) {
      throw Error(ErrorCode::kSequenceTooLong, "target length " + std::to_string(p->second.size()) +
                                                   " leaves no room for BOS within max_len");
    }
    batch.src_len = std::max(batch.src_len, p->first.size());
    batch.tgt_len = std::max(batch.tgt_len, p->second.size() + 1);
  }
  batch.src.assign(batch.size * batch.src_len, Vocabulary::kPad);
  batch.tgt_in.assign(batch.size * batch.tgt_len, Vocabulary::kPad);
  batch.tgt_out.assign(batch.size * batch.tgt_len, Vocabulary::kPad);
  for (std::size_t b = 0; b < batch.size; ++b) {
    const auto& [src, tgt] = *pairs[b];
    std::copy(src.begin(), src.end(), batch.src.begin() + static_cast<std::ptrdiff_t>(b * batch.src_len));
    TokenId* in = batch.tgt_in.data() + b * batch.tgt_len;
    TokenId* out = batch.tgt_out.data() + b * batch.tgt_len;
    in[0] = Vocabulary::kBos;
    for (std::size_t t = 0; t < tgt.size(); ++t) {
      in[t + 1] = tgt[t];
      out[t] = tgt[t];
    }
    out[tgt.size()] = Vocabulary::kEos;
  }
  return batch;
}

TransformerModel::TransformerModel(const ModelConfig& config) : config_(config) {
  config_.Validate();
  positional_ = PositionalEncoding(config_.max_len, config_.d_model);
  Rng rng(MixSeed(config_.seed, 0));
  const double embed_std = 1.0 / std::sqrt(static_cast<double>(config_.d_model));
  std::vector<double> table(static_cast<std::size_t>(config_.vocab_size) * config_.d_model);
  for (double& w : table) w = rng.Normal(0.0, embed_std);
  embedding_ = Tensor::FromData({config_.vocab_size, config_.d_model}, std::move(table), true);
  for (std::uint32_t l = 0; l < config_.n_enc_layers; ++l) {
    EncoderLayer layer;
    layer.self_attn = InitAttention(rng, config_);
    layer.norm1 = InitNorm(config_);
    layer.ffn = InitFeedForward(rng, config_);
    layer.norm2 = InitNorm(config_);
    encoder_.push_back(std::move(layer));
  }
  for (std::uint32_t l = 0; l < config_.n_dec_layers; ++l) {
    DecoderLayer layer;
    layer.self_attn = InitAttention(rng, config_);
    layer.norm1 = InitNorm(config_);
    layer.cross_attn = InitAttention(rng, config_);
    layer.norm2 = InitNorm(config_);
    layer.ffn = InitFeedForward(rng, config_);
    layer.norm3 = InitNorm(config_);
    decoder_.push_back(std::move(layer));
  }
  output_ = XavierUniform(rng, config_.d_model, config_.vocab_size);
}

std::vector<NamedTensor> TransformerModel::NamedParameters() const {
  std::vector<NamedTensor> out;
  out.push_back({"embedding", embedding_});
  for (std::size_t l = 0; l < encoder_.size(); ++l) {
    const std::string p = "encoder." + std::to_string(l);
    AppendAttention(out, p + ".self_attn", encoder_[l].self_attn);
    AppendNorm(out, p + ".norm1", encoder_[l].norm1);
    AppendFeedForward(out, p + ".ffn", encoder_[l].ffn);
    AppendNorm(out, p + ".norm2", encoder_[l].norm2);
  }
  for (std::size_t l = 0; l < decoder_.size(); ++l) {
    const std::string p = "decoder." + std::to_string(l);
    AppendAttention(out, p + ".self_attn", decoder_[l].self_attn);
    AppendNorm(out, p + ".norm1", decoder_[l].norm1);
    AppendAttention(out, p + ".cross_attn", decoder_[l].cross_attn);
    AppendNorm(out, p + ".norm2", decoder_[l].norm2);
    AppendFeedForward(out, p + ".ffn", decoder_[l].ffn);
    AppendNorm(out, p + ".norm3", decoder_[l].norm3);
  }
  out.push_back({"output", output_});
  return out;
}

std::vector<Tensor> TransformerModel::Parameters() const {
  std::vector<Tensor> params;
  for (auto& named : NamedParameters()) params.push_back(named.tensor);
  return params;
}

std::size_t TransformerModel::ParameterCount() const {
  std::size_t n = 0;
  for (const auto& p : Parameters()) n += p.numel();
  return n;
}

std::size_t TransformerModel::ParameterCount(const ModelConfig& c) {
  const std::size_t d = c.d_model, v = c.vocab_size, ff = c.d_ff;
  const std::size_t attention = 4 * d * d;
  const std::size_t norm = 2 * d;
  const std::size_t ffn = d * ff + ff + ff * d + d;
  return v * d + c.n_enc_layers * (attention + ffn + 2 * norm) +
         c.n_dec_layers * (2 * attention + ffn + 3 * norm) + d * v;
}

Tensor TransformerModel::MaybeDropout(const Tensor& x, bool train_mode, Rng* dropout_rng) const {
  if (!train_mode || config_.dropout_rate == 0.0) return x;
  if (dropout_rng == nullptr) {
    throw Error(ErrorCode::kInvalidArgument, "train mode with dropout needs a dropout generator");
  }
  return tensor::Dropout(x, config_.dropout_rate, *dropout_rng);
}

Tensor TransformerModel::Embed(std::span<const TokenId> ids, std::size_t batch, std::size_t len,
                               bool train_mode, Rng* dropout_rng) const {
  const std::size_t d = config_.d_model;
  const Tensor tokens = tensor::Scale(tensor::Embedding(embedding_, ids, {batch, len}),
                                      std::sqrt(static_cast<double>(d)));
  std::vector<double> rows(positional_.data().begin(),
                           positional_.data().begin() + static_cast<std::ptrdiff_t>(len * d));
  const Tensor pe = Tensor::FromData({len, d}, std::move(rows));
  return MaybeDropout(Add(tokens, pe), train_mode, dropout_rng);
}

Tensor TransformerModel::Encode(std::span<const TokenId> src, std::size_t batch,
                                std::size_t src_len, bool train_mode, Rng* dropout_rng) const {
  CheckLength(src_len, config_.max_len, "source");
  if (src.size() != batch * src_len) {
    throw Error(ErrorCode::kShapeMismatch, "source ids do not fill the batch");
  }
  const Mask mask = KeyPaddingMask(src, batch, src_len, src_len);
  Tensor x = Embed(src, batch, src_len, train_mode, dropout_rng);
  for (const auto& layer : encoder_) {
    const Tensor attn = MultiHeadAttention(x, x, &mask, layer.self_attn);
    x = Norm(Add(x, MaybeDropout(attn, train_mode, dropout_rng)), layer.norm1);
    const Tensor ff = FeedForward(x, layer.ffn);
    x = Norm(Add(x, MaybeDropout(ff, train_mode, dropout_rng)), layer.norm2);
  }
  return x;
}

Tensor TransformerModel::DecodeLogits(const Tensor& memory, std::span<const TokenId> src,
                                      std::size_t src_len, std::span<const TokenId> tgt,
                                      std::size_t batch, std::size_t tgt_len, bool train_mode,
                                      Rng* dropout_rng) const {
  CheckLength(tgt_len, config_.max_len, "target");
  if (tgt.size() != batch * tgt_len) {
    throw Error(ErrorCode::kShapeMismatch, "target ids do not fill the batch");
  }
  const std::size_t memory_batch = memory.dim(0);
  if (src.size() != memory_batch * src_len || (memory_batch != batch && memory_batch != 1)) {
    throw Error(ErrorCode::kShapeMismatch, "encoder memory does not match the decoder batch");
  }
  const Mask causal = CausalMask(tgt_len);
  const Mask cross = KeyPaddingMask(src, memory_batch, src_len, tgt_len);
  Tensor y = Embed(tgt, batch, tgt_len, train_mode, dropout_rng);
  for (const auto& layer : decoder_) {
    const Tensor self = MultiHeadAttention(y, y, &causal, layer.self_attn);
    y = Norm(Add(y, MaybeDropout(self, train_mode, dropout_rng)), layer.norm1);
    const Tensor ctx = MultiHeadAttention(y, memory, &cross, layer.cross_attn);
    y = Norm(Add(y, MaybeDropout(ctx, train_mode, dropout_rng)), layer.norm2);
    const Tensor ff = FeedForward(y, layer.ffn);
    y = Norm(Add(y, MaybeDropout(ff, train_mode, dropout_rng)), layer.norm3);
  }
  return MatMul(y, output_);
}

Tensor TransformerModel::ForwardBatch(const Batch& batch, bool train_mode, Rng* dropout_rng) const {
  const Tensor memory = Encode(batch.src, batch.size, batch.src_len, train_mode, dropout_rng);
  return DecodeLogits(memory, batch.src, batch.src_len, batch.tgt_in, batch.size, batch.tgt_len,
                      train_mode, dropout_rng);
}

Tensor TransformerModel::Forward(std::span<const TokenId> src, std::span<const TokenId> tgt,
                                 bool train_mode, Rng* dropout_rng) const {
  const Tensor memory = Encode(src, 1, src.size(), train_mode, dropout_rng);
  const Tensor logits =
      DecodeLogits(memory, src, src.size(), tgt, 1, tgt.size(), train_mode, dropout_rng);
  return tensor::Reshape(logits, {tgt.size(), config_.vocab_size});
}

}  // namespace sumbench::transformer
