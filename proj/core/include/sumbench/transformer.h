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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sumbench/random.h"
#include "sumbench/tensor.h"
#include "sumbench/vocabulary.h"

namespace sumbench::transformer {

using tensor::Mask;
using tensor::Tensor;

struct ModelConfig {
  std::uint32_t d_model = 32;
  std::uint32_t n_heads = 4;
  std::uint32_t n_enc_layers = 2;
  std::uint32_t n_dec_layers = 2;
  std::uint32_t d_ff = 64;
  std::uint32_t vocab_size = 64;
  std::uint32_t max_len = 64;
  double dropout_rate = 0.1;
  std::uint64_t seed = 1;

  std::uint32_t d_k() const { return d_model / n_heads; }
  // Throws kInvalidArgument: d_model % n_heads != 0, vocab_size < 6,
  // max_len < 2, a zero size, or dropout outside [0, 1).
  void Validate() const;

  bool operator==(const ModelConfig&) const = default;
};

// PE[pos, 2i] = sin(pos / 10000^(2i/d)), PE[pos, 2i+1] = cos(same angle).
// Throws kOddDimension.
Tensor PositionalEncoding(std::size_t max_len, std::size_t d_model);

// softmax(Q K^T / sqrt(d_k)) V over [*, q, d_k] x [*, s, d_k] x [*, s, d_v].
// mask (1 = visible) tiles the trailing [q, s] score dims when given.
// Throws kShapeMismatch, kFullyMaskedRow.
Tensor ScaledDotAttention(const Tensor& q, const Tensor& k, const Tensor& v,
                          const Mask* mask = nullptr);

struct MultiHeadParams {
  std::vector<Tensor> w_q;  // h x [d_model, d_k]
  std::vector<Tensor> w_k;  // h x [d_model, d_k]
  std::vector<Tensor> w_v;  // h x [d_model, d_v]
  Tensor w_o;               // [h * d_v, d_model]
};

// Concat(head_1, ..., head_h) W_o with head_i = Attention(x_q W_q_i, x_kv W_k_i, x_kv W_v_i).
Tensor MultiHeadAttention(const Tensor& x_q, const Tensor& x_kv, const Mask* mask,
                          const MultiHeadParams& params);

struct NormParams {
  Tensor gain;  // [d_model], ones at init
  Tensor bias;  // [d_model], zeros at init
};

struct FeedForwardParams {
  Tensor w1;  // [d_model, d_ff]
  Tensor b1;  // [d_ff]
  Tensor w2;  // [d_ff, d_model]
  Tensor b2;  // [d_model]
};

struct EncoderLayer {
  MultiHeadParams self_attn;
  NormParams norm1;
  FeedForwardParams ffn;
  NormParams norm2;
};

struct DecoderLayer {
  MultiHeadParams self_attn;
  NormParams norm1;
  MultiHeadParams cross_attn;
  NormParams norm2;
  FeedForwardParams ffn;
  NormParams norm3;
};

struct NamedTensor {
  std::string name;
  Tensor tensor;
};

// Padded id matrices, row-major [batch, len].
struct Batch {
  std::size_t size = 0;
  std::size_t src_len = 0;
  std::size_t tgt_len = 0;
  std::vector<TokenId> src;
  std::vector<TokenId> tgt_in;   // BOS + target, PAD-extended
  std::vector<TokenId> tgt_out;  // target + EOS, PAD-extended
};

using SeqPair = std::pair<std::vector<TokenId>, std::vector<TokenId>>;  // (source, target)

// Teacher-forcing batch. Throws kInvalidArgument for an empty source and
// kSequenceTooLong when a source exceeds max_len or a target exceeds
// max_len - 1.
Batch MakeBatch(std::span<const SeqPair* const> pairs, std::size_t max_len);

class TransformerModel {
 public:
  // Xavier-uniform projections, N(0, d_model^-1/2) embeddings, unit gains
  // and zero biases, all drawn from config.seed.
  explicit TransformerModel(const ModelConfig& config);

  const ModelConfig& config() const { return config_; }

  // Stable order; names are unique.
  std::vector<NamedTensor> NamedParameters() const;
  std::vector<Tensor> Parameters() const;
  std::size_t ParameterCount() const;
  static std::size_t ParameterCount(const ModelConfig& config);

  // Logits [len(tgt), vocab_size] for one pair. dropout_rng is required when
  // train_mode is set and dropout is non-zero. Throws kSequenceTooLong,
  // kIdOutOfRange.
  Tensor Forward(std::span<const TokenId> src, std::span<const TokenId> tgt, bool train_mode,
                 Rng* dropout_rng = nullptr) const;

  // Logits [batch, tgt_len, vocab_size] for a padded batch.
  Tensor ForwardBatch(const Batch& batch, bool train_mode, Rng* dropout_rng = nullptr) const;

  // Encoder output [batch, src_len, d_model]; PAD keys are masked.
  Tensor Encode(std::span<const TokenId> src, std::size_t batch, std::size_t src_len,
                bool train_mode, Rng* dropout_rng) const;
  // Decoder logits [batch, tgt_len, vocab_size] attending to `memory`, which
  // has batch size `batch` or 1.
  Tensor DecodeLogits(const Tensor& memory, std::span<const TokenId> src, std::size_t src_len,
                      std::span<const TokenId> tgt, std::size_t batch, std::size_t tgt_len,
                      bool train_mode, Rng* dropout_rng) const;

 private:
  Tensor Embed(std::span<const TokenId> ids, std::size_t batch, std::size_t len, bool train_mode,
               Rng* dropout_rng) const;
  Tensor MaybeDropout(const Tensor& x, bool train_mode, Rng* dropout_rng) const;

  ModelConfig config_;
  Tensor embedding_;   // [vocab_size, d_model]
  Tensor positional_;  // [max_len, d_model], constant
  std::vector<EncoderLayer> encoder_;
  std::vector<DecoderLayer> decoder_;
  Tensor output_;  // [d_model, vocab_size]
};

}  // namespace sumbench::transformer
