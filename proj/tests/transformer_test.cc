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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <set>

#include "sumbench/gradient_check.h"
#include "sumbench/random.h"
#include "test_util.h"

namespace sumbench::transformer {
namespace {

using tensor::Shape;
using tensor::Tape;

ModelConfig TinyConfig() {
  ModelConfig c;
  c.d_model = 8;
  c.n_heads = 2;
  c.n_enc_layers = 1;
  c.n_dec_layers = 1;
  c.d_ff = 16;
  c.vocab_size = 11;
  c.max_len = 12;
  c.dropout_rate = 0.0;
  c.seed = 3;
  return c;
}

std::vector<TokenId> RandomIds(Rng& rng, std::size_t len, std::uint32_t vocab) {
  std::vector<TokenId> ids(len);
  // Regular ids only, so no position is padding.
  for (auto& id : ids) {
    id = static_cast<TokenId>(Vocabulary::kNumSpecials +
                              rng.UniformIndex(vocab - Vocabulary::kNumSpecials));
  }
  return ids;
}

class TransformerTest : public ::testing::Test {
 protected:
  void SetUp() override { Tape::Current().Clear(); }
  void TearDown() override { Tape::Current().Clear(); }
};

TEST_F(TransformerTest, ConfigValidation) {
  EXPECT_NO_THROW(ModelConfig{}.Validate());
  ModelConfig c;
  c.n_heads = 3;
  EXPECT_SUMBENCH_ERROR(c.Validate(), ErrorCode::kInvalidArgument);
  c = ModelConfig{};
  c.vocab_size = 5;
  EXPECT_SUMBENCH_ERROR(c.Validate(), ErrorCode::kInvalidArgument);
  c = ModelConfig{};
  c.max_len = 1;
  EXPECT_SUMBENCH_ERROR(c.Validate(), ErrorCode::kInvalidArgument);
  c = ModelConfig{};
  c.dropout_rate = 1.0;
  EXPECT_SUMBENCH_ERROR(c.Validate(), ErrorCode::kInvalidArgument);
}

TEST_F(TransformerTest, PositionalEncodingExamples) {
  const Tensor pe = PositionalEncoding(50, 16);
  ASSERT_EQ(pe.shape(), (Shape{50, 16}));
  for (std::size_t j = 0; j < 16; ++j) EXPECT_EQ(pe.data()[j], j % 2 == 0 ? 0.0 : 1.0);
  for (double v : pe.data()) {
    EXPECT_GE(v, -1.0);
    EXPECT_LE(v, 1.0);
  }
  for (std::size_t d : {2u, 8u, 64u}) {
    EXPECT_NEAR(PositionalEncoding(4, d).data()[d], 0.84147, 5e-6);
  }
  // Column 2i uses the angle pos / 10000^(2i/d).
  EXPECT_NEAR(pe.data()[3 * 16 + 4], std::sin(3.0 / std::pow(10000.0, 4.0 / 16.0)), 1e-15);
  EXPECT_NEAR(pe.data()[3 * 16 + 5], std::cos(3.0 / std::pow(10000.0, 4.0 / 16.0)), 1e-15);
  EXPECT_SUMBENCH_ERROR(PositionalEncoding(4, 7), ErrorCode::kOddDimension);
}

TEST_F(TransformerTest, AttentionExamples) {
  const Tensor v1 = Tensor::FromData({1, 3}, {4, 5, 6});
  EXPECT_EQ(ScaledDotAttention(Tensor::FromData({2, 2}, {1, 2, 3, 4}),
                               Tensor::FromData({1, 2}, {7, 8}), v1)
                .data(),
            (std::vector<double>{4, 5, 6, 4, 5, 6}));

  const Tensor k2 = Tensor::FromData({2, 2}, {1, 1, 1, 1});
  const Tensor v2 = Tensor::FromData({2, 2}, {2, 0, 4, 8});
  const Tensor mean = ScaledDotAttention(Tensor::FromData({1, 2}, {0.3, -2}), k2, v2);
  EXPECT_NEAR(mean.data()[0], 3.0, 1e-15);
  EXPECT_NEAR(mean.data()[1], 4.0, 1e-15);

  const Tensor eye = Tensor::FromData({2, 2}, {1, 0, 0, 1});
  const Tensor out = ScaledDotAttention(eye, eye, eye);
  const double e = std::exp(1.0 / std::sqrt(2.0));
  const double sigma = e / (e + 1.0);
  EXPECT_NEAR(out.data()[0], sigma, 1e-15);
  EXPECT_NEAR(out.data()[1], 1.0 - sigma, 1e-15);
  EXPECT_NEAR(sigma, 0.6698, 5e-5);
}

TEST_F(TransformerTest, AttentionMaskAndErrors) {
  const Tensor eye = Tensor::FromData({2, 2}, {1, 0, 0, 1});
  const Mask causal = {1, 0, 1, 1};
  const Tensor out = ScaledDotAttention(eye, eye, eye, &causal);
  EXPECT_EQ(out.data()[0], 1.0);
  EXPECT_EQ(out.data()[1], 0.0);
  const Mask none = {0, 0, 1, 1};
  EXPECT_SUMBENCH_ERROR(ScaledDotAttention(eye, eye, eye, &none), ErrorCode::kFullyMaskedRow);
  EXPECT_SUMBENCH_ERROR(ScaledDotAttention(eye, Tensor::Zeros({2, 3}), eye),
                        ErrorCode::kShapeMismatch);
}

MultiHeadParams IdentityHead(std::size_t d) {
  std::vector<double> eye(d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i) eye[i * d + i] = 1.0;
  MultiHeadParams p;
  p.w_q = {Tensor::FromData({d, d}, eye)};
  p.w_k = {Tensor::FromData({d, d}, eye)};
  p.w_v = {Tensor::FromData({d, d}, eye)};
  p.w_o = Tensor::FromData({d, d}, eye);
  return p;
}

TEST_F(TransformerTest, MultiHeadIdentityReducesToAttention) {
  Rng rng(1);
  std::vector<double> a(3 * 4), b(5 * 4);
  for (auto& x : a) x = rng.UniformReal(-1, 1);
  for (auto& x : b) x = rng.UniformReal(-1, 1);
  const Tensor xq = Tensor::FromData({3, 4}, a);
  const Tensor xkv = Tensor::FromData({5, 4}, b);
  const Tensor got = MultiHeadAttention(xq, xkv, nullptr, IdentityHead(4));
  const Tensor want = ScaledDotAttention(xq, xkv, xkv);
  ASSERT_EQ(got.shape(), (Shape{3, 4}));
  for (std::size_t i = 0; i < got.numel(); ++i) EXPECT_NEAR(got.data()[i], want.data()[i], 1e-14);
}

TEST_F(TransformerTest, ParameterShapesAndCount) {
  const ModelConfig c = TinyConfig();
  const TransformerModel model(c);
  std::size_t total = 0;
  std::set<std::string> names;
  for (const auto& [name, t] : model.NamedParameters()) {
    EXPECT_TRUE(names.insert(name).second) << name;
    total += t.numel();
    for (double v : t.data()) EXPECT_TRUE(std::isfinite(v));
    if (name.find(".w_q.") != std::string::npos || name.find(".w_k.") != std::string::npos ||
        name.find(".w_v.") != std::string::npos) {
      EXPECT_EQ(t.shape(), (Shape{c.d_model, c.d_k()})) << name;
    }
    if (name.ends_with(".w_o")) EXPECT_EQ(t.shape(), (Shape{c.d_model, c.d_model})) << name;
  }
  EXPECT_EQ(names.count("embedding"), 1u);
  EXPECT_EQ(names.count("output"), 1u);
  EXPECT_EQ(total, model.ParameterCount());
  EXPECT_EQ(total, TransformerModel::ParameterCount(c));
  // Hand count: attention 4 * 64, norm 16, ffn 128 + 16 + 128 + 8;
  // embedding and output 88 each.
  EXPECT_EQ(total, 88u + (256 + 2 * 16 + 280) + (2 * 256 + 3 * 16 + 280) + 88u);
}

TEST_F(TransformerTest, InitIsSeedDeterministic) {
  const TransformerModel a(TinyConfig());
  const TransformerModel b(TinyConfig());
  ModelConfig other = TinyConfig();
  other.seed = 4;
  const TransformerModel c(other);
  const auto pa = a.Parameters(), pb = b.Parameters(), pc = c.Parameters();
  for (std::size_t i = 0; i < pa.size(); ++i) EXPECT_EQ(pa[i].data(), pb[i].data());
  EXPECT_NE(pa[0].data(), pc[0].data());
}

TEST_F(TransformerTest, ForwardShapeAndErrors) {
  const TransformerModel model(TinyConfig());
  Rng rng(2);
  const auto src = RandomIds(rng, 5, 11);
  const auto tgt = RandomIds(rng, 4, 11);
  EXPECT_EQ(model.Forward(src, tgt, false).shape(), (Shape{4, 11}));
  const auto long_src = RandomIds(rng, 13, 11);
  EXPECT_SUMBENCH_ERROR(model.Forward(long_src, tgt, false), ErrorCode::kSequenceTooLong);
  const std::vector<TokenId> bad = {5, 11};
  EXPECT_SUMBENCH_ERROR(model.Forward(bad, tgt, false), ErrorCode::kIdOutOfRange);
}

TEST_F(TransformerTest, CausalMaskPerturbation) {
  ModelConfig c = TinyConfig();
  c.n_dec_layers = 2;
  const TransformerModel model(c);
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto src = RandomIds(rng, 1 + rng.UniformIndex(8), c.vocab_size);
    auto tgt = RandomIds(rng, 2 + rng.UniformIndex(8), c.vocab_size);
    const std::size_t t = rng.UniformIndex(tgt.size() - 1);
    const Tensor before = model.Forward(src, tgt, false);
    for (std::size_t j = t + 1; j < tgt.size(); ++j) {
      if (rng.UniformIndex(2) == 0 || j == t + 1) {
        tgt[j] = static_cast<TokenId>(rng.UniformIndex(c.vocab_size));
      }
    }
    const Tensor after = model.Forward(src, tgt, false);
    for (std::size_t i = 0; i < (t + 1) * c.vocab_size; ++i) {
      ASSERT_EQ(before.data()[i], after.data()[i]) << "trial " << trial;
    }
  }
}

TEST_F(TransformerTest, InitialCrossEntropyNearLogVocab) {
  ModelConfig c;
  c.d_model = 32;
  c.n_heads = 4;
  c.vocab_size = 100;
  c.dropout_rate = 0.0;
  const TransformerModel model(c);
  Rng rng(6);
  double total = 0.0;
  for (int i = 0; i < 100; ++i) {
    const auto src = RandomIds(rng, 1 + rng.UniformIndex(20), c.vocab_size);
    const auto tgt = RandomIds(rng, 1 + rng.UniformIndex(20), c.vocab_size);
    total += tensor::CrossEntropyLoss(model.Forward(src, tgt, false), tgt, Vocabulary::kPad).item();
  }
  const double mean = total / 100.0;
  EXPECT_NEAR(mean / std::log(100.0), 1.0, 0.15) << mean;
}

TEST_F(TransformerTest, PermutationConsistency) {
  const ModelConfig c = TinyConfig();
  const TransformerModel base(c);
  TransformerModel permuted(c);
  // perm maps old id -> new id; specials stay fixed.
  std::vector<TokenId> perm(c.vocab_size);
  std::iota(perm.begin(), perm.end(), 0);
  Rng rng(7);
  std::vector<TokenId> tail(perm.begin() + Vocabulary::kNumSpecials, perm.end());
  rng.Shuffle(tail);
  std::copy(tail.begin(), tail.end(), perm.begin() + Vocabulary::kNumSpecials);

  const auto from = base.NamedParameters();
  auto to = permuted.NamedParameters();
  const std::size_t d = c.d_model, v = c.vocab_size;
  for (std::size_t p = 0; p < from.size(); ++p) {
    const auto& src = from[p].tensor.data();
    auto& dst = to[p].tensor.data();
    if (from[p].name == "embedding") {
      for (std::size_t id = 0; id < v; ++id) {
        std::copy_n(src.begin() + id * d, d, dst.begin() + static_cast<std::size_t>(perm[id]) * d);
      }
    } else if (from[p].name == "output") {
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t id = 0; id < v; ++id) dst[r * v + perm[id]] = src[r * v + id];
      }
    } else {
      dst = src;
    }
  }
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = RandomIds(rng, 6, c.vocab_size);
    const auto t = RandomIds(rng, 5, c.vocab_size);
    std::vector<TokenId> ps, pt;
    for (TokenId id : s) ps.push_back(perm[id]);
    for (TokenId id : t) pt.push_back(perm[id]);
    const Tensor a = base.Forward(s, t, false);
    const Tensor b = permuted.Forward(ps, pt, false);
    for (std::size_t pos = 0; pos < t.size(); ++pos) {
      for (std::size_t id = 0; id < v; ++id) {
        EXPECT_NEAR(a.data()[pos * v + id], b.data()[pos * v + perm[id]], 1e-12);
      }
    }
  }
}

TEST_F(TransformerTest, FullModelGradientCheck) {
  const TransformerModel model(TinyConfig());
  Rng rng(8);
  const auto src = RandomIds(rng, 5, 11);
  const auto tgt = RandomIds(rng, 5, 11);
  auto params = model.Parameters();
  const tensor::ScalarFn loss = [&] {
    return tensor::CrossEntropyLoss(model.Forward(src, tgt, false), tgt, Vocabulary::kPad);
  };
  const auto report = tensor::GradientCheck(loss, params, 1e-5, 1e-5);
  for (std::size_t i = 0; i < params.size(); ++i) {
    EXPECT_LT(report.max_error[i], 1e-5) << model.NamedParameters()[i].name;
  }
}

TEST_F(TransformerTest, MakeBatchTeacherForcing) {
  const SeqPair a = {{5, 6, 7}, {8, 9}};
  const SeqPair b = {{5}, {8}};
  const std::vector<const SeqPair*> ptrs = {&a, &b};
  const Batch batch = MakeBatch(ptrs, 8);
  EXPECT_EQ(batch.size, 2u);
  EXPECT_EQ(batch.src_len, 3u);
  EXPECT_EQ(batch.tgt_len, 3u);
  EXPECT_EQ(batch.src, (std::vector<TokenId>{5, 6, 7, 5, 0, 0}));
  EXPECT_EQ(batch.tgt_in, (std::vector<TokenId>{1, 8, 9, 1, 8, 0}));
  EXPECT_EQ(batch.tgt_out, (std::vector<TokenId>{8, 9, 2, 8, 2, 0}));

  const SeqPair empty = {{}, {8}};
  const std::vector<const SeqPair*> e = {&empty};
  EXPECT_SUMBENCH_ERROR(MakeBatch(e, 8), ErrorCode::kInvalidArgument);
  const SeqPair long_tgt = {{5}, {8, 8, 8}};
  const std::vector<const SeqPair*> l = {&long_tgt};
  EXPECT_SUMBENCH_ERROR(MakeBatch(l, 3), ErrorCode::kSequenceTooLong);
}

TEST_F(TransformerTest, PaddedBatchMatchesSingleForward) {
  const TransformerModel model(TinyConfig());
  const SeqPair a = {{5, 6, 7, 8}, {9, 10, 5}};
  const SeqPair b = {{6, 7}, {8}};
  const std::vector<const SeqPair*> ptrs = {&a, &b};
  const Batch batch = MakeBatch(ptrs, 12);
  const Tensor logits = model.ForwardBatch(batch, false);
  const std::size_t v = 11;
  for (std::size_t row = 0; row < 2; ++row) {
    const SeqPair& p = *ptrs[row];
    std::vector<TokenId> tgt_in = {Vocabulary::kBos};
    tgt_in.insert(tgt_in.end(), p.second.begin(), p.second.end());
    const Tensor single = model.Forward(p.first, tgt_in, false);
    for (std::size_t i = 0; i < single.numel(); ++i) {
      EXPECT_NEAR(logits.data()[row * batch.tgt_len * v + i], single.data()[i], 1e-12);
    }
  }
}

}  // namespace
}  // namespace sumbench::transformer
