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

#include "sumbench/vocabulary.h"

#include <gtest/gtest.h>

#include "sumbench/random.h"
#include "test_util.h"

namespace sumbench {
namespace {

using textproc::Tokens;

Vocabulary AbVocab() {
  const std::vector<Tokens> streams = {{"a", "b", "a"}};
  return Vocabulary::Build(streams, 1, 10);
}

TEST(VocabularyTest, BuildExample) {
  const Vocabulary v = AbVocab();
  ASSERT_EQ(v.size(), 7u);
  EXPECT_EQ(v.IdOf("a"), 5);
  EXPECT_EQ(v.IdOf("b"), 6);
  for (std::size_t i = 0; i < Vocabulary::kNumSpecials; ++i) {
    EXPECT_EQ(v.TokenOf(static_cast<TokenId>(i)), Vocabulary::kSpecialTokens[i]);
  }
}

TEST(VocabularyTest, MinFreqExcludingEverythingThrows) {
  const std::vector<Tokens> streams = {{"a", "b", "a"}};
  EXPECT_SUMBENCH_ERROR(Vocabulary::Build(streams, 3, 10), ErrorCode::kNoTokens);
  const std::vector<Tokens> empty = {{}, {}};
  EXPECT_SUMBENCH_ERROR(Vocabulary::Build(empty, 1, 10), ErrorCode::kNoTokens);
}

TEST(VocabularyTest, InvalidArguments) {
  const std::vector<Tokens> streams = {{"a"}};
  EXPECT_SUMBENCH_ERROR(Vocabulary::Build(streams, 0, 10), ErrorCode::kInvalidArgument);
  EXPECT_SUMBENCH_ERROR(Vocabulary::Build(streams, 1, 5), ErrorCode::kInvalidArgument);
}

TEST(VocabularyTest, TiesBreakAlphabetically) {
  const std::vector<Tokens> streams = {{"y", "x"}, {"y", "x", "z"}};
  const Vocabulary v = Vocabulary::Build(streams, 1, 10);
  EXPECT_LT(v.IdOf("x"), v.IdOf("y"));
  EXPECT_LT(v.IdOf("y"), v.IdOf("z"));
}

TEST(VocabularyTest, TruncatesToMaxSize) {
  const std::vector<Tokens> streams = {{"c", "c", "c", "b", "b", "a"}};
  const Vocabulary v = Vocabulary::Build(streams, 1, 6);
  EXPECT_EQ(v.size(), 6u);
  EXPECT_EQ(v.IdOf("c"), 5);
  EXPECT_EQ(v.IdOf("b"), Vocabulary::kUnk);
}

TEST(VocabularyTest, SpecialSurfaceFormsAreNotRegularTokens) {
  const std::vector<Tokens> streams = {{"⟨mask⟩", "⟨mask⟩", "word"}};
  const Vocabulary v = Vocabulary::Build(streams, 1, 10);
  EXPECT_EQ(v.size(), 6u);
  EXPECT_EQ(v.IdOf("⟨mask⟩"), Vocabulary::kMask);
}

TEST(VocabularyTest, EncodeDecodeExamples) {
  const Vocabulary v = AbVocab();
  EXPECT_EQ(v.Encode({"a"}, true), (std::vector<TokenId>{1, 5, 2}));
  const std::vector<TokenId> ids = {1, 5, 2};
  EXPECT_EQ(v.Decode(ids), (Tokens{"a"}));
  EXPECT_EQ(v.Encode({"zzz"}, false), (std::vector<TokenId>{3}));
  const std::vector<TokenId> unk = {3};
  EXPECT_EQ(v.Decode(unk), (Tokens{"⟨unk⟩"}));
}

TEST(VocabularyTest, DecodeRejectsOutOfRange) {
  const Vocabulary v = AbVocab();
  const std::vector<TokenId> bad = {7};
  EXPECT_SUMBENCH_ERROR(v.Decode(bad), ErrorCode::kIdOutOfRange);
  const std::vector<TokenId> negative = {-1};
  EXPECT_SUMBENCH_ERROR(v.Decode(negative), ErrorCode::kIdOutOfRange);
}

TEST(VocabularyTest, InverseMapsAndRoundTrip) {
  Rng rng(5);
  std::vector<Tokens> streams(20);
  for (auto& s : streams) {
    const std::size_t n = rng.UniformIndex(30);
    for (std::size_t i = 0; i < n; ++i) s.push_back("w" + std::to_string(rng.UniformIndex(40)));
  }
  const Vocabulary v = Vocabulary::Build(streams, 1, 1000);
  for (std::size_t id = 0; id < v.size(); ++id) {
    EXPECT_EQ(v.IdOf(v.TokenOf(static_cast<TokenId>(id))), static_cast<TokenId>(id));
  }
  for (const auto& s : streams) {
    EXPECT_EQ(v.Decode(v.Encode(s, false)), s);
    EXPECT_EQ(v.Decode(v.Encode(s, true)), s);
  }
  EXPECT_EQ(Vocabulary::FromEntries(v.entries()), v);
}

}  // namespace
}  // namespace sumbench
