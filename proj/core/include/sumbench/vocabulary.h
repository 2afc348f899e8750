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

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sumbench/textproc.h"

namespace sumbench {

using TokenId = std::int32_t;

// Word-level token <-> id map. Ids are contiguous; the five special tokens
// always occupy ids 0..4.
class Vocabulary {
 public:
  static constexpr TokenId kPad = 0;
  static constexpr TokenId kBos = 1;
  static constexpr TokenId kEos = 2;
  static constexpr TokenId kUnk = 3;
  static constexpr TokenId kMask = 4;
  static constexpr std::size_t kNumSpecials = 5;

  // Surface forms of the specials, indexed by id.
  static constexpr std::array<std::string_view, kNumSpecials> kSpecialTokens = {
      "⟨pad⟩", "⟨bos⟩", "⟨eos⟩", "⟨unk⟩", "⟨mask⟩"};
  static std::string_view MaskToken() { return kSpecialTokens[kMask]; }

  // Regular tokens with frequency >= min_freq, ranked by (frequency desc,
  // token asc), truncated to max_size - 5. Throws kNoTokens if none qualify
  // and kInvalidArgument if max_size < 6 or min_freq < 1.
  static Vocabulary Build(std::span<const textproc::Tokens> streams, int min_freq,
                          std::size_t max_size);

  // Rebuilds a vocabulary from its id-ordered entries (specials included),
  // e.g. when loading a checkpoint.
  static Vocabulary FromEntries(std::vector<std::string> id_to_token);

  std::size_t size() const { return id_to_token_.size(); }
  bool Contains(std::string_view token) const;
  // kUnk for unknown tokens.
  TokenId IdOf(std::string_view token) const;
  // Throws kIdOutOfRange.
  const std::string& TokenOf(TokenId id) const;
  const std::vector<std::string>& entries() const { return id_to_token_; }

  std::vector<TokenId> Encode(const textproc::Tokens& tokens, bool add_bos_eos) const;
  // Drops PAD/BOS/EOS. Throws kIdOutOfRange.
  textproc::Tokens Decode(std::span<const TokenId> ids) const;

  bool operator==(const Vocabulary& other) const { return id_to_token_ == other.id_to_token_; }

 private:
  Vocabulary() = default;
  void Index();

  std::vector<std::string> id_to_token_;
  std::unordered_map<std::string, TokenId> token_to_id_;
};

}  // namespace sumbench
