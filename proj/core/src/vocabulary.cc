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

#include <algorithm>
#include <map>
#include <utility>

#include "sumbench/error.h"

namespace sumbench {
namespace {

bool IsSpecialSurface(std::string_view token) {
  return std::find(Vocabulary::kSpecialTokens.begin(), Vocabulary::kSpecialTokens.end(), token) !=
         Vocabulary::kSpecialTokens.end();
}

}  // namespace

Vocabulary Vocabulary::Build(std::span<const textproc::Tokens> streams, int min_freq,
                             std::size_t max_size) {
  if (min_freq < 1) throw Error(ErrorCode::kInvalidArgument, "min_freq must be >= 1");
  if (max_size < kNumSpecials + 1) {
    throw Error(ErrorCode::kInvalidArgument, "max_size must leave room for one regular token");
  }
  std::map<std::string, long> counts;
  for (const auto& stream : streams) {
    for (const auto& token : stream) {
      if (!token.empty() && !IsSpecialSurface(token)) ++counts[token];
    }
  }
  std::vector<std::pair<std::string, long>> ranked;
  for (auto& [token, count] : counts) {
    if (count >= min_freq) ranked.emplace_back(token, count);
  }
  if (ranked.empty()) throw Error(ErrorCode::kNoTokens, "no token reaches min_freq");
  // counts is ordered by token, so a stable sort on frequency keeps ties ascending.
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  if (ranked.size() > max_size - kNumSpecials) ranked.resize(max_size - kNumSpecials);

  Vocabulary vocab;
  vocab.id_to_token_.reserve(kNumSpecials + ranked.size());
  for (auto special : kSpecialTokens) vocab.id_to_token_.emplace_back(special);
  for (auto& entry : ranked) vocab.id_to_token_.push_back(std::move(entry.first));
  vocab.Index();
  return vocab;
}

Vocabulary Vocabulary::FromEntries(std::vector<std::string> id_to_token) {
  if (id_to_token.size() < kNumSpecials + 1) {
    throw Error(ErrorCode::kInvalidArgument, "vocabulary needs the specials and one token");
  }
  for (std::size_t i = 0; i < kNumSpecials; ++i) {
    if (id_to_token[i] != kSpecialTokens[i]) {
      throw Error(ErrorCode::kInvalidArgument, "special token missing at id " + std::to_string(i));
    }
  }
  for (std::size_t i = kNumSpecials; i < id_to_token.size(); ++i) {
    if (id_to_token[i].empty() || IsSpecialSurface(id_to_token[i])) {
      throw Error(ErrorCode::kInvalidArgument, "invalid regular token at id " + std::to_string(i));
    }
  }
  Vocabulary vocab;
  vocab.id_to_token_ = std::move(id_to_token);
  vocab.Index();
  if (vocab.token_to_id_.size() != vocab.id_to_token_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "duplicate vocabulary entries");
  }
  return vocab;
}

void Vocabulary::Index() {
  token_to_id_.clear();
  token_to_id_.reserve(id_to_token_.size());
  for (std::size_t i = 0; i < id_to_token_.size(); ++i) {
    token_to_id_.emplace(id_to_token_[i], static_cast<TokenId>(i));
  }
}

bool Vocabulary::Contains(std::string_view token) const {
  return token_to_id_.find(std::string(token)) != token_to_id_.end();
}

TokenId Vocabulary::IdOf(std::string_view token) const {
  auto it = token_to_id_.find(std::string(token));
  return it == token_to_id_.end() ? kUnk : it->second;
}

const std::string& Vocabulary::TokenOf(TokenId id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= id_to_token_.size()) {
    throw Error(ErrorCode::kIdOutOfRange,
                "id " + std::to_string(id) + " outside vocabulary of size " +
                    std::to_string(id_to_token_.size()));
  }
  return id_to_token_[static_cast<std::size_t>(id)];
}

std::vector<TokenId> Vocabulary::Encode(const textproc::Tokens& tokens, bool add_bos_eos) const {
  std::vector<TokenId> ids;
  ids.reserve(tokens.size() + 2);
  if (add_bos_eos) ids.push_back(kBos);
  for (const auto& token : tokens) ids.push_back(IdOf(token));
  if (add_bos_eos) ids.push_back(kEos);
  return ids;
}

textproc::Tokens Vocabulary::Decode(std::span<const TokenId> ids) const {
  textproc::Tokens tokens;
  tokens.reserve(ids.size());
  for (TokenId id : ids) {
    const std::string& token = TokenOf(id);
    if (id == kPad || id == kBos || id == kEos) continue;
    tokens.push_back(token);
  }
  return tokens;
}

}  // namespace sumbench
