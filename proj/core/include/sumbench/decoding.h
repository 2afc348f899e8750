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
#include <span>
#include <string_view>
#include <vector>

#include "sumbench/transformer.h"

namespace sumbench::transformer {

enum class DecodeStrategy { kGreedy, kBeam };

std::string_view DecodeStrategyName(DecodeStrategy strategy);
// "greedy" or "beam"; throws kTypeError.
DecodeStrategy ParseDecodeStrategy(std::string_view name);

struct DecodeOptions {
  DecodeStrategy strategy = DecodeStrategy::kGreedy;
  std::size_t beam_width = 4;
  double length_penalty = 0.7;  // alpha in score / len^alpha
  std::size_t max_out = 32;
};

// Autoregressive decoding from BOS until EOS or max_out tokens. The result
// excludes BOS and EOS.
//
// Greedy takes the arg-max log-probability per step, ties to the smaller id.
// Beam keeps the best `beam_width` extensions per step, ranked by
// length-normalised log-probability, then parent rank, then token
// log-probability, then token id; a hypothesis ending in EOS is finished.
// Width 1 reproduces greedy exactly.
//
// Throws kSequenceTooLong (source or max_out beyond max_len) and
// kInvalidArgument (beam_width 0).
std::vector<TokenId> DecodeSummary(const TransformerModel& model, std::span<const TokenId> src,
                                   const DecodeOptions& options);

}  // namespace sumbench::transformer
