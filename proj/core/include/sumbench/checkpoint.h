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

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "sumbench/transformer.h"
#include "sumbench/vocabulary.h"

namespace sumbench::transformer {

// Binary layout, all integers and floats little-endian:
//
//   "SMTF"                      magic
//   u32 version                 kCheckpointVersion
//   u32 d_model, n_heads, n_enc_layers, n_dec_layers, d_ff, vocab_size, max_len
//   f64 dropout_rate
//   u64 seed
//   u32 token count, then per token: u32 byte length + UTF-8 bytes, in id order
//   u32 parameter count, then per parameter:
//       u16 name length + UTF-8 name, u8 rank, u64 dims[rank], f64 data[numel]
//   u32 CRC-32 (zlib polynomial) of every preceding byte
inline constexpr std::uint32_t kCheckpointVersion = 1;

struct LoadedModel {
  TransformerModel model;
  Vocabulary vocab;
};

std::string SerializeCheckpoint(const TransformerModel& model, const Vocabulary& vocab);

// Checks run in order: kBadMagic, kUnsupportedVersion, kTruncatedFile (any
// short read), kChecksumMismatch, then kCorruptCheckpoint for records that do
// not match the configured architecture.
LoadedModel ParseCheckpoint(std::string_view bytes);

void SaveCheckpoint(const TransformerModel& model, const Vocabulary& vocab,
                    const std::filesystem::path& path);
LoadedModel LoadCheckpoint(const std::filesystem::path& path);

std::uint32_t Crc32(std::string_view bytes);

}  // namespace sumbench::transformer
