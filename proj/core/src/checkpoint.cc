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

#include "sumbench/checkpoint.h"

#include <zlib.h>

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>

#include "sumbench/error.h"

namespace sumbench::transformer {
namespace {

constexpr std::string_view kMagic = "SMTF";
constexpr std::uint32_t kMaxTokenBytes = 1u << 16;

class Writer {
 public:
  template <typename T>
  void Put(T value) {
    static_assert(std::is_integral_v<T>);
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      out_.push_back(static_cast<char>((static_cast<std::uint64_t>(value) >> (8 * i)) & 0xFF));
    }
  }
  void PutF64(double value) { Put(std::bit_cast<std::uint64_t>(value)); }
  void PutBytes(std::string_view bytes) { out_.append(bytes); }
  std::string& bytes() { return out_; }

 private:
  std::string out_;
};

class Reader {
 public:
  explicit Reader(std::string_view bytes) : bytes_(bytes) {}

  template <typename T>
  T Get(const char* what) {
    static_assert(std::is_integral_v<T>);
    Need(sizeof(T), what);
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes_[pos_ + i])) << (8 * i);
    }
    pos_ += sizeof(T);
    return static_cast<T>(v);
  }
  double GetF64(const char* what) { return std::bit_cast<double>(Get<std::uint64_t>(what)); }
  std::string_view GetBytes(std::size_t n, const char* what) {
    Need(n, what);
    const std::string_view out = bytes_.substr(pos_, n);
    pos_ += n;
    return out;
  }
  std::size_t pos() const { return pos_; }

 private:
  void Need(std::size_t n, const char* what) {
    if (bytes_.size() - pos_ < n) {
      throw Error(ErrorCode::kTruncatedFile, std::string("checkpoint ends inside ") + what);
    }
  }
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

std::uint32_t Crc32(std::string_view bytes) {
  uLong crc = crc32(0L, Z_NULL, 0);
  // zlib takes uInt lengths; feed large inputs in chunks.
  std::size_t offset = 0;
  while (offset < bytes.size()) {
    const std::size_t chunk = std::min<std::size_t>(bytes.size() - offset, 1u << 30);
    crc = crc32(crc, reinterpret_cast<const Bytef*>(bytes.data() + offset), static_cast<uInt>(chunk));
    offset += chunk;
  }
  return static_cast<std::uint32_t>(crc);
}

std::string SerializeCheckpoint(const TransformerModel& model, const Vocabulary& vocab) {
  const ModelConfig& c = model.config();
  if (vocab.size() != c.vocab_size) {
    throw Error(ErrorCode::kInvalidArgument, "vocabulary size differs from the model's vocab_size");
  }
  Writer w;
  w.PutBytes(kMagic);
  w.Put<std::uint32_t>(kCheckpointVersion);
  for (std::uint32_t v : {c.d_model, c.n_heads, c.n_enc_layers, c.n_dec_layers, c.d_ff,
                          c.vocab_size, c.max_len}) {
    w.Put<std::uint32_t>(v);
  }
  w.PutF64(c.dropout_rate);
  w.Put<std::uint64_t>(c.seed);

  w.Put<std::uint32_t>(static_cast<std::uint32_t>(vocab.size()));
  for (const auto& token : vocab.entries()) {
    if (token.size() > kMaxTokenBytes) {
      throw Error(ErrorCode::kInvalidArgument, "vocabulary token longer than 64 KiB");
    }
    w.Put<std::uint32_t>(static_cast<std::uint32_t>(token.size()));
    w.PutBytes(token);
  }

  const auto params = model.NamedParameters();
  w.Put<std::uint32_t>(static_cast<std::uint32_t>(params.size()));
  for (const auto& [name, t] : params) {
    w.Put<std::uint16_t>(static_cast<std::uint16_t>(name.size()));
    w.PutBytes(name);
    w.Put<std::uint8_t>(static_cast<std::uint8_t>(t.rank()));
    for (std::size_t d : t.shape()) w.Put<std::uint64_t>(d);
    for (double v : t.data()) w.PutF64(v);
  }
  w.Put<std::uint32_t>(Crc32(w.bytes()));
  return std::move(w.bytes());
}

namespace {

bool TrailerMatches(std::string_view bytes) {
  if (bytes.size() < 4) return false;
  Reader tail(bytes.substr(bytes.size() - 4));
  return Crc32(bytes.substr(0, bytes.size() - 4)) == tail.Get<std::uint32_t>("checksum");
}

}  // namespace

// A byte flip can masquerade as a structural problem, so any inconsistency
// between the stored config and the records is reported as a checksum
// failure when the trailer does not match. Running out of bytes while every
// field read so far is consistent is a truncation.
LoadedModel ParseCheckpoint(std::string_view bytes) {
  if (bytes.size() < kMagic.size()) {
    if (kMagic.starts_with(bytes)) throw Error(ErrorCode::kTruncatedFile, "checkpoint ends inside magic");
    throw Error(ErrorCode::kBadMagic, "not a sumbench checkpoint");
  }
  if (bytes.substr(0, kMagic.size()) != kMagic) {
    throw Error(ErrorCode::kBadMagic, "not a sumbench checkpoint");
  }
  auto inconsistent = [&](const std::string& what) {
    if (!TrailerMatches(bytes)) throw Error(ErrorCode::kChecksumMismatch, "checkpoint checksum mismatch");
    throw Error(ErrorCode::kCorruptCheckpoint, what);
  };

  Reader r(bytes);
  r.GetBytes(kMagic.size(), "magic");
  const auto version = r.Get<std::uint32_t>("version");
  if (version != kCheckpointVersion) {
    throw Error(ErrorCode::kUnsupportedVersion, "checkpoint version " + std::to_string(version));
  }
  ModelConfig c;
  c.d_model = r.Get<std::uint32_t>("config");
  c.n_heads = r.Get<std::uint32_t>("config");
  c.n_enc_layers = r.Get<std::uint32_t>("config");
  c.n_dec_layers = r.Get<std::uint32_t>("config");
  c.d_ff = r.Get<std::uint32_t>("config");
  c.vocab_size = r.Get<std::uint32_t>("config");
  c.max_len = r.Get<std::uint32_t>("config");
  c.dropout_rate = r.GetF64("config");
  c.seed = r.Get<std::uint64_t>("config");
  try {
    c.Validate();
  } catch (const Error& e) {
    inconsistent(std::string("invalid model config: ") + e.what());
  }
  // Bound the allocation before building the model: at most 2^27
  // parameters and a positional table of at most 2^25 entries.
  const double d = c.d_model;
  const double cap = double(1u << 27);
  if (d * c.vocab_size > cap || d * c.d_ff > cap || d * d > cap ||
      double(c.n_enc_layers) + c.n_dec_layers > cap ||
      static_cast<double>(TransformerModel::ParameterCount(c)) > cap ||
      static_cast<double>(c.max_len) * d > double(1u << 25)) {
    inconsistent("model config exceeds the supported size");
  }
  TransformerModel model(c);
  auto params = model.NamedParameters();

  const auto token_count = r.Get<std::uint32_t>("vocabulary");
  if (token_count != c.vocab_size) inconsistent("vocabulary size differs from vocab_size");
  std::vector<std::string> tokens;
  for (std::uint32_t i = 0; i < token_count; ++i) {
    const auto len = r.Get<std::uint32_t>("vocabulary");
    // A corrupted length prefix is usually far larger than any word.
    if (len > kMaxTokenBytes) inconsistent("implausible vocabulary token length");
    tokens.emplace_back(r.GetBytes(len, "vocabulary"));
  }

  const auto param_count = r.Get<std::uint32_t>("parameters");
  if (param_count != params.size()) inconsistent("parameter count does not match the architecture");
  for (auto& [name, t] : params) {
    const auto name_len = r.Get<std::uint16_t>("parameter name");
    if (name_len != name.size()) inconsistent("unexpected parameter name length");
    if (r.GetBytes(name_len, "parameter name") != name) inconsistent("unexpected parameter " + name);
    const auto rank = r.Get<std::uint8_t>("parameter shape");
    if (rank != t.rank()) inconsistent("unexpected rank for " + name);
    for (std::size_t d : t.shape()) {
      if (r.Get<std::uint64_t>("parameter shape") != d) inconsistent("unexpected shape for " + name);
    }
    for (double& v : t.data()) v = r.GetF64("parameter data");
  }
  const std::size_t payload = r.pos();
  const auto stored_crc = r.Get<std::uint32_t>("checksum");
  if (r.pos() != bytes.size()) {
    throw Error(ErrorCode::kCorruptCheckpoint, "trailing bytes after checksum");
  }
  if (Crc32(bytes.substr(0, payload)) != stored_crc) {
    throw Error(ErrorCode::kChecksumMismatch, "checkpoint checksum mismatch");
  }
  try {
    return LoadedModel{std::move(model), Vocabulary::FromEntries(std::move(tokens))};
  } catch (const Error& e) {
    throw Error(ErrorCode::kCorruptCheckpoint, std::string("invalid vocabulary: ") + e.what());
  }
}

void SaveCheckpoint(const TransformerModel& model, const Vocabulary& vocab,
                    const std::filesystem::path& path) {
  const std::string bytes = SerializeCheckpoint(model, vocab);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::kIoError, "short write to " + path.string());
}

LoadedModel LoadCheckpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open checkpoint " + path.string());
  const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return ParseCheckpoint(bytes);
}

}  // namespace sumbench::transformer
