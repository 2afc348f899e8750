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
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sumbench/corpus.h"
#include "sumbench/decoding.h"
#include "sumbench/extractive.h"
#include "sumbench/rouge.h"
#include "sumbench/textproc.h"
#include "sumbench/training.h"
#include "sumbench/transformer.h"

namespace sumbench::harness {

enum class SystemKind { kTfidf, kGsg, kLead, kRandom, kTransformer };
std::string_view SystemName(SystemKind kind);
SystemKind ParseSystem(std::string_view name);  // throws kTypeError

enum class OutputFormat { kCsv, kMarkdown };
enum class EvalSubset { kAll, kTest };
enum class PairSource { kGsg, kReference };

struct ExperimentConfig {
  std::filesystem::path corpus_root;
  CorpusLayout layout;
  std::vector<SystemKind> systems = {SystemKind::kTfidf, SystemKind::kGsg, SystemKind::kLead,
                                     SystemKind::kRandom};
  std::filesystem::path transformer_checkpoint;
  ExtractBudget budget = ExtractBudget::Ratio(0.2);
  std::vector<rouge::RougeVariant> rouge_variants = {
      rouge::RougeVariant::N(1), rouge::RougeVariant::N(2), rouge::RougeVariant::L()};
  SplitSpec split;
  EvalSubset eval_subset = EvalSubset::kAll;
  std::uint64_t random_seed = 0;
  double gsg_ratio = 0.3;
  textproc::PipelineConfig pipeline = textproc::PipelineConfig::Full();
  textproc::PipelineConfig metric = textproc::PipelineConfig::Metric();
  std::filesystem::path output_path;  // empty: standard output
  OutputFormat output_format = OutputFormat::kCsv;

  transformer::ModelConfig model;
  transformer::TrainConfig train;
  PairSource train_pairs = PairSource::kGsg;
  int vocab_min_freq = 1;
  std::size_t vocab_max_size = 5000;
  transformer::DecodeOptions decode;
};

// key -> raw value, as read from a file or the command line.
using RawSettings = std::map<std::string, std::string>;

// Every accepted key with its default, in canonical order.
const std::vector<std::pair<std::string, std::string>>& ConfigKeys();

// Parses "key = value" lines; '#' starts a comment, blank lines are ignored.
// Throws kUnknownKey and kTypeError (a line without '=').
RawSettings ParseSettings(std::string_view text);
RawSettings ReadSettingsFile(const std::filesystem::path& path);

// Applies `overrides` on top of `file` and validates every value. Setting one
// of budget.count / budget.ratio in the overrides discards the other from the
// file. Throws kUnknownKey, kTypeError (naming the key), and kMissingRequired
// (corpus_root when require_corpus is set, or transformer.checkpoint when the
// transformer system is requested for evaluation).
ExperimentConfig BuildConfig(const RawSettings& file, const RawSettings& overrides,
                             bool require_corpus = true, bool require_checkpoint = true);

// One "key = value" line per key, sorted, with defaults filled in.
std::string CanonicalConfig(const ExperimentConfig& config);

std::uint64_t Fnv1a64(std::string_view bytes);
// 16 lowercase hex digits of Fnv1a64(CanonicalConfig(config)).
std::string ConfigDigest(const ExperimentConfig& config);

}  // namespace sumbench::harness
