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
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sumbench/config.h"
#include "sumbench/corpus.h"
#include "sumbench/rouge.h"
#include "sumbench/transformer.h"
#include "sumbench/vocabulary.h"

namespace sumbench::harness {

struct ReportMetadata {
  std::size_t corpus_documents = 0;
  std::size_t corpus_categories = 0;
  std::size_t evaluated_documents = 0;
  std::string eval_subset;  // "all" or "test"
  std::uint64_t split_seed = 0;
  double train_fraction = 0.0;
  std::string budget;  // e.g. "ratio 0.2"
  std::uint64_t random_seed = 0;
  std::string config_digest;
  // Documents a system could not summarise, by system name.
  std::map<std::string, std::size_t> skipped;
  // Not rendered, so that reports stay byte-identical across runs.
  double wall_clock_seconds = 0.0;
};

struct Report {
  rouge::ScoreTable table;
  ReportMetadata metadata;
};

// A trained transformer plus the vocabulary it was trained with.
struct TransformerSystem {
  transformer::TransformerModel model;
  Vocabulary vocab;
};

// Summarises one article with an extractive or baseline system. The random
// baseline draws from MixSeed(seed, Fnv1a64(document_id)).
std::string SummarizeExtractive(SystemKind kind, const std::string& body,
                                const std::string& document_id, const ExperimentConfig& config);

// Transformer summary, cut to at most `token_budget` tokens (0 = no cut).
std::string SummarizeTransformer(const TransformerSystem& system, const std::string& body,
                                 const ExperimentConfig& config, std::size_t token_budget);

// Token budget shared with the extractive systems: the metric-token count of
// the lead summary under the configured sentence budget.
std::size_t TokenBudget(const std::string& body, const ExperimentConfig& config);

// Source/target id pairs for the configured pair source (gap-sentence pseudo
// pairs or article/reference pairs), truncated to the model's max_len.
struct TrainingData {
  std::vector<transformer::SeqPair> pairs;
  std::size_t skipped = 0;
};
std::vector<textproc::Tokens> SourceTokens(const Corpus& corpus, const ExperimentConfig& config);
TrainingData BuildTrainingData(const Corpus& corpus, const Vocabulary& vocab,
                               const ExperimentConfig& config);

struct TrainOutcome {
  TransformerSystem system;
  std::vector<double> loss_history;
  std::size_t pair_count = 0;
};

// Builds the vocabulary from the corpus and trains a fresh model.
TrainOutcome TrainTransformer(const Corpus& corpus, const ExperimentConfig& config,
                              const transformer::ProgressFn& progress = {});

// Loads the corpus (unless given), picks the evaluation documents, runs every
// configured system and averages ROUGE. Per-document failures are skipped and
// counted.
Report RunExperiment(const ExperimentConfig& config, const Corpus* corpus = nullptr,
                     const TransformerSystem* transformer = nullptr);

}  // namespace sumbench::harness
