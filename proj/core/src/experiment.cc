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

#include "sumbench/experiment.h"

#include <algorithm>
#include <chrono>

#include "sumbench/checkpoint.h"
#include "sumbench/decoding.h"
#include "sumbench/error.h"
#include "sumbench/extractive.h"
#include "sumbench/random.h"
#include "sumbench/training.h"

namespace sumbench::harness {

using textproc::Tokens;

namespace {

std::vector<TokenId> Truncate(std::vector<TokenId> ids, std::size_t max) {
  if (ids.size() > max) ids.resize(max);
  return ids;
}

}  // namespace

std::string SummarizeExtractive(SystemKind kind, const std::string& body,
                                const std::string& document_id, const ExperimentConfig& config) {
  const textproc::SentenceList sentences = textproc::SegmentSentences(body);
  if (sentences.empty()) throw Error(ErrorCode::kNoSentences, document_id + " has no sentences");
  switch (kind) {
    case SystemKind::kTfidf:
      return ExtractSummary(sentences, TfidfSentenceScores(sentences, config.pipeline), config.budget);
    case SystemKind::kGsg:
      return ExtractSummary(sentences, GapSentenceScores(sentences, config.pipeline), config.budget);
    case SystemKind::kLead:
      return BaselineSummary(sentences, config.budget, BaselineStrategy::kLead);
    case SystemKind::kRandom:
      return BaselineSummary(sentences, config.budget, BaselineStrategy::kRandom,
                             MixSeed(config.random_seed, Fnv1a64(document_id)));
    case SystemKind::kTransformer:
      break;
  }
  throw Error(ErrorCode::kInvalidArgument, "the transformer is not an extractive system");
}

std::size_t TokenBudget(const std::string& body, const ExperimentConfig& config) {
  const std::string lead = SummarizeExtractive(SystemKind::kLead, body, "", config);
  return textproc::Preprocess(lead, config.metric).size();
}

std::string SummarizeTransformer(const TransformerSystem& system, const std::string& body,
                                 const ExperimentConfig& config, std::size_t token_budget) {
  const std::size_t max_len = system.model.config().max_len;
  const auto src = Truncate(system.vocab.Encode(textproc::Preprocess(body, config.pipeline), false), max_len);
  if (src.empty()) throw Error(ErrorCode::kNoTokens, "article has no model-input tokens");
  transformer::DecodeOptions decode = config.decode;
  decode.max_out = std::min<std::size_t>(decode.max_out, max_len);
  Tokens out = system.vocab.Decode(transformer::DecodeSummary(system.model, src, decode));
  if (token_budget > 0 && out.size() > token_budget) out.resize(token_budget);
  return textproc::Join(out);
}

std::vector<Tokens> SourceTokens(const Corpus& corpus, const ExperimentConfig& config) {
  std::vector<Tokens> streams;
  if (config.train_pairs == PairSource::kGsg) {
    const PseudoPairSet set = MakePseudoPairs(corpus, config.gsg_ratio, config.pipeline, config.metric);
    for (const auto& pair : set.pairs) {
      streams.push_back(pair.source);
      streams.push_back(pair.target);
    }
  } else {
    for (const auto& doc : corpus.documents()) {
      streams.push_back(textproc::Preprocess(doc.body, config.pipeline));
      streams.push_back(textproc::Preprocess(doc.reference_summary, config.metric));
    }
  }
  return streams;
}

TrainingData BuildTrainingData(const Corpus& corpus, const Vocabulary& vocab,
                               const ExperimentConfig& config) {
  const std::size_t max_len = config.model.max_len;
  const std::vector<Tokens> streams = SourceTokens(corpus, config);
  TrainingData data;
  for (std::size_t i = 0; i + 1 < streams.size(); i += 2) {
    auto src = Truncate(vocab.Encode(streams[i], false), max_len);
    auto tgt = Truncate(vocab.Encode(streams[i + 1], false), max_len - 1);
    if (src.empty() || tgt.empty()) {
      ++data.skipped;
      continue;
    }
    data.pairs.emplace_back(std::move(src), std::move(tgt));
  }
  if (data.pairs.empty()) throw Error(ErrorCode::kEmptyTrainingSet, "no usable training pairs");
  return data;
}

TrainOutcome TrainTransformer(const Corpus& corpus, const ExperimentConfig& config,
                              const transformer::ProgressFn& progress) {
  const std::vector<Tokens> streams = SourceTokens(corpus, config);
  Vocabulary vocab = Vocabulary::Build(streams, config.vocab_min_freq, config.vocab_max_size);
  const TrainingData data = BuildTrainingData(corpus, vocab, config);
  transformer::ModelConfig model_config = config.model;
  model_config.vocab_size = static_cast<std::uint32_t>(vocab.size());
  transformer::TransformerModel model(model_config);
  auto result = transformer::TrainModel(model, data.pairs, config.train, progress);
  return TrainOutcome{TransformerSystem{std::move(model), std::move(vocab)},
                      std::move(result.loss_history), data.pairs.size()};
}

Report RunExperiment(const ExperimentConfig& config, const Corpus* corpus,
                     const TransformerSystem* transformer) {
  const auto start = std::chrono::steady_clock::now();
  std::optional<Corpus> loaded;
  if (corpus == nullptr) {
    loaded = LoadCorpus(config.corpus_root, config.layout);
    corpus = &*loaded;
  }
  std::optional<Corpus> test;
  if (config.eval_subset == EvalSubset::kTest) test = SplitCorpus(*corpus, config.split).test;
  const Corpus& evaluated = test ? *test : *corpus;

  std::optional<TransformerSystem> owned;
  const bool wants_transformer = std::find(config.systems.begin(), config.systems.end(),
                                           SystemKind::kTransformer) != config.systems.end();
  if (wants_transformer && transformer == nullptr) {
    if (config.transformer_checkpoint.empty()) {
      throw Error(ErrorCode::kMissingRequired, "the transformer system needs transformer.checkpoint");
    }
    auto ckpt = transformer::LoadCheckpoint(config.transformer_checkpoint);
    owned.emplace(TransformerSystem{std::move(ckpt.model), std::move(ckpt.vocab)});
    transformer = &*owned;
  }

  Report report;
  ReportMetadata& meta = report.metadata;
  meta.corpus_documents = corpus->size();
  meta.corpus_categories = corpus->categories().size();
  meta.evaluated_documents = evaluated.size();
  meta.eval_subset = config.eval_subset == EvalSubset::kAll ? "all" : "test";
  meta.split_seed = config.split.seed;
  meta.train_fraction = config.split.train_fraction;
  meta.budget = config.budget.Describe();
  meta.random_seed = config.random_seed;
  meta.config_digest = ConfigDigest(config);

  rouge::ScoreTable& table = report.table;
  table.variants = config.rouge_variants;
  table.pair_count = evaluated.size();

  std::vector<Tokens> references;
  references.reserve(evaluated.size());
  for (const auto& doc : evaluated.documents()) {
    references.push_back(textproc::Preprocess(doc.reference_summary, config.metric));
  }

  for (SystemKind kind : config.systems) {
    const std::string name(SystemName(kind));
    table.systems.push_back(name);
    std::vector<rouge::TokenPair> pairs;
    std::size_t skipped = 0;
    for (std::size_t i = 0; i < evaluated.size(); ++i) {
      const Document& doc = evaluated.documents()[i];
      try {
        std::string summary;
        if (kind == SystemKind::kTransformer) {
          summary = SummarizeTransformer(*transformer, doc.body, config, TokenBudget(doc.body, config));
        } else {
          summary = SummarizeExtractive(kind, doc.body, doc.id, config);
        }
        pairs.emplace_back(textproc::Preprocess(summary, config.metric), references[i]);
      } catch (const Error&) {
        ++skipped;
      }
    }
    meta.skipped[name] = skipped;
    auto& row = table.rows[name];
    if (pairs.empty()) {
      for (const auto& v : table.variants) row[v] = rouge::RougeScore{};
    } else {
      row = rouge::EvaluatePairs(pairs, table.variants);
    }
  }
  meta.wall_clock_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace sumbench::harness
