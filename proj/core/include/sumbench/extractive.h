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
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sumbench/corpus.h"
#include "sumbench/textproc.h"

namespace sumbench {

struct SentenceScore {
  std::size_t index = 0;
  double score = 0.0;

  bool operator==(const SentenceScore&) const = default;
};

// Summary length, either a fixed sentence count or a fraction of the document.
class ExtractBudget {
 public:
  enum class Mode { kCount, kRatio };

  // Throws kBudgetInvalid unless k >= 1.
  static ExtractBudget Count(long k);
  // Throws kBudgetInvalid unless r is in (0, 1].
  static ExtractBudget Ratio(double r);

  // count: min(k, n); ratio: clamp(round(r * n), 1, n). n must be >= 1.
  std::size_t Resolve(std::size_t n) const;

  Mode mode() const { return mode_; }
  long count() const { return count_; }
  double ratio() const { return ratio_; }
  std::string Describe() const;

  bool operator==(const ExtractBudget&) const = default;

 private:
  ExtractBudget(Mode mode, long count, double ratio) : mode_(mode), count_(count), ratio_(ratio) {}
  Mode mode_;
  long count_;
  double ratio_;
};

// Each sentence is a pseudo-document: tf(w, s) = count / |s|,
// idf(w) = ln(n / df(w)), score = mean of tf * idf over the sentence's token
// occurrences after preprocessing. Throws kNoSentences.
std::vector<SentenceScore> TfidfSentenceScores(const textproc::SentenceList& sentences,
                                               const textproc::PipelineConfig& config);

// Indices of the m highest scores (ties to the smaller index), ascending.
std::vector<std::size_t> SelectTop(const std::vector<SentenceScore>& scores, std::size_t m);

// Top-m sentences by score, emitted in document order joined by one space.
// Throws kBudgetInvalid when scores and sentences disagree in size or the
// document is empty.
std::string ExtractSummary(const textproc::SentenceList& sentences,
                           const std::vector<SentenceScore>& scores, const ExtractBudget& budget);

// ROUGE-1 F1 of each preprocessed sentence against the preprocessed
// concatenation of all other sentences. Throws kTooFewSentences.
std::vector<SentenceScore> GapSentenceScores(const textproc::SentenceList& sentences,
                                             const textproc::PipelineConfig& config);

// Top-m gap sentences with m = clamp(round(ratio * n), 1, n - 1), ascending.
// Throws kTooFewSentences and kBudgetInvalid (ratio outside (0, 1)).
std::vector<std::size_t> GapSentenceSelect(const textproc::SentenceList& sentences, double ratio,
                                           const textproc::PipelineConfig& config);

enum class BaselineStrategy { kLead, kRandom };

// Lead: the first m sentences. Random: m distinct sentences drawn with the
// seed, in document order.
std::string BaselineSummary(const textproc::SentenceList& sentences, const ExtractBudget& budget,
                            BaselineStrategy strategy, std::uint64_t seed = 0);

std::string JoinSentences(const textproc::SentenceList& sentences,
                          const std::vector<std::size_t>& indices);

struct PseudoPair {
  std::string document_id;
  textproc::Tokens source;  // gap sentences replaced by one mask token each
  textproc::Tokens target;  // gap sentences in document order
};

struct PseudoPairSet {
  std::vector<PseudoPair> pairs;
  std::size_t skipped = 0;  // documents with fewer than 2 sentences
};

// Gap-sentence supervision over a corpus. Selection and source tokens use
// `config`; target tokens use `target_config`. Throws kNoUsablePairs when
// every document is skipped.
PseudoPairSet MakePseudoPairs(const Corpus& corpus, double ratio,
                              const textproc::PipelineConfig& config,
                              const textproc::PipelineConfig& target_config);
PseudoPairSet MakePseudoPairs(const Corpus& corpus, double ratio,
                              const textproc::PipelineConfig& config);

}  // namespace sumbench
