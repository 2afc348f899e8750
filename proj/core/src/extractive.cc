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

#include "sumbench/extractive.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "sumbench/error.h"
#include "sumbench/random.h"
#include "sumbench/rouge.h"
#include "sumbench/vocabulary.h"

namespace sumbench {

using textproc::PipelineConfig;
using textproc::SentenceList;
using textproc::Tokens;

ExtractBudget ExtractBudget::Count(long k) {
  if (k < 1) throw Error(ErrorCode::kBudgetInvalid, "sentence count must be >= 1");
  return ExtractBudget(Mode::kCount, k, 0.0);
}

ExtractBudget ExtractBudget::Ratio(double r) {
  if (!(r > 0.0 && r <= 1.0)) throw Error(ErrorCode::kBudgetInvalid, "ratio must lie in (0, 1]");
  return ExtractBudget(Mode::kRatio, 0, r);
}

std::size_t ExtractBudget::Resolve(std::size_t n) const {
  if (n == 0) throw Error(ErrorCode::kBudgetInvalid, "cannot resolve a budget for 0 sentences");
  if (mode_ == Mode::kCount) return std::min(static_cast<std::size_t>(count_), n);
  const double m = std::round(ratio_ * static_cast<double>(n));
  return std::clamp<std::size_t>(static_cast<std::size_t>(m), 1, n);
}

std::string ExtractBudget::Describe() const {
  std::ostringstream out;
  if (mode_ == Mode::kCount) {
    out << "count " << count_;
  } else {
    out << "ratio " << ratio_;
  }
  return out.str();
}

std::vector<SentenceScore> TfidfSentenceScores(const SentenceList& sentences,
                                               const PipelineConfig& config) {
  if (sentences.empty()) throw Error(ErrorCode::kNoSentences, "document has no sentences");
  const std::size_t n = sentences.size();
  std::vector<Tokens> tokens(n);
  std::map<std::string, std::size_t> df;
  for (std::size_t i = 0; i < n; ++i) {
    tokens[i] = textproc::Preprocess(sentences.sentences[i], config);
    Tokens unique = tokens[i];
    std::sort(unique.begin(), unique.end());
    unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
    for (const auto& w : unique) ++df[w];
  }

  std::vector<SentenceScore> scores(n);
  for (std::size_t i = 0; i < n; ++i) {
    scores[i].index = i;
    if (tokens[i].empty()) continue;
    std::map<std::string, std::size_t> tf;
    for (const auto& w : tokens[i]) ++tf[w];
    const double len = static_cast<double>(tokens[i].size());
    double total = 0.0;
    for (const auto& w : tokens[i]) {
      const double idf = std::log(static_cast<double>(n) / static_cast<double>(df.at(w)));
      total += static_cast<double>(tf.at(w)) / len * idf;
    }
    scores[i].score = total / len;
  }
  return scores;
}

std::vector<std::size_t> SelectTop(const std::vector<SentenceScore>& scores, std::size_t m) {
  std::vector<SentenceScore> ranked = scores;
  std::stable_sort(ranked.begin(), ranked.end(), [](const SentenceScore& a, const SentenceScore& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.index < b.index;
  });
  std::vector<std::size_t> picked;
  for (std::size_t i = 0; i < std::min(m, ranked.size()); ++i) picked.push_back(ranked[i].index);
  std::sort(picked.begin(), picked.end());
  return picked;
}

std::string JoinSentences(const SentenceList& sentences, const std::vector<std::size_t>& indices) {
  std::string out;
  for (std::size_t idx : indices) {
    if (!out.empty()) out += ' ';
    out += sentences.sentences.at(idx);
  }
  return out;
}

std::string ExtractSummary(const SentenceList& sentences, const std::vector<SentenceScore>& scores,
                           const ExtractBudget& budget) {
  if (scores.size() != sentences.size()) {
    throw Error(ErrorCode::kBudgetInvalid, "score count does not match sentence count");
  }
  for (const auto& s : scores) {
    if (s.index >= sentences.size()) {
      throw Error(ErrorCode::kBudgetInvalid, "score index outside the document");
    }
  }
  return JoinSentences(sentences, SelectTop(scores, budget.Resolve(sentences.size())));
}

std::vector<SentenceScore> GapSentenceScores(const SentenceList& sentences,
                                             const PipelineConfig& config) {
  const std::size_t n = sentences.size();
  if (n < 2) throw Error(ErrorCode::kTooFewSentences, "gap-sentence selection needs >= 2 sentences");
  std::vector<SentenceScore> scores(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string rest;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      if (!rest.empty()) rest += ' ';
      rest += sentences.sentences[j];
    }
    const Tokens candidate = textproc::Preprocess(sentences.sentences[i], config);
    const Tokens reference = textproc::Preprocess(rest, config);
    scores[i] = SentenceScore{i, rouge::RougeN(candidate, reference, 1).f1};
  }
  return scores;
}

std::vector<std::size_t> GapSentenceSelect(const SentenceList& sentences, double ratio,
                                           const PipelineConfig& config) {
  if (!(ratio > 0.0 && ratio < 1.0)) {
    throw Error(ErrorCode::kBudgetInvalid, "gap ratio must lie in (0, 1)");
  }
  const auto scores = GapSentenceScores(sentences, config);
  const std::size_t n = sentences.size();
  const double m = std::round(ratio * static_cast<double>(n));
  return SelectTop(scores, std::clamp<std::size_t>(static_cast<std::size_t>(m), 1, n - 1));
}

std::string BaselineSummary(const SentenceList& sentences, const ExtractBudget& budget,
                            BaselineStrategy strategy, std::uint64_t seed) {
  const std::size_t m = budget.Resolve(sentences.size());
  std::vector<std::size_t> order(sentences.size());
  std::iota(order.begin(), order.end(), 0);
  if (strategy == BaselineStrategy::kRandom) {
    Rng rng(seed);
    rng.Shuffle(order);
  }
  order.resize(m);
  std::sort(order.begin(), order.end());
  return JoinSentences(sentences, order);
}

PseudoPairSet MakePseudoPairs(const Corpus& corpus, double ratio, const PipelineConfig& config) {
  return MakePseudoPairs(corpus, ratio, config, config);
}

PseudoPairSet MakePseudoPairs(const Corpus& corpus, double ratio, const PipelineConfig& config,
                              const PipelineConfig& target_config) {
  PseudoPairSet result;
  const std::string mask(Vocabulary::MaskToken());
  for (const auto& doc : corpus.documents()) {
    const SentenceList sentences = textproc::SegmentSentences(doc.body);
    if (sentences.size() < 2) {
      ++result.skipped;
      continue;
    }
    const auto gaps = GapSentenceSelect(sentences, ratio, config);
    PseudoPair pair;
    pair.document_id = doc.id;
    std::size_t g = 0;
    for (std::size_t i = 0; i < sentences.size(); ++i) {
      const std::string& sentence = sentences.sentences[i];
      if (g < gaps.size() && gaps[g] == i) {
        pair.source.push_back(mask);
        const Tokens tokens = textproc::Preprocess(sentence, target_config);
        pair.target.insert(pair.target.end(), tokens.begin(), tokens.end());
        ++g;
      } else {
        const Tokens tokens = textproc::Preprocess(sentence, config);
        pair.source.insert(pair.source.end(), tokens.begin(), tokens.end());
      }
    }
    result.pairs.push_back(std::move(pair));
  }
  if (result.pairs.empty()) {
    throw Error(ErrorCode::kNoUsablePairs, "no document has at least 2 sentences");
  }
  return result;
}

}  // namespace sumbench
