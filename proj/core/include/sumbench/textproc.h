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
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sumbench::textproc {

using Tokens = std::vector<std::string>;

enum class Morphology { kNone, kStem, kLemmatize };

std::string_view MorphologyName(Morphology m);
// Accepts "none", "stem", "lemmatize". Throws Error(kTypeError) otherwise.
Morphology ParseMorphology(std::string_view name);

// Preprocessing switches. Stage order is fixed:
// contractions -> case -> tokenize/punctuation -> stopwords -> morphology.
struct PipelineConfig {
  bool lowercase = true;
  bool strip_punctuation = true;
  bool expand_contractions = true;
  bool remove_stopwords = true;
  Morphology morphology = Morphology::kStem;
  std::set<std::string> stopword_list = DefaultStopwordSet();

  // Model-input / scoring pipeline: everything on, Porter stemming.
  static PipelineConfig Full(Morphology morphology = Morphology::kStem);
  // Metric tokenization: lowercase + punctuation strip only.
  static PipelineConfig Metric();

  static std::set<std::string> DefaultStopwordSet();

  // Throws Error(kInvalidArgument) when a stopword entry is empty, has
  // uppercase letters, or contains punctuation.
  void Validate() const;

  bool operator==(const PipelineConfig&) const = default;
};

struct SentenceList {
  std::vector<std::string> sentences;
  // [start, end) byte offsets into the source text.
  std::vector<std::pair<std::size_t, std::size_t>> offsets;

  std::size_t size() const { return sentences.size(); }
  bool empty() const { return sentences.empty(); }
};

// The punctuation set removed by the pipeline: !"#$%&'()*+,-./:;<=>?@[\]^_{}~`
bool IsPunctuation(char c);

// True for the whitespace code point starting at text[pos]; writes its byte
// length to *len. Covers ASCII whitespace and the Unicode White_Space set.
bool IsWhitespaceAt(std::string_view text, std::size_t pos, std::size_t* len);

std::string ExpandContractions(std::string_view text);

SentenceList SegmentSentences(std::string_view text);

Tokens NormalizeAndTokenize(std::string_view text, const PipelineConfig& config);

Tokens FilterStopwords(Tokens tokens, const PipelineConfig& config);

// Classic Porter (1980) stemmer, matching the reference C implementation.
std::string PorterStem(std::string_view word);

// Dictionary lemmatizer: irregular-form table, then suffix rules whose output
// must be a known base word. Unknown words are returned unchanged.
std::string Lemmatize(std::string_view word);

std::string ReduceMorphology(std::string_view token, Morphology mode);

// Full pipeline. Morphology is applied until the token stops changing and the
// stopword filter runs again afterwards, which makes the pipeline idempotent:
// Preprocess(Join(Preprocess(x))) == Preprocess(x).
Tokens Preprocess(std::string_view text, const PipelineConfig& config);

std::string Join(const Tokens& tokens, std::string_view separator = " ");

}  // namespace sumbench::textproc
