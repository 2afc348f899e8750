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

#include <string>
#include <vector>

#include "sumbench/corpus.h"
#include "sumbench/random.h"

namespace sumbench::fixtures {

struct KeyedDocument {
  Document document;
  std::vector<std::size_t> key_sentences;  // ascending
  std::size_t sentence_count = 0;
};

// Invented word, unique per (document, slot). Three consonant-vowel-consonant
// syllables ending in k/m/t, which no stemming rule touches.
inline std::string SyntheticWord(std::size_t doc, std::size_t slot) {
  static const char* kOnset[] = {"b", "d", "f", "g", "l", "n", "p", "r", "v", "z"};
  static const char* kVowel[] = {"a", "o", "u"};
  static const char* kCoda[] = {"k", "m", "t"};
  std::size_t code = doc * 64 + slot;
  std::string word;
  for (int syllable = 0; syllable < 3; ++syllable) {
    word += kOnset[code % 10];
    code /= 10;
    word += kVowel[code % 3];
    code /= 3;
    word += kCoda[syllable];
  }
  return word;
}

inline std::string Capitalize(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(s[0] - 'a' + 'A');
  return s;
}

// Documents of 5 to 8 sentences. Two "key" sentences use words found nowhere
// else in the document; every other sentence is a permutation of the same
// five filler words. A key sentence of k <= 6 words therefore scores
// ln(n) / k under tf-idf while a filler scores ln(n / (n - 2)) / 5, so the
// keys are always the top two, and the reference is exactly those two
// sentences in document order.
inline std::vector<KeyedDocument> KeyedDocuments(std::size_t count, std::uint64_t seed) {
  std::vector<std::string> filler = {"market", "council", "weather", "season", "harbor"};
  Rng rng(seed);
  std::vector<KeyedDocument> out;
  for (std::size_t d = 0; d < count; ++d) {
    const std::size_t n = 5 + static_cast<std::size_t>(rng.UniformIndex(4));
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    rng.Shuffle(order);
    std::vector<std::size_t> keys = {std::min(order[0], order[1]), std::max(order[0], order[1])};

    std::vector<std::string> sentences;
    std::size_t slot = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::string> words;
      if (i == keys[0] || i == keys[1]) {
        const std::size_t k = 3 + static_cast<std::size_t>(rng.UniformIndex(4));
        for (std::size_t w = 0; w < k; ++w) words.push_back(SyntheticWord(d, slot++));
      } else {
        words = filler;
        rng.Shuffle(words);
      }
      std::string s = Capitalize(words[0]);
      for (std::size_t w = 1; w < words.size(); ++w) s += " " + words[w];
      sentences.push_back(s + ".");
    }
    KeyedDocument kd;
    kd.sentence_count = n;
    kd.key_sentences = keys;
    kd.document.category = d % 2 == 0 ? "alpha" : "beta";
    kd.document.id = kd.document.category + "/" + std::to_string(1000 + d);
    kd.document.title = "Document " + std::to_string(d);
    for (std::size_t i = 0; i < n; ++i) kd.document.body += (i ? " " : "") + sentences[i];
    kd.document.reference_summary = sentences[keys[0]] + " " + sentences[keys[1]];
    out.push_back(std::move(kd));
  }
  return out;
}

inline Corpus KeyedCorpus(std::size_t count, std::uint64_t seed) {
  std::vector<Document> docs;
  for (auto& kd : KeyedDocuments(count, seed)) docs.push_back(kd.document);
  return Corpus(std::move(docs));
}

}  // namespace sumbench::fixtures
