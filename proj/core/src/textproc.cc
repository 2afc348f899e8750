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

#include "sumbench/textproc.h"

#include <algorithm>
#include <string>

#include "sumbench/error.h"
#include "sumbench/resources.h"

namespace sumbench::textproc {
namespace {

constexpr std::string_view kPunctuation = "!\"#$%&'()*+,-./:;<=>?@[\\]^_{}~`";

bool IsAsciiUpper(char c) { return c >= 'A' && c <= 'Z'; }
bool IsAsciiLower(char c) { return c >= 'a' && c <= 'z'; }
bool IsAsciiAlpha(char c) { return IsAsciiUpper(c) || IsAsciiLower(c); }
bool IsAsciiDigit(char c) { return c >= '0' && c <= '9'; }

// Letters, digits and any byte of a multi-byte UTF-8 sequence count as word
// characters for contraction boundaries.
bool IsWordByte(char c) {
  return IsAsciiAlpha(c) || IsAsciiDigit(c) || static_cast<unsigned char>(c) >= 0x80;
}

char ToLowerAscii(char c) { return IsAsciiUpper(c) ? static_cast<char>(c - 'A' + 'a') : c; }
char ToUpperAscii(char c) { return IsAsciiLower(c) ? static_cast<char>(c - 'a' + 'A') : c; }

std::string LowerAscii(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), ToLowerAscii);
  return out;
}

// Re-applies the casing of the matched surface form to its expansion.
std::string MatchCase(std::string_view surface, const std::string& expansion) {
  int letters = 0;
  bool all_upper = true;
  for (char c : surface) {
    if (!IsAsciiAlpha(c)) continue;
    ++letters;
    if (!IsAsciiUpper(c)) all_upper = false;
  }
  std::string out = expansion;
  if (letters >= 2 && all_upper) {
    std::transform(out.begin(), out.end(), out.begin(), ToUpperAscii);
  } else if (!surface.empty() && IsAsciiUpper(surface.front()) && !out.empty()) {
    out.front() = ToUpperAscii(out.front());
  }
  return out;
}

bool AllLowerAlpha(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), IsAsciiLower);
}

}  // namespace

std::string_view MorphologyName(Morphology m) {
  switch (m) {
    case Morphology::kNone: return "none";
    case Morphology::kStem: return "stem";
    case Morphology::kLemmatize: return "lemmatize";
  }
  return "none";
}

Morphology ParseMorphology(std::string_view name) {
  if (name == "none") return Morphology::kNone;
  if (name == "stem") return Morphology::kStem;
  if (name == "lemmatize") return Morphology::kLemmatize;
  throw Error(ErrorCode::kTypeError,
              "morphology must be none|stem|lemmatize, got '" + std::string(name) + "'");
}

std::set<std::string> PipelineConfig::DefaultStopwordSet() {
  const auto& list = resources::Stopwords();
  return std::set<std::string>(list.begin(), list.end());
}

PipelineConfig PipelineConfig::Full(Morphology morphology) {
  PipelineConfig config;
  config.morphology = morphology;
  return config;
}

PipelineConfig PipelineConfig::Metric() {
  PipelineConfig config;
  config.expand_contractions = false;
  config.remove_stopwords = false;
  config.morphology = Morphology::kNone;
  return config;
}

void PipelineConfig::Validate() const {
  for (const auto& word : stopword_list) {
    if (word.empty()) throw Error(ErrorCode::kInvalidArgument, "empty stopword entry");
    for (char c : word) {
      if (IsAsciiUpper(c) || IsPunctuation(c)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "stopword entries must be lowercase and punctuation-free: '" + word + "'");
      }
    }
  }
}

bool IsPunctuation(char c) { return kPunctuation.find(c) != std::string_view::npos; }

bool IsWhitespaceAt(std::string_view text, std::size_t pos, std::size_t* len) {
  const auto byte = [&](std::size_t i) -> unsigned char {
    return i < text.size() ? static_cast<unsigned char>(text[i]) : 0;
  };
  const unsigned char b0 = byte(pos);
  if (b0 == ' ' || (b0 >= 0x09 && b0 <= 0x0D) || (b0 >= 0x1C && b0 <= 0x1F)) {
    *len = 1;
    return true;
  }
  const unsigned char b1 = byte(pos + 1);
  const unsigned char b2 = byte(pos + 2);
  if (b0 == 0xC2 && (b1 == 0x85 || b1 == 0xA0)) {  // U+0085, U+00A0
    *len = 2;
    return true;
  }
  if (b0 == 0xE1 && b1 == 0x9A && b2 == 0x80) {  // U+1680
    *len = 3;
    return true;
  }
  if (b0 == 0xE2 && b1 == 0x80 &&
      ((b2 >= 0x80 && b2 <= 0x8A) || b2 == 0xA8 || b2 == 0xA9 || b2 == 0xAF)) {
    *len = 3;  // U+2000..U+200A, U+2028, U+2029, U+202F
    return true;
  }
  if (b0 == 0xE2 && b1 == 0x81 && b2 == 0x9F) {  // U+205F
    *len = 3;
    return true;
  }
  if (b0 == 0xE3 && b1 == 0x80 && b2 == 0x80) {  // U+3000
    *len = 3;
    return true;
  }
  return false;
}

std::string ExpandContractions(std::string_view text) {
  const auto& table = resources::Contractions();
  std::string out;
  out.reserve(text.size() + text.size() / 8);
  std::size_t i = 0;
  while (i < text.size()) {
    const bool at_boundary = i == 0 || !IsWordByte(text[i - 1]);
    if (!at_boundary || !IsAsciiAlpha(text[i])) {
      out.push_back(text[i]);
      ++i;
      continue;
    }
    // Maximal run of letters and apostrophes, minus trailing apostrophes
    // (closing quotes).
    std::size_t end = i;
    while (end < text.size() && (IsAsciiAlpha(text[end]) || text[end] == '\'')) ++end;
    std::size_t core_end = end;
    while (core_end > i && text[core_end - 1] == '\'') --core_end;
    const bool closed = end >= text.size() || !IsWordByte(text[end]);
    std::string_view surface = text.substr(i, core_end - i);
    if (closed) {
      auto it = table.find(LowerAscii(surface));
      if (it != table.end()) {
        out += MatchCase(surface, it->second);
        i = core_end;
        continue;
      }
    }
    out.append(text.substr(i, end - i));
    i = end;
  }
  return out;
}

SentenceList SegmentSentences(std::string_view text) {
  const auto& abbreviations = resources::Abbreviations();
  const auto is_space = [&](std::size_t pos, std::size_t* len) {
    return IsWhitespaceAt(text, pos, len);
  };
  const auto skip_space = [&](std::size_t pos) {
    std::size_t len = 0;
    while (pos < text.size() && is_space(pos, &len)) pos += len;
    return pos;
  };
  const auto is_terminator = [](char c) { return c == '.' || c == '!' || c == '?'; };
  const auto is_closer = [](char c) { return c == '"' || c == '\'' || c == ')' || c == ']'; };
  const auto is_opener = [](char c) { return c == '"' || c == '\'' || c == '('; };

  SentenceList result;
  const auto emit = [&](std::size_t start, std::size_t end) {
    // Trim trailing whitespace so gaps between sentences hold all of it.
    std::size_t last_good = start;
    std::size_t pos = start;
    while (pos < end) {
      std::size_t len = 0;
      if (is_space(pos, &len)) {
        pos += len;
      } else {
        ++pos;
        last_good = pos;
      }
    }
    if (last_good > start) {
      result.offsets.emplace_back(start, last_good);
      result.sentences.emplace_back(text.substr(start, last_good - start));
    }
  };

  std::size_t start = skip_space(0);
  std::size_t pos = start;
  while (pos < text.size()) {
    if (!is_terminator(text[pos])) {
      ++pos;
      continue;
    }
    std::size_t end = pos + 1;
    while (end < text.size() && is_terminator(text[end])) ++end;
    while (end < text.size() && is_closer(text[end])) ++end;

    bool boundary = false;
    std::size_t len = 0;
    if (end == text.size()) {
      boundary = true;
    } else if (is_space(end, &len)) {
      const std::size_t next = skip_space(end);
      if (next == text.size()) {
        boundary = true;
      } else if (IsAsciiUpper(text[next])) {
        boundary = true;
      } else if (is_opener(text[next]) && next + 1 < text.size() && IsAsciiUpper(text[next + 1])) {
        boundary = true;
      }
    }

    if (boundary && text[pos] == '.' && end == pos + 1) {
      // The word ending at this period, e.g. "Mr." or "U.S.".
      std::size_t word_start = start;
      for (std::size_t k = start; k < pos;) {
        std::size_t l = 0;
        if (is_space(k, &l)) {
          k += l;
          word_start = k;
        } else {
          ++k;
        }
      }
      while (word_start < pos && is_opener(text[word_start])) ++word_start;
      if (abbreviations.count(LowerAscii(text.substr(word_start, end - word_start))) > 0) {
        boundary = false;
      }
    }

    if (boundary) {
      emit(start, end);
      start = skip_space(end);
      pos = start;
    } else {
      pos = end;
    }
  }
  if (start < text.size()) emit(start, text.size());
  return result;
}

Tokens NormalizeAndTokenize(std::string_view text, const PipelineConfig& config) {
  std::string work = config.expand_contractions ? ExpandContractions(text) : std::string(text);
  if (config.lowercase) {
    std::transform(work.begin(), work.end(), work.begin(), ToLowerAscii);
  }

  Tokens tokens;
  std::string word;
  std::string punct;
  const auto flush_word = [&] {
    if (!word.empty()) tokens.push_back(std::move(word));
    word.clear();
  };
  const auto flush_punct = [&] {
    if (!punct.empty() && !config.strip_punctuation) tokens.push_back(std::move(punct));
    punct.clear();
  };

  std::size_t i = 0;
  while (i < work.size()) {
    std::size_t ws_len = 0;
    if (IsWhitespaceAt(work, i, &ws_len)) {
      flush_word();
      flush_punct();
      i += ws_len;
      continue;
    }
    const char c = work[i];
    if (IsPunctuation(c)) {
      std::size_t next_ws = 0;
      const bool intra_token =
          !config.strip_punctuation && (c == '\'' || c == '-') && !word.empty() &&
          i + 1 < work.size() && !IsPunctuation(work[i + 1]) &&
          !IsWhitespaceAt(work, i + 1, &next_ws);
      if (intra_token) {
        word.push_back(c);
      } else {
        flush_word();
        punct.push_back(c);
      }
    } else {
      flush_punct();
      word.push_back(c);
    }
    ++i;
  }
  flush_word();
  flush_punct();
  return tokens;
}

Tokens FilterStopwords(Tokens tokens, const PipelineConfig& config) {
  if (!config.remove_stopwords) return tokens;
  std::erase_if(tokens, [&](const std::string& t) { return config.stopword_list.count(t) > 0; });
  return tokens;
}

std::string ReduceMorphology(std::string_view token, Morphology mode) {
  switch (mode) {
    case Morphology::kStem: return PorterStem(token);
    case Morphology::kLemmatize: return Lemmatize(token);
    case Morphology::kNone: break;
  }
  return std::string(token);
}

Tokens Preprocess(std::string_view text, const PipelineConfig& config) {
  Tokens tokens = FilterStopwords(NormalizeAndTokenize(text, config), config);
  if (config.morphology == Morphology::kNone) return tokens;

  constexpr int kMaxRounds = 8;
  for (auto& token : tokens) {
    // Only plain lowercase words are reduced; numbers, mixed case and
    // non-ASCII tokens pass through.
    if (!AllLowerAlpha(token)) continue;
    for (int round = 0; round < kMaxRounds; ++round) {
      std::string reduced = ReduceMorphology(token, config.morphology);
      if (reduced == token || reduced.empty()) break;
      token = std::move(reduced);
    }
  }
  return FilterStopwords(std::move(tokens), config);
}

std::string Join(const Tokens& tokens, std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out.append(separator);
    out += tokens[i];
  }
  return out;
}

}  // namespace sumbench::textproc
