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

#include "sumbench/resources.h"

#include "sumbench/error.h"

namespace sumbench::resources {
namespace data {
extern const std::string_view kStopwords;
extern const std::string_view kContractions;
extern const std::string_view kAbbreviations;
extern const std::string_view kLemmaExceptions;
extern const std::string_view kLemmaWords;
}  // namespace data

namespace {

std::string_view TrimLine(std::string_view line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
  while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
  return line;
}

template <typename Fn>
void ForEachEntryLine(std::string_view text, Fn&& fn) {
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = TrimLine(text.substr(pos, end - pos));
    if (!line.empty() && line.front() != '#') fn(line);
    pos = end + 1;
  }
}

}  // namespace

std::vector<std::string> ParseList(std::string_view text) {
  std::vector<std::string> out;
  ForEachEntryLine(text, [&](std::string_view line) { out.emplace_back(line); });
  return out;
}

std::map<std::string, std::string> ParseTable(std::string_view text) {
  std::map<std::string, std::string> out;
  ForEachEntryLine(text, [&](std::string_view line) {
    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw Error(ErrorCode::kInvalidArgument,
                  "table line without a tab separator: " + std::string(line));
    }
    out.emplace(std::string(line.substr(0, tab)), std::string(line.substr(tab + 1)));
  });
  return out;
}

std::string_view StopwordsText() { return data::kStopwords; }
std::string_view ContractionsText() { return data::kContractions; }
std::string_view AbbreviationsText() { return data::kAbbreviations; }
std::string_view LemmaExceptionsText() { return data::kLemmaExceptions; }
std::string_view LemmaWordsText() { return data::kLemmaWords; }

const std::vector<std::string>& Stopwords() {
  static const std::vector<std::string> kList = ParseList(StopwordsText());
  return kList;
}

const std::map<std::string, std::string>& Contractions() {
  static const std::map<std::string, std::string> kTable = ParseTable(ContractionsText());
  return kTable;
}

const std::set<std::string>& Abbreviations() {
  static const std::set<std::string> kSet = [] {
    auto list = ParseList(AbbreviationsText());
    return std::set<std::string>(list.begin(), list.end());
  }();
  return kSet;
}

const std::map<std::string, std::string>& LemmaExceptions() {
  static const std::map<std::string, std::string> kTable = ParseTable(LemmaExceptionsText());
  return kTable;
}

const std::set<std::string>& LemmaWords() {
  static const std::set<std::string> kSet = [] {
    auto list = ParseList(LemmaWordsText());
    return std::set<std::string>(list.begin(), list.end());
  }();
  return kSet;
}

}  // namespace sumbench::resources
