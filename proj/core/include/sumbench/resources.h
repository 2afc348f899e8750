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

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

// Built-in language resources. The sources live in core/resources/ as plain
// UTF-8 text (one entry per line, tab-separated for tables, '#' comments) and
// are compiled into the library.
namespace sumbench::resources {

// Raw file contents, exactly as shipped.
std::string_view StopwordsText();
std::string_view ContractionsText();
std::string_view AbbreviationsText();
std::string_view LemmaExceptionsText();
std::string_view LemmaWordsText();

// Parsed views, built once on first use.
const std::vector<std::string>& Stopwords();
const std::map<std::string, std::string>& Contractions();
const std::set<std::string>& Abbreviations();
const std::map<std::string, std::string>& LemmaExceptions();
const std::set<std::string>& LemmaWords();

// Parsers shared with tests and the stopword-file config option.
std::vector<std::string> ParseList(std::string_view text);
std::map<std::string, std::string> ParseTable(std::string_view text);

}  // namespace sumbench::resources
