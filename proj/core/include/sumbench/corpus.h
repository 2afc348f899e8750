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
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace sumbench {

struct Document {
  std::string id;  // "<category>/<file stem>", e.g. "business/001"
  std::string category;
  std::string title;  // first line of the article file
  std::string body;   // rest of the article
  std::string reference_summary;

  bool operator==(const Document&) const = default;
};

// Immutable, ordered by (category, id).
class Corpus {
 public:
  Corpus() = default;
  // Sorts the documents. Throws kInvalidArgument on duplicate ids and
  // kEmptyDocument on a blank body or summary.
  explicit Corpus(std::vector<Document> documents);

  const std::vector<Document>& documents() const { return documents_; }
  const std::set<std::string>& categories() const { return categories_; }
  std::size_t size() const { return documents_.size(); }
  bool empty() const { return documents_.empty(); }
  std::map<std::string, std::size_t> CategoryCounts() const;

  bool operator==(const Corpus&) const = default;

 private:
  std::vector<Document> documents_;
  std::set<std::string> categories_;
};

struct CorpusLayout {
  std::string articles_dir = "News Articles";
  std::string summaries_dir = "Summaries";
};

// Reads <root>/<articles_dir>/<category>/<name>.txt paired with
// <root>/<summaries_dir>/<category>/<name>.txt. Line endings become "\n".
// Errors: kMissingRoot, kUnpairedDocument, kEncodingError, kEmptyCorpus,
// kEmptyDocument.
// Reads one article file: the first line is the title, the rest the body.
// With has_title false the whole file is the body. Throws kIoError,
// kEncodingError, kEmptyDocument.
Document ReadArticle(const std::filesystem::path& path, bool has_title = true);

Corpus LoadCorpus(const std::filesystem::path& root, const CorpusLayout& layout = {});

struct SplitSpec {
  double train_fraction = 0.8;
  std::uint64_t seed = 7;
};

struct CorpusSplit {
  Corpus train;
  Corpus test;
};

// Seeded shuffle, then |train| = round(fraction * n) clamped to [1, n - 1].
// Throws kCorpusTooSmall for fewer than 2 documents and kInvalidArgument for
// a fraction outside (0, 1).
CorpusSplit SplitCorpus(const Corpus& corpus, const SplitSpec& spec);

bool IsValidUtf8(std::string_view bytes);

}  // namespace sumbench
