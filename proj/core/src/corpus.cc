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

#include "sumbench/corpus.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>

#include "sumbench/error.h"
#include "sumbench/random.h"

namespace sumbench {
namespace fs = std::filesystem;
namespace {

bool IsBlank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) != 0; });
}

std::string Trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string NormalizeNewlines(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\r') {
      out.push_back('\n');
      if (i + 1 < s.size() && s[i + 1] == '\n') ++i;
    } else {
      out.push_back(s[i]);
    }
  }
  return out;
}

std::string ReadText(const fs::path& path, const std::string& id) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (!IsValidUtf8(bytes)) {
    throw Error(ErrorCode::kEncodingError, "non-UTF-8 bytes in " + id + " (" + path.string() + ")");
  }
  if (bytes.starts_with("\xEF\xBB\xBF")) bytes.erase(0, 3);
  return NormalizeNewlines(bytes);
}

// Category name -> sorted .txt file stems.
std::map<std::string, std::set<std::string>> ScanTree(const fs::path& dir) {
  std::map<std::string, std::set<std::string>> tree;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_directory()) continue;
    const std::string category = entry.path().filename().string();
    if (category.starts_with(".")) continue;
    auto& names = tree[category];
    for (const auto& file : fs::directory_iterator(entry.path())) {
      if (!file.is_regular_file() || file.path().extension() != ".txt") continue;
      const std::string stem = file.path().stem().string();
      if (!stem.starts_with(".")) names.insert(stem);
    }
  }
  return tree;
}

void SplitTitle(const std::string& article, Document& doc) {
  const std::size_t newline = article.find('\n');
  doc.title = Trim(article.substr(0, newline));
  doc.body = newline == std::string::npos ? std::string() : Trim(article.substr(newline + 1));
}

}  // namespace

Document ReadArticle(const fs::path& path, bool has_title) {
  Document doc;
  doc.id = path.stem().string();
  const std::string text = ReadText(path, doc.id);
  if (has_title) {
    SplitTitle(text, doc);
  } else {
    doc.body = Trim(text);
  }
  if (IsBlank(doc.body)) throw Error(ErrorCode::kEmptyDocument, "no article body in " + path.string());
  return doc;
}

bool IsValidUtf8(std::string_view bytes) {
  std::size_t i = 0;
  const std::size_t n = bytes.size();
  while (i < n) {
    const unsigned char c = static_cast<unsigned char>(bytes[i]);
    std::size_t len;
    std::uint32_t cp;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      return false;
    }
    if (i + len > n) return false;
    for (std::size_t k = 1; k < len; ++k) {
      const unsigned char cc = static_cast<unsigned char>(bytes[i + k]);
      if ((cc & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (cc & 0x3F);
    }
    // Overlong forms, surrogates and values past U+10FFFF.
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) ||
        (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF) {
      return false;
    }
    i += len;
  }
  return true;
}

Corpus::Corpus(std::vector<Document> documents) : documents_(std::move(documents)) {
  std::sort(documents_.begin(), documents_.end(), [](const Document& a, const Document& b) {
    return std::tie(a.category, a.id) < std::tie(b.category, b.id);
  });
  for (std::size_t i = 0; i < documents_.size(); ++i) {
    const Document& doc = documents_[i];
    if (i > 0 && documents_[i - 1].id == doc.id) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate document id " + doc.id);
    }
    if (IsBlank(doc.body)) throw Error(ErrorCode::kEmptyDocument, doc.id + " has an empty body");
    if (IsBlank(doc.reference_summary)) {
      throw Error(ErrorCode::kEmptyDocument, doc.id + " has an empty reference summary");
    }
    categories_.insert(doc.category);
  }
}

std::map<std::string, std::size_t> Corpus::CategoryCounts() const {
  std::map<std::string, std::size_t> counts;
  for (const auto& doc : documents_) ++counts[doc.category];
  return counts;
}

Corpus LoadCorpus(const fs::path& root, const CorpusLayout& layout) {
  if (!fs::is_directory(root)) {
    throw Error(ErrorCode::kMissingRoot, "corpus root not found: " + root.string());
  }
  const fs::path articles_root = root / layout.articles_dir;
  const fs::path summaries_root = root / layout.summaries_dir;
  for (const auto& dir : {articles_root, summaries_root}) {
    if (!fs::is_directory(dir)) {
      throw Error(ErrorCode::kMissingRoot, "missing corpus subdirectory: " + dir.string());
    }
  }

  const auto articles = ScanTree(articles_root);
  const auto summaries = ScanTree(summaries_root);

  std::set<std::string> categories;
  for (const auto& [category, names] : articles) categories.insert(category);
  for (const auto& [category, names] : summaries) categories.insert(category);

  std::vector<Document> documents;
  for (const auto& category : categories) {
    static const std::set<std::string> kNone;
    const auto a_it = articles.find(category);
    const auto s_it = summaries.find(category);
    const auto& a_names = a_it == articles.end() ? kNone : a_it->second;
    const auto& s_names = s_it == summaries.end() ? kNone : s_it->second;
    for (const auto& name : a_names) {
      if (s_names.count(name) == 0) {
        throw Error(ErrorCode::kUnpairedDocument, category + "/" + name + " has no summary");
      }
    }
    for (const auto& name : s_names) {
      if (a_names.count(name) == 0) {
        throw Error(ErrorCode::kUnpairedDocument, category + "/" + name + " has no article");
      }
    }
    for (const auto& name : a_names) {
      Document doc;
      doc.id = category + "/" + name;
      doc.category = category;
      SplitTitle(ReadText(articles_root / category / (name + ".txt"), doc.id), doc);
      doc.reference_summary = Trim(ReadText(summaries_root / category / (name + ".txt"), doc.id));
      documents.push_back(std::move(doc));
    }
  }
  if (documents.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, "no article/summary pairs under " + root.string());
  }
  return Corpus(std::move(documents));
}

CorpusSplit SplitCorpus(const Corpus& corpus, const SplitSpec& spec) {
  if (!(spec.train_fraction > 0.0 && spec.train_fraction < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "train_fraction must lie strictly in (0, 1)");
  }
  const std::size_t n = corpus.size();
  if (n < 2) throw Error(ErrorCode::kCorpusTooSmall, "need at least 2 documents to split");

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  Rng rng(spec.seed);
  rng.Shuffle(order);

  const double target = std::round(spec.train_fraction * static_cast<double>(n));
  const std::size_t n_train =
      std::clamp<std::size_t>(static_cast<std::size_t>(target), 1, n - 1);

  std::vector<Document> train, test;
  for (std::size_t i = 0; i < n; ++i) {
    (i < n_train ? train : test).push_back(corpus.documents()[order[i]]);
  }
  return CorpusSplit{Corpus(std::move(train)), Corpus(std::move(test))};
}

}  // namespace sumbench
