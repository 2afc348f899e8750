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

#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "test_util.h"

namespace sumbench {
namespace {

using ::sumbench::testing::TempDir;
using ::sumbench::testing::TestData;
using ::sumbench::testing::WriteFile;

Corpus SyntheticCorpus(std::size_t n) {
  std::vector<Document> docs;
  for (std::size_t i = 0; i < n; ++i) {
    Document d;
    d.category = i % 2 == 0 ? "even" : "odd";
    d.id = d.category + "/" + std::to_string(1000 + i);
    d.title = "Title";
    d.body = "Body " + std::to_string(i) + ".";
    d.reference_summary = "Summary.";
    docs.push_back(d);
  }
  return Corpus(std::move(docs));
}

TEST(LoadCorpusTest, ThreeDocumentFixture) {
  const Corpus c = LoadCorpus(TestData("mini_corpus"));
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c.categories(), (std::set<std::string>{"business", "sport"}));
  EXPECT_EQ(c.documents()[0].id, "business/001");
  EXPECT_EQ(c.documents()[0].title, "Retail sales climb ahead of holidays");
  EXPECT_TRUE(c.documents()[0].body.starts_with("Retail sales rose by 2.1%"));
  EXPECT_EQ(c.documents()[2].id, "sport/001");
}

TEST(LoadCorpusTest, TenDocumentFixtureCounts) {
  const Corpus c = LoadCorpus(TestData("bbc_fixture"));
  EXPECT_EQ(c.size(), 10u);
  EXPECT_EQ(c.categories().size(), 5u);
  const auto counts = c.CategoryCounts();
  std::size_t total = 0;
  for (const auto& [cat, n] : counts) total += n;
  EXPECT_EQ(total, c.size());
}

TEST(LoadCorpusTest, ReloadIsEqualAndOrdered) {
  const Corpus a = LoadCorpus(TestData("bbc_fixture"));
  const Corpus b = LoadCorpus(TestData("bbc_fixture"));
  EXPECT_EQ(a, b);
  for (std::size_t i = 1; i < a.size(); ++i) {
    const auto& p = a.documents()[i - 1];
    const auto& q = a.documents()[i];
    EXPECT_LT(std::tie(p.category, p.id), std::tie(q.category, q.id));
  }
}

TEST(LoadCorpusTest, Errors) {
  EXPECT_SUMBENCH_ERROR(LoadCorpus(TestData("does_not_exist")), ErrorCode::kMissingRoot);

  TempDir empty("empty");
  std::filesystem::create_directories(empty.path() / "News Articles");
  std::filesystem::create_directories(empty.path() / "Summaries");
  EXPECT_SUMBENCH_ERROR(LoadCorpus(empty.path()), ErrorCode::kEmptyCorpus);

  TempDir unpaired("unpaired");
  WriteFile(unpaired.path() / "News Articles/tech/001.txt", "T\n\nBody.");
  WriteFile(unpaired.path() / "Summaries/tech/002.txt", "Summary.");
  try {
    LoadCorpus(unpaired.path());
    ADD_FAILURE() << "expected UnpairedDocument";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnpairedDocument);
    EXPECT_NE(std::string(e.what()).find("tech/001"), std::string::npos);
  }

  TempDir bad_utf8("utf8");
  WriteFile(bad_utf8.path() / "News Articles/tech/001.txt", "T\n\nBody \xFF.");
  WriteFile(bad_utf8.path() / "Summaries/tech/001.txt", "Summary.");
  EXPECT_SUMBENCH_ERROR(LoadCorpus(bad_utf8.path()), ErrorCode::kEncodingError);

  TempDir blank("blank");
  WriteFile(blank.path() / "News Articles/tech/001.txt", "Title only\n   \n");
  WriteFile(blank.path() / "Summaries/tech/001.txt", "Summary.");
  EXPECT_SUMBENCH_ERROR(LoadCorpus(blank.path()), ErrorCode::kEmptyDocument);
}

TEST(LoadCorpusTest, NormalizesLineEndingsAndBom) {
  TempDir dir("crlf");
  WriteFile(dir.path() / "News Articles/a/x.txt", "\xEF\xBB\xBFHeadline\r\n\r\nLine one.\rLine two.\r\n");
  WriteFile(dir.path() / "Summaries/a/x.txt", "Sum.\r\n");
  const Corpus c = LoadCorpus(dir.path());
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.documents()[0].title, "Headline");
  EXPECT_EQ(c.documents()[0].body, "Line one.\nLine two.");
  EXPECT_EQ(c.documents()[0].reference_summary, "Sum.");
}

TEST(LoadCorpusTest, CustomLayout) {
  TempDir dir("layout");
  WriteFile(dir.path() / "articles/a/x.txt", "H\nBody.");
  WriteFile(dir.path() / "refs/a/x.txt", "Sum.");
  EXPECT_EQ(LoadCorpus(dir.path(), CorpusLayout{"articles", "refs"}).size(), 1u);
  EXPECT_SUMBENCH_ERROR(LoadCorpus(dir.path()), ErrorCode::kMissingRoot);
}

TEST(IsValidUtf8Test, Cases) {
  EXPECT_TRUE(IsValidUtf8("plain"));
  EXPECT_TRUE(IsValidUtf8("caf\xC3\xA9 \xE2\x82\xAC \xF0\x9F\x98\x80"));
  EXPECT_FALSE(IsValidUtf8("\xC0\xAF"));          // overlong '/'
  EXPECT_FALSE(IsValidUtf8("\xED\xA0\x80"));      // surrogate
  EXPECT_FALSE(IsValidUtf8("\xE2\x82"));          // truncated
  EXPECT_FALSE(IsValidUtf8("\xF4\x90\x80\x80"));  // above U+10FFFF
}

TEST(CorpusTest, RejectsDuplicatesAndBlanks) {
  Document d{"a/1", "a", "t", "body", "sum"};
  EXPECT_SUMBENCH_ERROR(Corpus({d, d}), ErrorCode::kInvalidArgument);
  Document blank = d;
  blank.reference_summary = " \n";
  EXPECT_SUMBENCH_ERROR(Corpus({blank}), ErrorCode::kEmptyDocument);
}

TEST(SplitCorpusTest, TenDocuments) {
  const Corpus c = SyntheticCorpus(10);
  const CorpusSplit s = SplitCorpus(c, SplitSpec{0.8, 7});
  EXPECT_EQ(s.train.size(), 8u);
  EXPECT_EQ(s.test.size(), 2u);
  std::multiset<std::string> ids;
  for (const auto& d : s.train.documents()) ids.insert(d.id);
  for (const auto& d : s.test.documents()) ids.insert(d.id);
  std::multiset<std::string> original;
  for (const auto& d : c.documents()) original.insert(d.id);
  EXPECT_EQ(ids, original);

  const CorpusSplit again = SplitCorpus(c, SplitSpec{0.8, 7});
  EXPECT_EQ(again.train, s.train);
  EXPECT_EQ(again.test, s.test);
}

TEST(SplitCorpusTest, FullScaleCounts) {
  const CorpusSplit s = SplitCorpus(SyntheticCorpus(2225), SplitSpec{0.9, 1});
  EXPECT_EQ(s.train.size(), 2003u);
  EXPECT_EQ(s.test.size(), 222u);
}

TEST(SplitCorpusTest, ClampsAndValidates) {
  const Corpus two = SyntheticCorpus(2);
  EXPECT_EQ(SplitCorpus(two, SplitSpec{0.01, 1}).train.size(), 1u);
  EXPECT_EQ(SplitCorpus(two, SplitSpec{0.99, 1}).test.size(), 1u);
  EXPECT_SUMBENCH_ERROR(SplitCorpus(SyntheticCorpus(1), SplitSpec{0.5, 1}),
                        ErrorCode::kCorpusTooSmall);
  EXPECT_SUMBENCH_ERROR(SplitCorpus(two, SplitSpec{1.0, 1}), ErrorCode::kInvalidArgument);
  EXPECT_SUMBENCH_ERROR(SplitCorpus(two, SplitSpec{0.0, 1}), ErrorCode::kInvalidArgument);
}

TEST(SplitCorpusTest, SeedChangesOrder) {
  const Corpus c = SyntheticCorpus(50);
  EXPECT_NE(SplitCorpus(c, SplitSpec{0.5, 1}).train, SplitCorpus(c, SplitSpec{0.5, 2}).train);
}

}  // namespace
}  // namespace sumbench
