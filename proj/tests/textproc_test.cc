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

#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "sumbench/corpus.h"
#include "sumbench/random.h"
#include "test_util.h"

namespace sumbench::textproc {
namespace {

using ::sumbench::testing::TestData;

TEST(ExpandContractionsTest, ReplacesTableEntries) {
  EXPECT_EQ(ExpandContractions("I can't go"), "I cannot go");
  EXPECT_EQ(ExpandContractions("it's late"), "it is late");
  EXPECT_EQ(ExpandContractions("They won't"), "They will not");
}

TEST(ExpandContractionsTest, EmptyAndSubstrings) {
  EXPECT_EQ(ExpandContractions(""), "");
  EXPECT_EQ(ExpandContractions("cantaloupe"), "cantaloupe");
  EXPECT_EQ(ExpandContractions("scan'tx"), "scan'tx");
}

TEST(ExpandContractionsTest, CaseInsensitiveMatch) {
  const std::string out = ExpandContractions("CAN'T stop");
  EXPECT_EQ(Preprocess(out, PipelineConfig::Metric()), (Tokens{"cannot", "stop"}));
}

TEST(SegmentSentencesTest, TwoSentences) {
  const SentenceList s = SegmentSentences("It rained. We left.");
  EXPECT_EQ(s.sentences, (std::vector<std::string>{"It rained.", "We left."}));
}

TEST(SegmentSentencesTest, AbbreviationDoesNotSplit) {
  EXPECT_EQ(SegmentSentences("Mr. Smith arrived.").sentences,
            (std::vector<std::string>{"Mr. Smith arrived."}));
  EXPECT_EQ(SegmentSentences("Dr. Ruiz met the U.S. Envoy today.").size(), 1u);
}

TEST(SegmentSentencesTest, EmptyAndUnterminated) {
  EXPECT_TRUE(SegmentSentences("").empty());
  EXPECT_TRUE(SegmentSentences("   \n ").empty());
  EXPECT_EQ(SegmentSentences("no terminator here").sentences,
            (std::vector<std::string>{"no terminator here"}));
}

TEST(SegmentSentencesTest, LowercaseFollowerDoesNotSplit) {
  EXPECT_EQ(SegmentSentences("It cost 2.5 dollars. ok then.").size(), 1u);
  EXPECT_EQ(SegmentSentences("Stop! Go? Yes.").size(), 3u);
}

// Offsets are increasing and disjoint, and the gaps between sentences are
// whitespace only, so stitching the pieces back reproduces the input.
void ExpectReconstructs(const std::string& text) {
  const SentenceList s = SegmentSentences(text);
  ASSERT_EQ(s.sentences.size(), s.offsets.size());
  std::string rebuilt;
  std::size_t cursor = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto [b, e] = s.offsets[i];
    ASSERT_LE(cursor, b);
    ASSERT_LT(b, e);
    const std::string gap = text.substr(cursor, b - cursor);
    EXPECT_TRUE(std::all_of(gap.begin(), gap.end(),
                            [](unsigned char c) { return std::isspace(c) != 0; }));
    EXPECT_EQ(text.substr(b, e - b), s.sentences[i]);
    rebuilt += gap + s.sentences[i];
    cursor = e;
  }
  rebuilt += text.substr(cursor);
  EXPECT_EQ(rebuilt, text);
}

TEST(SegmentSentencesTest, ReconstructionOnFixtureCorpus) {
  const Corpus corpus = LoadCorpus(TestData("bbc_fixture"));
  for (const auto& doc : corpus.documents()) {
    ExpectReconstructs(doc.body);
    ExpectReconstructs(doc.reference_summary);
  }
  ExpectReconstructs("  Leading space. Trailing space.  ");
  ExpectReconstructs("A.\n\nB? C!");
}

TEST(NormalizeAndTokenizeTest, Examples) {
  PipelineConfig c = PipelineConfig::Metric();
  EXPECT_EQ(NormalizeAndTokenize("The cat, sat!", c), (Tokens{"the", "cat", "sat"}));
  EXPECT_EQ(NormalizeAndTokenize("", c), Tokens{});
  c.expand_contractions = true;
  EXPECT_EQ(NormalizeAndTokenize("Don't stop", c), (Tokens{"do", "not", "stop"}));
}

TEST(NormalizeAndTokenizeTest, KeepsIntraTokenPunctuationWhenNotStripping) {
  PipelineConfig c = PipelineConfig::Metric();
  c.strip_punctuation = false;
  c.expand_contractions = false;
  const Tokens t = NormalizeAndTokenize("rock'n'roll well-known", c);
  EXPECT_NE(std::find(t.begin(), t.end(), "rock'n'roll"), t.end());
  EXPECT_NE(std::find(t.begin(), t.end(), "well-known"), t.end());
}

TEST(NormalizeAndTokenizeTest, SplitsOnUnicodeWhitespace) {
  const PipelineConfig c = PipelineConfig::Metric();
  // U+00A0 no-break space and U+2003 em space.
  EXPECT_EQ(NormalizeAndTokenize("a\xC2\xA0" "b\xE2\x80\x83" "c", c), (Tokens{"a", "b", "c"}));
}

TEST(NormalizeAndTokenizeTest, NonAsciiSymbolsStayInTokens) {
  const PipelineConfig c = PipelineConfig::Metric();
  EXPECT_EQ(NormalizeAndTokenize("caf\xC3\xA9 \xE2\x82\xAC" "5", c),
            (Tokens{"caf\xC3\xA9", "\xE2\x82\xAC" "5"}));
}

TEST(PunctuationTest, MatchesDocumentedSet) {
  const std::string set = "!\"#$%&'()*+,-./:;<=>?@[\\]^_{}~`";
  for (int c = 0; c < 128; ++c) {
    const bool expected = set.find(static_cast<char>(c)) != std::string::npos;
    EXPECT_EQ(IsPunctuation(static_cast<char>(c)), expected) << c;
  }
}

TEST(StopwordsTest, DefaultListHas179Entries) {
  const auto stopwords = PipelineConfig::DefaultStopwordSet();
  EXPECT_EQ(stopwords.size(), 179u);
  PipelineConfig c;
  EXPECT_NO_THROW(c.Validate());
}

TEST(StopwordsTest, Examples) {
  const PipelineConfig c;
  EXPECT_EQ(FilterStopwords({"the", "cat", "sat", "on", "the", "mat"}, c),
            (Tokens{"cat", "sat", "mat"}));
  EXPECT_EQ(FilterStopwords({}, c), Tokens{});
  EXPECT_EQ(FilterStopwords({"the", "a", "an"}, c), Tokens{});
}

TEST(StopwordsTest, FilterIsAnOrderedSubsequence) {
  const Corpus corpus = LoadCorpus(TestData("bbc_fixture"));
  const PipelineConfig c;
  for (const auto& doc : corpus.documents()) {
    const Tokens in = NormalizeAndTokenize(doc.body, c);
    const Tokens out = FilterStopwords(in, c);
    // Greedy subsequence match.
    std::size_t j = 0;
    for (std::size_t i = 0; i < in.size() && j < out.size(); ++i) {
      if (in[i] == out[j]) ++j;
    }
    EXPECT_EQ(j, out.size());
    for (const auto& t : out) EXPECT_EQ(c.stopword_list.count(t), 0u);
  }
}

TEST(PipelineConfigTest, ValidateRejectsBadStopwords) {
  PipelineConfig c;
  c.stopword_list = {"Upper"};
  EXPECT_SUMBENCH_ERROR(c.Validate(), ErrorCode::kInvalidArgument);
  c.stopword_list = {""};
  EXPECT_SUMBENCH_ERROR(c.Validate(), ErrorCode::kInvalidArgument);
  c.stopword_list = {"don't"};
  EXPECT_SUMBENCH_ERROR(c.Validate(), ErrorCode::kInvalidArgument);
}

TEST(MorphologyTest, Examples) {
  EXPECT_EQ(ReduceMorphology("caresses", Morphology::kStem), "caress");
  for (Morphology m : {Morphology::kNone, Morphology::kStem, Morphology::kLemmatize}) {
    EXPECT_EQ(ReduceMorphology("run", m), "run");
  }
  EXPECT_EQ(ReduceMorphology("went", Morphology::kLemmatize), "go");
  EXPECT_EQ(ReduceMorphology("mice", Morphology::kLemmatize), "mouse");
  EXPECT_EQ(ReduceMorphology("running", Morphology::kNone), "running");
}

TEST(MorphologyTest, LemmatizerSuffixRulesNeedKnownBase) {
  EXPECT_EQ(Lemmatize("agencies"), "agency");
  EXPECT_EQ(Lemmatize("ponies"), "ponies");
  EXPECT_EQ(Lemmatize("cats"), "cat");
  EXPECT_EQ(Lemmatize("running"), "run");
  EXPECT_EQ(Lemmatize("stopped"), "stop");
  EXPECT_EQ(Lemmatize("zzzings"), "zzzings");
}

TEST(MorphologyTest, ParseNames) {
  EXPECT_EQ(ParseMorphology("stem"), Morphology::kStem);
  EXPECT_EQ(ParseMorphology("lemmatize"), Morphology::kLemmatize);
  EXPECT_EQ(ParseMorphology("none"), Morphology::kNone);
  EXPECT_SUMBENCH_ERROR(ParseMorphology("both"), ErrorCode::kTypeError);
  for (Morphology m : {Morphology::kNone, Morphology::kStem, Morphology::kLemmatize}) {
    EXPECT_EQ(ParseMorphology(MorphologyName(m)), m);
  }
}

// Reference pairs generated by an independent Porter implementation.
TEST(PorterStemTest, MatchesReferenceList) {
  std::ifstream in(TestData("porter_reference.tsv"));
  ASSERT_TRUE(in.good());
  std::string line;
  int checked = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    ASSERT_NE(tab, std::string::npos) << line;
    const std::string word = line.substr(0, tab);
    const std::string stem = line.substr(tab + 1);
    EXPECT_EQ(PorterStem(word), stem) << word;
    ++checked;
  }
  EXPECT_GE(checked, 200);
}

TEST(PorterStemTest, ShortWordsUntouched) {
  EXPECT_EQ(PorterStem("a"), "a");
  EXPECT_EQ(PorterStem("is"), "is");
  EXPECT_EQ(PorterStem(""), "");
}

TEST(PreprocessTest, Examples) {
  const PipelineConfig full = PipelineConfig::Full();
  EXPECT_EQ(Preprocess("The cats weren't sleeping.", full), (Tokens{"cat", "sleep"}));
  EXPECT_EQ(Preprocess("", full), Tokens{});
  EXPECT_EQ(Preprocess("", PipelineConfig::Metric()), Tokens{});
}

TEST(PreprocessTest, IdempotentOnFixtureCorpus) {
  const Corpus corpus = LoadCorpus(TestData("bbc_fixture"));
  for (Morphology m : {Morphology::kNone, Morphology::kStem, Morphology::kLemmatize}) {
    const PipelineConfig c = PipelineConfig::Full(m);
    for (const auto& doc : corpus.documents()) {
      const Tokens once = Preprocess(doc.body, c);
      EXPECT_EQ(Preprocess(Join(once), c), once) << doc.id;
    }
  }
}

TEST(PreprocessTest, IdempotentOnRandomWords) {
  // Random strings over letters, apostrophes and hyphens exercise the
  // morphology fixpoint and the re-filter.
  Rng rng(11);
  const std::string alphabet = "abcdeilnorstuy'-";
  const PipelineConfig c = PipelineConfig::Full();
  for (int trial = 0; trial < 2000; ++trial) {
    std::string text;
    const int words = 1 + static_cast<int>(rng.UniformIndex(6));
    for (int w = 0; w < words; ++w) {
      const int len = 1 + static_cast<int>(rng.UniformIndex(10));
      for (int k = 0; k < len; ++k) text += alphabet[rng.UniformIndex(alphabet.size())];
      text += ' ';
    }
    const Tokens once = Preprocess(text, c);
    EXPECT_EQ(Preprocess(Join(once), c), once) << text;
  }
}

TEST(PreprocessTest, StageTogglesCompose) {
  PipelineConfig c = PipelineConfig::Metric();
  EXPECT_EQ(Preprocess("The Cats", c), (Tokens{"the", "cats"}));
  c.lowercase = false;
  EXPECT_EQ(Preprocess("The Cats", c), (Tokens{"The", "Cats"}));
  c.remove_stopwords = true;
  c.lowercase = true;
  c.morphology = Morphology::kStem;
  EXPECT_EQ(Preprocess("The Cats", c), (Tokens{"cat"}));
}

}  // namespace
}  // namespace sumbench::textproc
