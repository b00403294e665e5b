// Copyright 2026 The olaph Authors
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

#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"

namespace olaph {
namespace {

TEST(Align, CategoriesAfterStripping) {
  const auto a = align_outputs({"x", "y", "z"}, {{"a", {"ˈab", "a", "p"}},
                                                 {"b", {"ab", "a", "q"}},
                                                 {"c", {"aːb", "b", "r"}}});
  ASSERT_EQ(a.rows.size(), 3u);
  EXPECT_EQ(a.rows[0].category, MatchCategory::kAllMatch);
  EXPECT_EQ(a.rows[1].category, MatchCategory::kPartialMatch);
  EXPECT_EQ(a.rows[2].category, MatchCategory::kMismatch);
  EXPECT_EQ(a.summary.total(), 3u);
  EXPECT_EQ((a.summary.pair_matches.at({"a", "b"})), 1u);
  EXPECT_EQ(a.rows[0].outputs.at("a"), "ab");
}

TEST(Align, TwoSystemsHaveNoPartialMatches) {
  const auto a = align_outputs({"x", "y"}, {{"a", {"p", "q"}}, {"b", {"p", "r"}}});
  EXPECT_EQ(a.summary.all_match, 1u);
  EXPECT_EQ(a.summary.partial_match, 0u);
  EXPECT_EQ(a.summary.mismatch, 1u);
}

TEST(Align, RejectsBadInput) {
  EXPECT_THROW(align_outputs({"x"}, {{"a", {"p"}}}), Error);
  try {
    align_outputs({"x", "y"}, {{"a", {"p", "q"}}, {"short", {"p"}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("short"), std::string::npos);
  }
}

TEST(Align, ReportHasHeaderAndOneRowPerWord) {
  const auto a = align_outputs({"x", "y"}, {{"a", {"p", "q"}}, {"b", {"p", "r"}}});
  std::ostringstream out;
  write_alignment_report(a, out);
  EXPECT_EQ(out.str(), "surface\tcategory\ta\tb\nx\tall_match\tp\tp\ny\tmismatch\tq\tr\n");
}

TEST(Json, SentenceRecord) {
  PipelineConfig cfg;
  cfg.primary_language = "en";
  const Pipeline p(oracle::shared_resources(), cfg);
  const auto j = to_json(p.phonemize_sentence("NATO won."), "en");
  EXPECT_EQ(j["text"], "NATO won.");
  ASSERT_EQ(j["words"].size(), 3u);
  EXPECT_EQ(j["words"][0]["source"], "abbreviation");
  EXPECT_EQ(j["words"][2]["source"], "punctuation");
  EXPECT_EQ(j["words"][1]["lang"], "en");
}

TEST(GenPairs, SkipsUnresolvedAndBlankLines) {
  PipelineConfig cfg;
  cfg.primary_language = "en";
  const Pipeline p(oracle::shared_resources(), cfg);
  std::istringstream in("The house is old.\n\nThe word λόγος.\nGo home!\r\n");
  std::ostringstream out;
  const auto counts = gen_pairs(in, p, out);
  EXPECT_EQ(counts.written, 2u);
  EXPECT_EQ(counts.skipped, 2u);
  std::istringstream lines(out.str());
  std::string line;
  std::vector<nlohmann::json> records;
  while (std::getline(lines, line)) records.push_back(nlohmann::json::parse(line));
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0]["lang"], "en");
  EXPECT_EQ(records[0]["text"], "The house is old.");
  EXPECT_EQ(records[0]["phonemes"], "ðə haʊs ɪz oʊld.");
  EXPECT_EQ(records[1]["text"], "Go home!");
  // Keys appear in a fixed order.
  EXPECT_EQ(out.str().rfind("{\"lang\":", 0), 0u);
}

TEST(GenPairs, InvalidUtf8ReportsOffset) {
  PipelineConfig cfg;
  cfg.primary_language = "en";
  const Pipeline p(oracle::shared_resources(), cfg);
  std::istringstream in(std::string("ok\nbad \xFF\n"));
  std::ostringstream out;
  try {
    gen_pairs(in, p, out);
    FAIL();
  } catch (const EncodingError& e) {
    EXPECT_EQ(e.offset(), 7u);
  }
}

}  // namespace
}  // namespace olaph
