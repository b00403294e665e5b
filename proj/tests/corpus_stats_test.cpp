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

#include <fstream>
#include <sstream>

#include "olaph/corpus_stats.hpp"

namespace olaph {
namespace {

TEST(CorpusStats, CountsLowercasedLetterRuns) {
  std::istringstream in("Der Krieg, der Krieg!\nSpiel 3 mal.\n");
  const auto s = build_stats(in, "de");
  EXPECT_EQ(s.count("der"), 2u);
  EXPECT_EQ(s.count("Krieg"), 2u);
  EXPECT_EQ(s.count("spiel"), 1u);
  EXPECT_EQ(s.count("3"), 0u);
  EXPECT_EQ(s.total, 6u);
}

TEST(CorpusStats, ProbabilityAndFloor) {
  CorpusStats s;
  s.counts = {{"kriegs", 10}, {"spiel", 40}};
  s.total = 1000;
  EXPECT_DOUBLE_EQ(probability(s, "kriegs"), 0.01);
  EXPECT_DOUBLE_EQ(probability(s, "SPIEL"), 0.04);
  EXPECT_DOUBLE_EQ(probability(s, "unseen"), 0.5 / 1000);
  s.configured_floor = 1e-9;
  EXPECT_DOUBLE_EQ(probability(s, "unseen"), 1e-9);
  EXPECT_THROW(probability(CorpusStats{}, "x"), Error);
}

TEST(CorpusStats, SaveLoadRoundTrip) {
  std::istringstream in("a b b c c c\n");
  auto s = build_stats(in, "en");
  s.configured_floor = 0.25;
  std::ostringstream out;
  save_stats(s, out);
  std::istringstream back(out.str());
  EXPECT_EQ(load_stats(back), s);
}

TEST(CorpusStats, RejectsInconsistentFiles) {
  auto bad = [](const std::string& body) {
    std::istringstream in(body);
    EXPECT_THROW(load_stats(in), FormatError) << body;
  };
  bad("a\t1\n");                       // no #total
  bad("#total\t3\na\t1\n");            // sum differs
  bad("#total\t1\na\t1\na\t1\n");      // duplicate
  bad("#total\t0\na\t0\n");            // zero count
  bad("#total\t1\na\t-1\n");           // negative
  bad("#total\t1\na\n");               // one column
}

TEST(CorpusStats, BadEncodingReportsOffset) {
  std::istringstream in(std::string("ok\nab\xFF\n"));
  try {
    build_stats(in, "en");
    FAIL();
  } catch (const EncodingError& e) {
    EXPECT_EQ(e.offset(), 5u);
  }
}

TEST(CorpusStats, ShippedFilesMatchTheirCorpora) {
  for (const std::string lang : {"en", "de", "fr", "es"}) {
    std::ifstream corpus(OLAPH_DATA_DIR "/corpus/train." + lang + ".txt", std::ios::binary);
    ASSERT_TRUE(corpus);
    EXPECT_EQ(build_stats(corpus, lang), load_stats(OLAPH_DATA_DIR "/stats." + lang + ".tsv"))
        << lang;
  }
}

}  // namespace
}  // namespace olaph
