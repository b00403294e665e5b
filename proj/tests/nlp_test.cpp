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

std::vector<std::string> surfaces(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) out.push_back(t.surface);
  return out;
}

TEST(Sentences, SplitsOnTerminalsBeforeCapitals) {
  EXPECT_EQ(split_sentences("Go home! It is late. Really?", "en"),
            (std::vector<std::string>{"Go home!", "It is late.", "Really?"}));
  EXPECT_EQ(split_sentences("Dr. Smith met J. Doe. Then he left.", "en"),
            (std::vector<std::string>{"Dr. Smith met J. Doe.", "Then he left."}));
  EXPECT_EQ(split_sentences("Am 3. Mai z.B. regnet es.", "de"),
            (std::vector<std::string>{"Am 3. Mai z.B. regnet es."}));
  EXPECT_EQ(split_sentences("3.14 is pi. ok", "en"), (std::vector<std::string>{"3.14 is pi. ok"}));
  EXPECT_EQ(split_sentences("Er sagte: „Ja.“ Dann ging er.", "de").size(), 2u);
  EXPECT_TRUE(split_sentences("   ", "en").empty());
}

TEST(Sentences, SpansOnlySkipWhitespace) {
  const std::string text = "  One. Two!  Three  ";
  const auto spans = split_sentence_spans(text, "en");
  std::size_t prev = 0;
  for (const auto& s : spans) {
    for (std::size_t i = prev; i < s.start; ++i) EXPECT_EQ(text[i], ' ');
    prev = s.end;
  }
  for (std::size_t i = prev; i < text.size(); ++i) EXPECT_EQ(text[i], ' ');
}

TEST(Tokenize, KindsAndSurfaces) {
  const auto toks = tokenize("It's 12:30, 3.14 and 42% — well-known!", "en");
  EXPECT_EQ(surfaces(toks), (std::vector<std::string>{"It's", "12:30", ",", "3.14", "and", "42",
                                                      "%", "—", "well-known", "!"}));
  EXPECT_EQ(toks[1].kind, TokenKind::kNumber);
  EXPECT_EQ(toks[2].kind, TokenKind::kPunctuation);
  EXPECT_EQ(toks[6].kind, TokenKind::kSymbol);
  EXPECT_EQ(surfaces(tokenize("the 21st day", "en"))[1], "21st");
  EXPECT_EQ(surfaces(tokenize("am 3. Mai.", "de")), (std::vector<std::string>{"am", "3.", "Mai", "."}));
}

TEST(Tokenize, SpansTileNonSpaceText) {
  for (const auto& s : oracle::random_sentences(50, "de", 3)) {
    const auto toks = tokenize(s, "de");
    std::size_t prev = 0;
    for (const auto& t : toks) {
      EXPECT_EQ(s.substr(t.span.start, t.span.end - t.span.start), t.surface);
      for (std::size_t i = prev; i < t.span.start; ++i) EXPECT_EQ(s[i], ' ') << s;
      prev = t.span.end;
    }
    EXPECT_EQ(prev, s.size());
  }
}

TEST(PosTag, HomographContexts) {
  auto tag_of = [](const std::string& s, std::size_t i, const std::string& lang = "en") {
    auto toks = tokenize(s, lang);
    pos_tag(toks, lang);
    return toks.at(i).pos;
  };
  EXPECT_EQ(tag_of("I read it yesterday.", 1), Pos::kVbd);
  EXPECT_EQ(tag_of("I read books.", 1), Pos::kVb);
  EXPECT_EQ(tag_of("I will read it.", 2), Pos::kVb);
  EXPECT_EQ(tag_of("She had read it.", 2), Pos::kVbd);
  EXPECT_EQ(tag_of("The wound hurts.", 1), Pos::kNoun);
  const auto wound = tag_of("He wound the clock.", 1);
  ASSERT_TRUE(wound);
  EXPECT_TRUE(is_verbal(*wound));
  EXPECT_EQ(tag_of("Hello", 0), Pos::kOther);
  EXPECT_EQ(tag_of("Wir spielen das Spiel.", 3, "de"), Pos::kNoun);
}

TEST(Entities, GazetteerAllCapsAndCapitalisedRuns) {
  Gazetteer g;
  std::istringstream names("John Smith\ten\tperson\nMontréal\tfr\tlocation\n# c\n");
  g.parse(names, "en");
  auto toks = tokenize("Yesterday John Smith and the FBI flew to Montréal with Big Tony.", "en");
  pos_tag(toks, "en");
  const auto spans = detect_entities(toks, "en", g);
  ASSERT_EQ(spans.size(), 4u);
  EXPECT_EQ(spans[0], (std::pair<std::size_t, std::size_t>{1, 3}));
  EXPECT_EQ(toks[1].entity, Entity::kPerson);
  EXPECT_EQ(toks[1].language, "en");
  EXPECT_EQ(toks[5].entity, Entity::kOrg);
  EXPECT_EQ(toks[8].language, "fr");
  EXPECT_EQ(toks[10].entity, Entity::kMisc);
  EXPECT_FALSE(toks[0].entity);  // sentence-initial single capital
}

TEST(Entities, BadGazetteerRows) {
  Gazetteer g;
  std::istringstream bad("A\ten\tperson\textra\n");
  EXPECT_THROW(g.parse(bad, "en"), FormatError);
  std::istringstream bad_type("A\ten\tthing\n");
  EXPECT_THROW(g.parse(bad_type, "en"), FormatError);
}

TEST(Detector, TrigramsArePadded) {
  EXPECT_EQ(trigrams("Ab"), (std::vector<std::string>{" ab", "ab "}));
  EXPECT_EQ(trigrams("a1b").size(), 2u);
  EXPECT_TRUE(trigrams("123").empty());
}

TEST(Detector, TrainSaveLoadDetect) {
  const auto profiles = train_language_profiles(
      {{"en", {"the cat and the dog", "this is the house"}},
       {"de", {"der hund und die katze", "das ist das haus"}}});
  LanguageDetector det;
  for (const auto& [lang, p] : profiles) {
    std::ostringstream out;
    save_profile(p, out);
    std::istringstream in(out.str());
    const auto loaded = load_profile(in, lang, "mem");
    EXPECT_EQ(loaded.weights, p.weights);
    EXPECT_DOUBLE_EQ(loaded.unseen, p.unseen);
    det.add_profile(loaded);
  }
  const auto d = det.detect("the house and the cat", {"de", "en"});
  EXPECT_EQ(d.language, "en");
  EXPECT_FALSE(d.fell_back);
  EXPECT_GT(d.confidence, 0.35);
  const auto empty = det.detect("123", {"de", "en"});
  EXPECT_TRUE(empty.fell_back);
  EXPECT_EQ(empty.language, "de");
  det.threshold = 1.1;
  EXPECT_TRUE(det.detect("the house", {"de", "en"}).fell_back);
  EXPECT_THROW(LanguageDetector{}.detect("x", {"en"}), ResourceError);
  EXPECT_THROW(train_language_profiles({{"en", {}}}), Error);
}

TEST(Detector, ShippedProfilesClassifyHeldOut) {
  const auto& det = oracle::shared_resources().detector;
  std::size_t ok = 0;
  std::size_t n = 0;
  for (const auto& line : oracle::read_lines(OLAPH_DATA_DIR "/corpus/heldout.tsv")) {
    const auto tab = line.find('\t');
    ++n;
    ok += det.detect(line.substr(tab + 1), {"en", "de", "fr", "es"}).language == line.substr(0, tab);
  }
  EXPECT_GE(static_cast<double>(ok) / static_cast<double>(n), 0.9);
}

}  // namespace
}  // namespace olaph
