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

// Sentence splitting, POS tagging, named entities and language detection.
//
// Each task has a small deterministic rule-based implementation; stronger
// statistical components can replace them as long as they fill the same Token
// fields.

#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "olaph/error.hpp"
#include "olaph/lexicon.hpp"
#include "olaph/text.hpp"
#include "olaph/token.hpp"

namespace olaph {

// ---- Sentences -------------------------------------------------------------

// Byte ranges of sentences; the text between them is whitespace only.
inline std::vector<Span> split_sentence_spans(std::string_view text, std::string_view language) {
  static const std::unordered_set<std::string_view> kAbbreviations = {
      "Dr", "Mr", "Mrs", "Ms", "Prof", "St", "Jr", "Sr", "vs", "etc", "e.g", "i.e", "Nr",
      "ca", "bzw", "usw", "z.B", "u.a", "d.h", "Hr", "Fr", "Str", "vgl", "Mio", "Mrd"};
  std::vector<Span> out;
  std::size_t start = 0;
  auto skip_space = [&](std::size_t pos) {
    while (pos < text.size()) {
      std::size_t p = pos;
      if (!text::is_space(text::decode(text, p))) break;
      pos = p;
    }
    return pos;
  };
  auto closes = [](char c) { return c == '"' || c == '\'' || c == ')' || c == ']'; };
  start = skip_space(0);
  std::size_t pos = start;
  while (pos < text.size()) {
    const char c = text[pos];
    if (c != '.' && c != '!' && c != '?') {
      ++pos;
      continue;
    }
    std::size_t end = pos + 1;
    while (end < text.size() && (text[end] == '.' || text[end] == '!' || text[end] == '?'))
      ++end;
    while (end < text.size() && closes(text[end])) ++end;
    while (text.substr(end, 3) == "\u201D" || text.substr(end, 3) == "\u201C" ||
           text.substr(end, 2) == "\u00BB")
      end += text.substr(end, 2) == "\u00BB" ? 2 : 3;
    const std::size_t next = skip_space(end);
    bool boundary = next > end && next < text.size();
    if (boundary) {
      std::size_t p = next;
      const char32_t first = text::decode(text, p);
      boundary = text::is_upper(first) || first == U'"' || first == 0x201E || first == 0x201C;
    }
    if (boundary && c == '.') {
      std::size_t w = pos;
      while (w > start && !text::is_space(text[w - 1]) && text[w - 1] != '(' && text[w - 1] != '"')
        --w;
      const std::string_view word = text.substr(w, pos - w);
      if (kAbbreviations.count(word)) boundary = false;
      // Initials ("J. Smith").
      if (text::length(word) == 1 && text::is_capitalized(word)) boundary = false;
      // German ordinal dates ("am 3. Mai").
      if (language == "de" && !word.empty() && word.size() <= 2 &&
          std::all_of(word.begin(), word.end(), [](char d) { return d >= '0' && d <= '9'; }))
        boundary = false;
    }
    if (boundary) {
      out.push_back({start, end});
      start = next;
      pos = next;
    } else {
      pos = end;
    }
  }
  std::size_t tail_end = text.size();
  while (tail_end > start) {
    std::size_t back = tail_end - 1;
    while (back > start && (static_cast<unsigned char>(text[back]) & 0xC0) == 0x80) --back;
    std::size_t p = back;
    if (!text::is_space(text::decode(text, p))) break;
    tail_end = back;
  }
  if (tail_end > start) out.push_back({start, tail_end});
  return out;
}

inline std::vector<std::string> split_sentences(std::string_view text, std::string_view language) {
  std::vector<std::string> out;
  for (const auto& s : split_sentence_spans(text, language))
    out.emplace_back(text.substr(s.start, s.end - s.start));
  return out;
}

// ---- POS tagging -----------------------------------------------------------

namespace detail {

struct TagTables {
  std::unordered_set<std::string_view> determiners;
  std::unordered_set<std::string_view> pronouns;
  std::unordered_set<std::string_view> infinitive_cues;  // to + X, modals
  std::unordered_set<std::string_view> participle_cues;  // has/had + X
  std::unordered_set<std::string_view> past_cues;
  std::unordered_set<std::string_view> function_words;
};

inline const TagTables& tag_tables(std::string_view language) {
  static const TagTables en{
      {"the", "a", "an", "this", "that", "these", "those", "my", "your", "his", "her", "its",
       "our", "their", "some", "any", "no", "every", "each", "another"},
      {"i", "you", "he", "she", "we", "they", "it"},
      {"to", "will", "would", "can", "could", "shall", "should", "may", "might", "must", "do",
       "does", "did", "don't", "didn't", "doesn't", "let", "please"},
      {"has", "had", "have", "having", "was", "were", "been", "be", "being", "is", "are"},
      {"yesterday", "ago", "last", "earlier", "previously", "once"},
      {"and", "or", "but", "of", "in", "on", "at", "for", "with", "from", "by", "about", "as",
       "into", "over", "under", "not", "so", "if", "then", "than", "me", "him", "us", "them",
       "who", "what", "which", "where", "when", "how", "there", "here", "yes", "very", "too",
       "also", "just", "up", "down", "out", "off"}};
  static const TagTables de{
      {"der", "die", "das", "den", "dem", "des", "ein", "eine", "einen", "einem", "einer", "eines",
       "kein", "keine", "mein", "meine", "dein", "deine", "sein", "seine", "unser", "unsere"},
      {"ich", "du", "er", "sie", "es", "wir", "ihr"},
      {"zu", "will", "kann", "muss", "soll", "darf", "mag", "werde", "wird", "möchte"},
      {"hat", "habe", "hatte", "hast", "ist", "war", "wurde", "sind", "waren", "haben"},
      {"gestern", "damals", "früher", "vorher"},
      {"und", "oder", "aber", "von", "in", "im", "an", "am", "auf", "mit", "für", "aus", "bei",
       "nach", "zum", "zur", "nicht", "so", "wenn", "dann", "als", "wie", "mir", "mich", "dich",
       "ihn", "uns", "ja", "nein", "sehr", "auch", "noch", "schon", "hier", "dort"}};
  static const TagTables other{{"le", "la", "les", "un", "une", "el", "los", "las", "una"}, {}, {},
                               {}, {}, {}};
  if (language == "en") return en;
  if (language == "de") return de;
  return other;
}

inline bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() > suffix.size() + 1 && s.substr(s.size() - suffix.size()) == suffix;
}

inline std::optional<Pos> suffix_tag(std::string_view w, std::string_view language) {
  if (language == "en") {
    if (ends_with(w, "ly")) return Pos::kAdv;
    if (ends_with(w, "ed")) return Pos::kVbd;
    if (ends_with(w, "ing")) return Pos::kVerb;
    for (auto s : {"tion", "sion", "ness", "ment", "ity", "ship"})
      if (ends_with(w, s)) return Pos::kNoun;
    for (auto s : {"ous", "ful", "able", "ible", "ive", "less", "ical"})
      if (ends_with(w, s)) return Pos::kAdj;
  } else if (language == "de") {
    for (auto s : {"ung", "heit", "keit", "schaft", "tion"})
      if (ends_with(w, s)) return Pos::kNoun;
    for (auto s : {"lich", "isch", "ig", "bar", "los"})
      if (ends_with(w, s)) return Pos::kAdj;
  }
  return std::nullopt;
}

}  // namespace detail

// Function-word table, then bigram rules (determiner + X -> NOUN, to/modal +
// X -> VB, has/had + X -> VBD, pronoun + X -> VBD when the sentence carries a
// past-time cue, VB otherwise), then suffix heuristics. Unmatched words get
// OTHER.
inline void pos_tag(std::vector<Token>& tokens, std::string_view language) {
  const auto& t = detail::tag_tables(language);
  bool past_context = false;
  for (const auto& tok : tokens)
    if (tok.kind == TokenKind::kWord && t.past_cues.count(text::fold(tok.surface)))
      past_context = true;

  const Token* prev = nullptr;
  const Token* prev2 = nullptr;
  bool first_word = true;
  for (auto& tok : tokens) {
    if (tok.kind != TokenKind::kWord) {
      if (tok.kind == TokenKind::kPunctuation) prev = prev2 = nullptr;
      continue;
    }
    const std::string w = text::fold(tok.surface);
    const std::string p = prev ? text::fold(prev->surface) : std::string();
    std::optional<Pos> tag;
    if (t.determiners.count(w) || t.pronouns.count(w) || t.infinitive_cues.count(w) ||
        t.participle_cues.count(w) || t.function_words.count(w) || t.past_cues.count(w)) {
      tag = Pos::kOther;
    } else if (prev && t.determiners.count(p)) {
      tag = Pos::kNoun;
    } else if (prev && prev->pos == Pos::kAdj && prev2 &&
               t.determiners.count(text::fold(prev2->surface))) {
      tag = Pos::kNoun;
    } else if (prev && t.infinitive_cues.count(p)) {
      tag = Pos::kVb;
    } else if (prev && t.participle_cues.count(p)) {
      tag = Pos::kVbd;
    } else if (prev && t.pronouns.count(p)) {
      tag = past_context ? Pos::kVbd : Pos::kVb;
    } else if (language == "de" && !first_word && text::is_capitalized(tok.surface)) {
      tag = Pos::kNoun;
    } else {
      tag = detail::suffix_tag(w, language);
    }
    tok.pos = tag.value_or(Pos::kOther);
    prev2 = prev;
    prev = &tok;
    first_word = false;
  }
}

// ---- Named entities --------------------------------------------------------

struct GazetteerEntry {
  std::vector<std::string> words;  // case-folded
  std::optional<std::string> origin;
  Entity type = Entity::kMisc;
};

// Known names per text language. File rows: `name[\torigin-language[\ttype]]`.
class Gazetteer {
 public:
  void add(const std::string& language, std::string_view name,
           std::optional<std::string> origin = std::nullopt, Entity type = Entity::kMisc) {
    GazetteerEntry e;
    for (auto w : text::split(name, ' '))
      if (!w.empty()) e.words.push_back(text::fold(w));
    if (e.words.empty()) throw Error("empty gazetteer name");
    e.origin = std::move(origin);
    e.type = type;
    auto& list = by_language_[language];
    list.push_back(std::move(e));
    std::stable_sort(list.begin(), list.end(),
                     [](const auto& a, const auto& b) { return a.words.size() > b.words.size(); });
  }

  void parse(std::istream& in, const std::string& language, const std::string& source = "<names>") {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      std::string_view view = line;
      if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
      if (text::trim(view).empty() || view.front() == '#') continue;
      const auto cols = text::split(view, '\t');
      if (cols.size() > 3 || cols[0].empty())
        throw FormatError(source, line_no, "expected name[\\torigin[\\ttype]]");
      std::optional<std::string> origin;
      if (cols.size() > 1 && !cols[1].empty() && cols[1] != "-") origin = std::string(cols[1]);
      Entity type = Entity::kMisc;
      if (cols.size() > 2) {
        auto parsed = parse_entity(cols[2]);
        if (!parsed) throw FormatError(source, line_no, "unknown entity type");
        type = *parsed;
      }
      add(language, cols[0], std::move(origin), type);
    }
  }

  const std::vector<GazetteerEntry>& entries(std::string_view language) const {
    static const std::vector<GazetteerEntry> kEmpty;
    auto it = by_language_.find(std::string(language));
    return it == by_language_.end() ? kEmpty : it->second;
  }

 private:
  std::map<std::string, std::vector<GazetteerEntry>> by_language_;
};

// Entity annotation on top of POS tags. Gazetteer names win (longest match,
// origin language copied onto the tokens); otherwise all-caps words are
// organisations and, in English, runs of capitalised words are entities unless
// the run is a single sentence-initial word. Returns the entity spans as
// [first, last) token index ranges.
inline std::vector<std::pair<std::size_t, std::size_t>> detect_entities(
    std::vector<Token>& tokens, std::string_view language, const Gazetteer& gazetteer) {
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  const auto& names = gazetteer.entries(language);
  std::size_t first_word = tokens.size();
  for (std::size_t i = 0; i < tokens.size(); ++i)
    if (tokens[i].kind == TokenKind::kWord) {
      first_word = i;
      break;
    }
  static const std::unordered_set<std::string_view> kNotNames = {"I"};
  auto match_at = [&](std::size_t at) -> const GazetteerEntry* {
    for (const auto& name : names) {
      if (at + name.words.size() > tokens.size()) continue;
      bool ok = true;
      for (std::size_t k = 0; k < name.words.size() && ok; ++k)
        ok = tokens[at + k].kind == TokenKind::kWord &&
             text::fold(tokens[at + k].surface) == name.words[k];
      if (ok) return &name;
    }
    return nullptr;
  };
  std::size_t i = 0;
  while (i < tokens.size()) {
    if (tokens[i].kind != TokenKind::kWord) {
      ++i;
      continue;
    }
    if (const auto* name = match_at(i)) {
      for (std::size_t k = 0; k < name->words.size(); ++k) {
        tokens[i + k].entity = name->type;
        if (name->origin) tokens[i + k].language = name->origin;
      }
      spans.emplace_back(i, i + name->words.size());
      i += name->words.size();
      continue;
    }
    if (text::is_all_caps(tokens[i].surface)) {
      tokens[i].entity = Entity::kOrg;
      spans.emplace_back(i, i + 1);
      ++i;
      continue;
    }
    if (language == "en" && text::is_capitalized(tokens[i].surface) &&
        !kNotNames.count(tokens[i].surface)) {
      std::size_t j = i;
      while (j < tokens.size() && tokens[j].kind == TokenKind::kWord &&
             text::is_capitalized(tokens[j].surface) && !text::is_all_caps(tokens[j].surface) &&
             !kNotNames.count(tokens[j].surface) && (j == i || !match_at(j)))
        ++j;
      if (i != first_word || j - i >= 2) {
        for (std::size_t k = i; k < j; ++k) tokens[k].entity = Entity::kMisc;
        spans.emplace_back(i, j);
      }
      i = j;
      continue;
    }
    ++i;
  }
  return spans;
}

// ---- Language detection ----------------------------------------------------

struct LanguageProfile {
  std::string language;
  std::unordered_map<std::string, double> weights;  // trigram -> log frequency
  double unseen = 0.0;                              // weight of unseen trigrams

  double weight(const std::string& trigram) const {
    auto it = weights.find(trigram);
    return it == weights.end() ? unseen : it->second;
  }

  friend bool operator==(const LanguageProfile&, const LanguageProfile&) = default;
};

// Character trigrams of each lowercased letter run padded with one space on
// either side: "the" -> " th", "the", "he ".
inline std::vector<std::string> trigrams(std::string_view s) {
  std::vector<std::string> out;
  std::u32string word;
  auto flush = [&] {
    if (word.empty()) return;
    const std::u32string padded = U" " + word + U" ";
    for (std::size_t i = 0; i + 3 <= padded.size(); ++i)
      out.push_back(text::to_utf8(padded.substr(i, 3)));
    word.clear();
  };
  for (std::size_t pos = 0; pos < s.size();) {
    const char32_t c = text::decode(s, pos);
    if (text::is_letter(c)) {
      word += text::to_lower(c);
    } else {
      flush();
    }
  }
  flush();
  return out;
}

// Add-one smoothed log relative trigram frequencies; the vocabulary is the
// union of trigrams over all given corpora, so weights are comparable across
// languages.
inline std::map<std::string, LanguageProfile> train_language_profiles(
    const std::map<std::string, std::vector<std::string>>& corpora) {
  if (corpora.empty()) throw Error("no corpora given");
  std::map<std::string, std::map<std::string, std::uint64_t>> counts;
  std::set<std::string> vocabulary;
  for (const auto& [lang, lines] : corpora) {
    auto& c = counts[lang];
    for (const auto& line : lines) {
      text::validate(line);
      for (auto& tri : trigrams(line)) {
        vocabulary.insert(tri);
        ++c[tri];
      }
    }
    if (c.empty()) throw Error("empty corpus for language '" + lang + "'");
  }
  const double v = static_cast<double>(vocabulary.size());
  std::map<std::string, LanguageProfile> out;
  for (const auto& [lang, c] : counts) {
    double n = 0;
    for (const auto& [tri, k] : c) n += static_cast<double>(k);
    LanguageProfile p;
    p.language = lang;
    p.unseen = std::log(1.0 / (n + v));
    for (const auto& [tri, k] : c) p.weights[tri] = std::log((static_cast<double>(k) + 1.0) / (n + v));
    out.emplace(lang, std::move(p));
  }
  return out;
}

// `#unseen \t w` then `trigram \t logweight` rows in key order.
inline void save_profile(const LanguageProfile& p, std::ostream& out) {
  out << std::setprecision(17);
  out << "#unseen\t" << p.unseen << '\n';
  std::map<std::string, double> sorted(p.weights.begin(), p.weights.end());
  for (const auto& [tri, w] : sorted) out << tri << '\t' << w << '\n';
}

inline LanguageProfile load_profile(std::istream& in, const std::string& language,
                                    const std::string& source = "<profile>") {
  LanguageProfile p;
  p.language = language;
  bool have_unseen = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
    if (view.empty()) continue;
    const auto tab = view.rfind('\t');
    if (tab == std::string_view::npos) throw FormatError(source, line_no, "expected trigram\\tweight");
    const std::string key(view.substr(0, tab));
    double w = 0;
    try {
      std::size_t used = 0;
      w = std::stod(std::string(view.substr(tab + 1)), &used);
      if (used != view.size() - tab - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw FormatError(source, line_no, "bad weight");
    }
    if (!std::isfinite(w)) throw FormatError(source, line_no, "weight must be finite");
    if (key == "#unseen") {
      p.unseen = w;
      have_unseen = true;
    } else {
      p.weights[key] = w;
    }
  }
  if (!have_unseen) throw FormatError(source, 0, "missing #unseen line");
  if (p.weights.empty()) throw FormatError(source, 0, "profile has no trigrams");
  return p;
}

struct Detection {
  std::string language;
  double confidence = 0.0;
  bool fell_back = false;  // confidence below threshold, primary returned
};

class LanguageDetector {
 public:
  double threshold = 0.35;

  void add_profile(LanguageProfile profile) {
    auto lang = profile.language;
    profiles_[lang] = std::move(profile);
  }
  bool has_profile(std::string_view language) const {
    return profiles_.count(std::string(language)) > 0;
  }
  bool empty() const { return profiles_.empty(); }
  const std::map<std::string, LanguageProfile>& profiles() const { return profiles_; }

  // Naive-Bayes over trigram log weights with a softmax posterior as the
  // confidence. `allowed` is ordered, primary first; languages without a
  // profile are ignored.
  Detection detect(std::string_view text, const std::vector<std::string>& allowed) const {
    std::vector<const LanguageProfile*> usable;
    for (const auto& lang : allowed)
      if (auto it = profiles_.find(lang); it != profiles_.end()) usable.push_back(&it->second);
    if (usable.empty()) throw ResourceError("no language profiles loaded");
    const std::string primary = allowed.front();
    const auto grams = trigrams(text);
    if (grams.empty()) return {primary, 0.0, true};
    std::vector<double> scores;
    for (const auto* p : usable) {
      double s = 0;
      for (const auto& g : grams) s += p->weight(g);
      scores.push_back(s);
    }
    const std::size_t best =
        static_cast<std::size_t>(std::max_element(scores.begin(), scores.end()) - scores.begin());
    double z = 0;
    for (double s : scores) z += std::exp(s - scores[best]);
    const double confidence = 1.0 / z;
    if (confidence < threshold) return {primary, confidence, true};
    return {usable[best]->language, confidence, false};
  }

 private:
  std::map<std::string, LanguageProfile> profiles_;
};

}  // namespace olaph
