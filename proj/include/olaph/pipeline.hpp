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

// End-to-end phonemization: sentence split, tokenization, tagging, entity and
// language annotation, normalization, then a per-word resolution ladder from
// abbreviations down to character spelling.

#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "olaph/corpus_stats.hpp"
#include "olaph/error.hpp"
#include "olaph/ipa.hpp"
#include "olaph/lexicon.hpp"
#include "olaph/nlp.hpp"
#include "olaph/normalizer.hpp"
#include "olaph/splitter.hpp"
#include "olaph/text.hpp"
#include "olaph/token.hpp"

namespace olaph {

// Languages the normalizer and tagger support as the text language.
inline bool is_primary_language(std::string_view language) {
  return language == "en" || language == "de";
}

// Preferred order of secondary lexica after the primary one.
inline constexpr std::string_view kLanguageOrder[] = {"en", "de", "fr", "es"};

enum class Source {
  kLexiconPrimary,
  kLexiconForeign,
  kAbbreviation,
  kNormalized,
  kCompound,
  kCharmap,
  kUnresolved
};

inline std::string_view to_string(Source s) {
  switch (s) {
    case Source::kLexiconPrimary: return "lexicon_primary";
    case Source::kLexiconForeign: return "lexicon_foreign";
    case Source::kAbbreviation: return "abbreviation";
    case Source::kNormalized: return "normalized";
    case Source::kCompound: return "compound";
    case Source::kCharmap: return "charmap";
    case Source::kUnresolved: return "unresolved";
  }
  return "unresolved";
}

struct PhonemizedWord {
  std::string surface;
  std::string phonemes;
  Source source = Source::kUnresolved;
  std::string language_used;
  // Ladder step (1-8) that produced the phonemes.
  int level = 8;
};

// Punctuation, or a symbol without a spoken form, copied to the output.
struct Passthrough {
  std::string surface;
};

using OutputItem = std::variant<PhonemizedWord, Passthrough>;

struct PhonemizedSentence {
  std::string text;
  std::vector<OutputItem> items;
};

struct PipelineConfig {
  std::string primary_language = "de";
  std::vector<std::string> allowed_languages;  // primary first; empty = all loaded
  ScoreParams score_params;
  SplitLimits split_limits;
  bool strip_verbose = false;
  bool auto_detect_text_language = false;
  // Ladder steps above this are skipped (8 = all enabled).
  int max_level = 8;
  // Minimum word tokens in a clause before its language is detected.
  std::size_t min_clause_tokens = 3;
};

// Everything loaded from a lexicon directory. Immutable once built.
struct Resources {
  std::map<std::string, Lexicon> lexica;
  std::map<std::string, CorpusStats> stats;
  AuxLexica aux;
  Gazetteer gazetteer;
  LanguageDetector detector;

  const Lexicon* lexicon(std::string_view language) const {
    auto it = lexica.find(std::string(language));
    return it == lexica.end() ? nullptr : &it->second;
  }

  std::vector<std::string> languages() const {
    std::vector<std::string> out;
    for (const auto& [lang, lex] : lexica) out.push_back(lang);
    return out;
  }
};

// Languages with a `lex.<lang>.tsv` file in `dir`.
inline std::vector<std::string> available_languages(const std::filesystem::path& dir) {
  std::vector<std::string> out;
  if (!std::filesystem::is_directory(dir)) return out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (name.size() > 8 && name.starts_with("lex.") && name.ends_with(".tsv"))
      out.push_back(name.substr(4, name.size() - 8));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Loads lex.<lang>.tsv and stats.<lang>.tsv (required) plus abbr, sym, chars,
// names and profile files (optional) for each language.
inline Resources load_resources(const std::filesystem::path& dir,
                                const std::vector<std::string>& languages) {
  Resources res;
  auto required = [&](const std::string& name) {
    const auto path = dir / name;
    if (!std::filesystem::exists(path)) throw ResourceError("missing resource file " + name);
    return path.string();
  };
  auto optional_file = [&](const std::string& name, auto&& parse) {
    const auto path = dir / name;
    if (!std::filesystem::exists(path)) return;
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ResourceError("cannot open " + path.string());
    parse(in, path.string());
  };
  for (const auto& lang : languages) {
    res.lexica.emplace(lang, load_lexicon(required("lex." + lang + ".tsv"), lang));
    auto stats = load_stats(required("stats." + lang + ".tsv"));
    if (stats.language.empty()) stats.language = lang;
    res.stats.emplace(lang, std::move(stats));
    optional_file("abbr." + lang + ".tsv",
                  [&](auto& in, const auto& src) { parse_abbreviations(in, res.aux, lang, src); });
    optional_file("sym." + lang + ".tsv",
                  [&](auto& in, const auto& src) { parse_symbols(in, res.aux, lang, src); });
    optional_file("chars." + lang + ".tsv",
                  [&](auto& in, const auto& src) { parse_char_map(in, res.aux, lang, src); });
    optional_file("names." + lang + ".txt",
                  [&](auto& in, const auto& src) { res.gazetteer.parse(in, lang, src); });
    optional_file("profile." + lang + ".tsv", [&](auto& in, const auto& src) {
      res.detector.add_profile(load_profile(in, lang, src));
    });
  }
  return res;
}

// Text with every number and symbol spelled out, sentence by sentence.
inline std::string normalize_text(std::string_view text, std::string_view language,
                                  const AuxLexica& aux) {
  std::vector<std::string> out;
  for (const auto& s : split_sentences(text, language))
    out.push_back(join_tokens(normalize_tokens(tokenize(s, language), language, aux)));
  return text::join(out, " ");
}

class Pipeline {
 public:
  // Validates the configuration against the loaded resources.
  Pipeline(const Resources& resources, PipelineConfig config)
      : res_(resources), config_(std::move(config)) {
    config_.score_params.validate();
    if (!is_primary_language(config_.primary_language))
      throw Error("unsupported language '" + config_.primary_language + "'");
    if (config_.allowed_languages.empty()) config_.allowed_languages = res_.languages();
    config_.allowed_languages = order_languages(config_.primary_language, config_.allowed_languages);
    for (const auto& lang : config_.allowed_languages) {
      if (!res_.lexicon(lang)) throw ResourceError("no lexicon loaded for '" + lang + "'");
      if (!res_.stats.count(lang)) throw ResourceError("no corpus statistics for '" + lang + "'");
    }
  }

  const PipelineConfig& config() const { return config_; }

  std::vector<PhonemizedSentence> phonemize_text(std::string_view text) const {
    if (config_.auto_detect_text_language && !res_.detector.empty()) {
      std::vector<std::string> candidates;
      for (const auto& lang : config_.allowed_languages)
        if (is_primary_language(lang)) candidates.push_back(lang);
      const auto detected = res_.detector.detect(text, candidates);
      if (detected.language != config_.primary_language) {
        PipelineConfig other = config_;
        other.primary_language = detected.language;
        other.allowed_languages.clear();
        other.auto_detect_text_language = false;
        for (const auto& lang : config_.allowed_languages) other.allowed_languages.push_back(lang);
        return Pipeline(res_, other).phonemize_text(text);
      }
    }
    std::vector<PhonemizedSentence> out;
    for (const auto& sentence : split_sentences(text, config_.primary_language))
      out.push_back(phonemize_sentence(sentence));
    if (config_.strip_verbose) {
      for (auto& s : out)
        for (auto& item : s.items)
          if (auto* w = std::get_if<PhonemizedWord>(&item)) w->phonemes = strip_verbose(w->phonemes);
    }
    return out;
  }

  PhonemizedSentence phonemize_sentence(std::string_view sentence) const {
    const std::string& primary = config_.primary_language;
    auto tokens = tokenize(sentence, primary);
    pos_tag(tokens, primary);
    const auto spans = detect_entities(tokens, primary, res_.gazetteer);
    annotate_entity_languages(tokens, spans);
    annotate_clause_languages(tokens);

    PhonemizedSentence result;
    result.text = std::string(sentence);
    for (const auto& tok : normalize_sentence(tokens)) {
      if (tok.kind == TokenKind::kWord) {
        result.items.emplace_back(phonemize_word(tok));
      } else {
        result.items.emplace_back(Passthrough{tok.surface});
      }
    }
    return result;
  }

  // Resolution ladder; the first step that yields phonemes wins:
  //   1 abbreviation (capitalised or all-caps, not for normalized words)
  //   2 entity origin-language lexicon
  //   3 lexicon of the token's language (primary unless a clause says otherwise)
  //   4 lexicon of the language detected for the word
  //   5 every remaining allowed lexicon in order
  //   6 hyphen parts or compound split
  //   7 character map
  //   8 unresolved
  PhonemizedWord phonemize_word(const Token& token) const {
    PhonemizedWord w = resolve(token);
    if (token.normalized && w.source != Source::kUnresolved) w.source = Source::kNormalized;
    return w;
  }

 private:
  static std::vector<std::string> order_languages(const std::string& primary,
                                                  const std::vector<std::string>& allowed) {
    std::vector<std::string> out{primary};
    auto add = [&](std::string_view lang) {
      if (std::find(allowed.begin(), allowed.end(), lang) != allowed.end() &&
          std::find(out.begin(), out.end(), lang) == out.end())
        out.emplace_back(lang);
    };
    for (auto lang : kLanguageOrder) add(lang);
    for (const auto& lang : allowed) add(lang);
    return out;
  }

  bool enabled(int level) const { return level <= config_.max_level; }

  Source lexicon_source(std::string_view language) const {
    return language == config_.primary_language ? Source::kLexiconPrimary : Source::kLexiconForeign;
  }

  std::optional<PhonemizedWord> from_lexicon(const Token& token, const std::string& language,
                                             int level) const {
    const Lexicon* lex = allowed(language) ? res_.lexicon(language) : nullptr;
    if (!lex) return std::nullopt;
    auto ph = lex->lookup(token.surface, token.pos);
    if (!ph) return std::nullopt;
    return PhonemizedWord{token.surface, *ph, lexicon_source(language), language, level};
  }

  bool allowed(std::string_view language) const {
    return std::find(config_.allowed_languages.begin(), config_.allowed_languages.end(), language) !=
           config_.allowed_languages.end();
  }

  LanguageGuesser guesser() const {
    if (res_.detector.empty()) return {};
    return [this](std::string_view text, const std::vector<std::string>& candidates)
               -> std::optional<std::string> {
      std::vector<std::string> usable;
      for (const auto& c : candidates)
        if (res_.detector.has_profile(c)) usable.push_back(c);
      if (usable.empty()) return std::nullopt;
      const auto d = res_.detector.detect(text, usable);
      if (d.fell_back) return std::nullopt;
      return d.language;
    };
  }

  std::optional<Detection> detect(std::string_view text) const {
    std::vector<std::string> usable;
    for (const auto& lang : config_.allowed_languages)
      if (res_.detector.has_profile(lang)) usable.push_back(lang);
    if (usable.empty()) return std::nullopt;
    if (usable.front() != config_.primary_language) usable.insert(usable.begin(), config_.primary_language);
    return res_.detector.detect(text, usable);
  }

  // Entity spans without a gazetteer origin get the language detected over the
  // whole span.
  void annotate_entity_languages(std::vector<Token>& tokens,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& spans) const {
    for (const auto& [first, last] : spans) {
      if (tokens[first].language) continue;
      std::string span_text;
      for (std::size_t i = first; i < last; ++i) {
        if (i > first) span_text += ' ';
        span_text += tokens[i].surface;
      }
      const auto d = detect(span_text);
      if (!d || d->fell_back) continue;
      for (std::size_t i = first; i < last; ++i) tokens[i].language = d->language;
    }
  }

  // Clauses (runs between clause punctuation) of enough words whose detected
  // language differs from the primary mark their non-entity words with it.
  void annotate_clause_languages(std::vector<Token>& tokens) const {
    auto is_break = [](const Token& t) {
      if (t.kind != TokenKind::kPunctuation) return false;
      static constexpr std::string_view kBreaks[] = {",", ";", ":", "(", ")", "\"", "–", "—",
                                                     "„", "“", "”", "«", "»"};
      return std::find(std::begin(kBreaks), std::end(kBreaks), t.surface) != std::end(kBreaks);
    };
    std::size_t start = 0;
    for (std::size_t i = 0; i <= tokens.size(); ++i) {
      if (i < tokens.size() && !is_break(tokens[i])) continue;
      std::vector<std::size_t> words;
      std::string clause;
      for (std::size_t k = start; k < i; ++k) {
        if (tokens[k].kind != TokenKind::kWord) continue;
        words.push_back(k);
        if (!clause.empty()) clause += ' ';
        clause += tokens[k].surface;
      }
      start = i + 1;
      if (words.size() < config_.min_clause_tokens) continue;
      const auto d = detect(clause);
      if (!d || d->fell_back || d->language == config_.primary_language) continue;
      for (std::size_t k = words.front(); k <= words.back(); ++k)
        if (!tokens[k].entity) tokens[k].language = d->language;
    }
  }

  std::vector<Token> normalize_sentence(const std::vector<Token>& tokens) const {
    return normalize_tokens(tokens, config_.primary_language, res_.aux);
  }

  PhonemizedWord resolve(const Token& token) const {
    const std::string& primary = config_.primary_language;
    const std::string& word = token.surface;

    if (enabled(1) && !token.normalized &&
        (text::is_all_caps(word) || text::is_capitalized(word))) {
      if (auto ph = res_.aux.lookup_abbreviation(word, primary))
        return {word, *ph, Source::kAbbreviation, primary, 1};
    }
    if (enabled(2) && token.entity && token.language) {
      if (auto w = from_lexicon(token, *token.language, 2)) return *w;
    }
    const std::string own = (!token.entity && token.language) ? *token.language : primary;
    if (enabled(3)) {
      if (auto w = from_lexicon(token, own, 3)) return *w;
    }
    if (enabled(4)) {
      if (auto d = detect(word); d && !d->fell_back && d->language != own) {
        if (auto w = from_lexicon(token, d->language, 4)) return *w;
      }
    }
    if (enabled(5)) {
      for (const auto& lang : config_.allowed_languages) {
        if (lang == own) continue;
        if (auto w = from_lexicon(token, lang, 5)) return *w;
      }
    }
    if (enabled(6)) {
      if (auto w = resolve_compound(token)) return *w;
    }
    if (enabled(7)) {
      if (res_.aux.can_spell(word, own))
        return {word, res_.aux.spell_out(word, own), Source::kCharmap, own, 7};
      if (own != primary && res_.aux.can_spell(word, primary))
        return {word, res_.aux.spell_out(word, primary), Source::kCharmap, primary, 7};
    }
    return {word, "", Source::kUnresolved, own, 8};
  }

  std::optional<PhonemizedWord> resolve_compound(const Token& token) const {
    const std::string& primary = config_.primary_language;
    const std::string& word = token.surface;
    // Hyphenated words: every part through the full ladder, concatenated.
    if (word.find('-') != std::string::npos) {
      std::string phonemes;
      std::string language;
      for (auto part : text::split(word, '-')) {
        if (part.empty()) return std::nullopt;
        Token sub = token;
        sub.surface = std::string(part);
        sub.normalized = true;  // no abbreviation check on fragments
        const PhonemizedWord w = resolve(sub);
        if (w.source == Source::kUnresolved) return std::nullopt;
        phonemes += w.phonemes;
        if (language.empty()) language = w.language_used;
        else if (language != w.language_used) language = primary;
      }
      return PhonemizedWord{word, phonemes, Source::kCompound, language, 6};
    }
    if (text::length(word) > config_.split_limits.max_word_length) return std::nullopt;
    std::vector<const Lexicon*> lexica;
    for (const auto& lang : config_.allowed_languages) lexica.push_back(res_.lexicon(lang));
    auto seg = best_split(word, lexica, res_.stats.at(primary), config_.score_params, guesser(),
                          config_.split_limits);
    if (!seg) return std::nullopt;
    std::string language = seg->subwords.front().language;
    for (const auto& s : seg->subwords)
      if (s.language != language) language = primary;
    return PhonemizedWord{word, seg->phonemes(), Source::kCompound, language, 6};
  }

  const Resources& res_;
  PipelineConfig config_;
};

// Words are separated by spaces; closing punctuation attaches to the previous
// item and opening punctuation to the next one. Unresolved words are dropped.
inline std::string render_plain(const PhonemizedSentence& sentence) {
  std::vector<std::pair<std::string, bool>> pieces;
  for (const auto& item : sentence.items) {
    if (const auto* w = std::get_if<PhonemizedWord>(&item)) {
      if (w->source != Source::kUnresolved) pieces.emplace_back(w->phonemes, false);
    } else {
      pieces.emplace_back(std::get<Passthrough>(item).surface, true);
    }
  }
  return join_pieces(pieces);
}

inline std::string render_plain(const std::vector<PhonemizedSentence>& sentences) {
  std::string out;
  for (const auto& s : sentences) {
    const std::string r = render_plain(s);
    if (r.empty()) continue;
    if (!out.empty()) out += ' ';
    out += r;
  }
  return out;
}

}  // namespace olaph
