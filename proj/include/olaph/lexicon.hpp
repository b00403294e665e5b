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

// Pronunciation lexica: per-language grapheme -> IPA tables with POS-tagged
// homograph variants, plus the auxiliary abbreviation, symbol and
// character-map tables.

#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "olaph/error.hpp"
#include "olaph/text.hpp"

namespace olaph {

// Coarse part-of-speech tagset. VB and VBD refine VERB.
enum class Pos { kNoun, kVerb, kVb, kVbd, kAdj, kAdv, kOther };

inline std::string_view to_string(Pos pos) {
  switch (pos) {
    case Pos::kNoun: return "NOUN";
    case Pos::kVerb: return "VERB";
    case Pos::kVb: return "VB";
    case Pos::kVbd: return "VBD";
    case Pos::kAdj: return "ADJ";
    case Pos::kAdv: return "ADV";
    case Pos::kOther: return "OTHER";
  }
  return "OTHER";
}

inline std::optional<Pos> parse_pos(std::string_view s) {
  static constexpr std::pair<std::string_view, Pos> kTable[] = {
      {"NOUN", Pos::kNoun}, {"VERB", Pos::kVerb}, {"VB", Pos::kVb},
      {"VBD", Pos::kVbd},   {"ADJ", Pos::kAdj},   {"ADV", Pos::kAdv},
      {"OTHER", Pos::kOther}};
  for (const auto& [name, pos] : kTable)
    if (name == s) return pos;
  return std::nullopt;
}

inline bool is_verbal(Pos pos) {
  return pos == Pos::kVerb || pos == Pos::kVb || pos == Pos::kVbd;
}

struct LexiconEntry {
  std::string grapheme;
  std::string phonemes;
  std::optional<Pos> pos;
  std::uint32_t rank = 0;

  friend bool operator==(const LexiconEntry&, const LexiconEntry&) = default;
};

namespace detail {

inline std::vector<std::string_view> read_columns(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return text::split(line, '\t');
}

inline bool skip_line(std::string_view line) {
  return text::trim(line).empty() || line.front() == '#';
}

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ResourceError("cannot open " + path);
  return in;
}

}  // namespace detail

class Lexicon {
 public:
  Lexicon() = default;
  explicit Lexicon(std::string language) : language_(std::move(language)) {}

  const std::string& language() const noexcept { return language_; }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  // Adds an entry; returns false if (grapheme, pos, rank) is already taken.
  bool add(LexiconEntry entry) {
    if (entry.grapheme.empty() || entry.phonemes.empty())
      throw Error("lexicon entry with empty grapheme or phonemes");
    auto& list = entries_[entry.grapheme];
    for (const auto& e : list)
      if (e.pos == entry.pos && e.rank == entry.rank) return false;
    auto& folded = folded_[text::fold(entry.grapheme)];
    if (std::find(folded.begin(), folded.end(), entry.grapheme) == folded.end()) {
      folded.push_back(entry.grapheme);
      std::sort(folded.begin(), folded.end());
    }
    list.push_back(std::move(entry));
    std::stable_sort(list.begin(), list.end(), [](const auto& a, const auto& b) {
      return std::tuple(!a.pos.has_value(), a.rank) <
             std::tuple(!b.pos.has_value(), b.rank);
    });
    ++size_;
    return true;
  }

  // Exact-case match first, then case-folded. Within the matching entries:
  // exact POS, then a verbal entry for a verbal query (VB/VBD/VERB), then
  // the lowest-rank untagged entry, then the lowest-rank entry overall.
  std::optional<std::string> lookup(std::string_view word,
                                    std::optional<Pos> pos = std::nullopt) const {
    if (word.empty()) return std::nullopt;
    if (auto it = entries_.find(std::string(word)); it != entries_.end())
      return select(it->second, pos);
    auto it = folded_.find(text::fold(word));
    if (it == folded_.end()) return std::nullopt;
    std::vector<LexiconEntry> merged;
    for (const auto& g : it->second) {
      const auto& list = entries_.at(g);
      merged.insert(merged.end(), list.begin(), list.end());
    }
    std::stable_sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) {
      return std::tuple(!a.pos.has_value(), a.rank) <
             std::tuple(!b.pos.has_value(), b.rank);
    });
    return select(merged, pos);
  }

  // True if the case-folded word is a key.
  bool contains(std::string_view word) const {
    return folded_.count(text::fold(word)) > 0;
  }

  const std::vector<LexiconEntry>* entries_for(std::string_view grapheme) const {
    auto it = entries_.find(std::string(grapheme));
    return it == entries_.end() ? nullptr : &it->second;
  }

  // Iteration over grapheme -> entries, in grapheme order.
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

 private:
  static std::optional<std::string> select(const std::vector<LexiconEntry>& list,
                                           std::optional<Pos> pos) {
    if (list.empty()) return std::nullopt;
    auto lowest = [&](auto pred) -> const LexiconEntry* {
      const LexiconEntry* best = nullptr;
      for (const auto& e : list)
        if (pred(e) && (!best || e.rank < best->rank)) best = &e;
      return best;
    };
    if (pos) {
      if (auto* e = lowest([&](const auto& e) { return e.pos == pos; }))
        return e->phonemes;
      if (is_verbal(*pos)) {
        if (auto* e = lowest([](const auto& e) { return e.pos && is_verbal(*e.pos); }))
          return e->phonemes;
      }
    }
    if (auto* e = lowest([](const auto& e) { return !e.pos; })) return e->phonemes;
    return lowest([](const auto&) { return true; })->phonemes;
  }

  std::string language_;
  std::map<std::string, std::vector<LexiconEntry>> entries_;
  std::unordered_map<std::string, std::vector<std::string>> folded_;
  std::size_t size_ = 0;
};

// Parses `grapheme \t ipa \t pos-or-dash \t rank` rows.
inline Lexicon parse_lexicon(std::istream& in, const std::string& language,
                             const std::string& source = "<lexicon>") {
  Lexicon lex(language);
  std::string line;
  std::size_t line_no = 0;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    ++line_no;
    try {
      text::validate(line, offset);
    } catch (const EncodingError& e) {
      throw FormatError(source, line_no, e.what());
    }
    offset += line.size() + 1;
    if (detail::skip_line(line)) continue;
    const auto cols = detail::read_columns(line);
    if (cols.size() != 4)
      throw FormatError(source, line_no, "expected 4 tab-separated columns");
    LexiconEntry entry;
    entry.grapheme = std::string(cols[0]);
    entry.phonemes = std::string(cols[1]);
    if (entry.grapheme.empty() || entry.phonemes.empty())
      throw FormatError(source, line_no, "empty grapheme or phonemes");
    if (cols[2] != "-") {
      entry.pos = parse_pos(cols[2]);
      if (!entry.pos)
        throw FormatError(source, line_no, "unknown POS tag '" + std::string(cols[2]) + "'");
    }
    const auto rank_col = cols[3];
    const auto [ptr, ec] =
        std::from_chars(rank_col.data(), rank_col.data() + rank_col.size(), entry.rank);
    if (ec != std::errc() || ptr != rank_col.data() + rank_col.size() || rank_col.empty())
      throw FormatError(source, line_no, "rank must be a non-negative integer");
    const std::string key = entry.grapheme;
    if (!lex.add(std::move(entry)))
      throw FormatError(source, line_no, "duplicate entry for '" + key + "'");
  }
  return lex;
}

inline Lexicon load_lexicon(const std::string& path, const std::string& language) {
  auto in = detail::open_input(path);
  return parse_lexicon(in, language, path);
}

// Abbreviation, symbol and character-map tables, keyed by language.
class AuxLexica {
 public:
  struct Tables {
    std::map<std::string, std::string> abbreviations;  // uppercase keys
    std::map<std::string, std::string> symbols;
    std::map<std::string, std::string> char_map;
  };

  Tables& tables(const std::string& language) { return by_language_[language]; }

  const Tables* find(std::string_view language) const {
    auto it = by_language_.find(std::string(language));
    return it == by_language_.end() ? nullptr : &it->second;
  }

  void add_abbreviation(const std::string& language, std::string_view surface,
                        std::string phonemes) {
    tables(language).abbreviations[text::upper(surface)] = std::move(phonemes);
  }
  void add_symbol(const std::string& language, std::string symbol, std::string words) {
    tables(language).symbols[std::move(symbol)] = std::move(words);
  }
  void add_char(const std::string& language, std::string ch, std::string phonemes) {
    tables(language).char_map[std::move(ch)] = std::move(phonemes);
  }

  std::optional<std::string> lookup_abbreviation(std::string_view word,
                                                 std::string_view language) const {
    const Tables* t = find(language);
    if (!t || word.empty()) return std::nullopt;
    auto it = t->abbreviations.find(text::upper(word));
    if (it == t->abbreviations.end()) return std::nullopt;
    return it->second;
  }

  std::optional<std::string> expand_symbol(std::string_view symbol,
                                           std::string_view language) const {
    const Tables* t = find(language);
    if (!t) return std::nullopt;
    auto it = t->symbols.find(std::string(symbol));
    if (it == t->symbols.end()) return std::nullopt;
    return it->second;
  }

  bool is_symbol(std::string_view symbol, std::string_view language) const {
    return expand_symbol(symbol, language).has_value();
  }

  // Per-character pronunciation joined by single spaces. Throws naming the
  // first character without a mapping (exact case, then lowercase).
  std::string spell_out(std::string_view word, std::string_view language) const {
    const Tables* t = find(language);
    std::vector<std::string> parts;
    for (std::size_t pos = 0; pos < word.size();) {
      const std::size_t start = pos;
      const char32_t cp = text::decode(word, pos);
      const std::string ch(word.substr(start, pos - start));
      const std::string* found = nullptr;
      if (t) {
        if (auto it = t->char_map.find(ch); it != t->char_map.end()) {
          found = &it->second;
        } else {
          std::string lower;
          text::append(lower, text::to_lower(cp));
          if (auto it2 = t->char_map.find(lower); it2 != t->char_map.end())
            found = &it2->second;
        }
      }
      if (!found) throw Error("no character mapping for '" + ch + "'");
      parts.push_back(*found);
    }
    return text::join(parts, " ");
  }

  bool can_spell(std::string_view word, std::string_view language) const {
    if (word.empty()) return false;
    try {
      spell_out(word, language);
      return true;
    } catch (const Error&) {
      return false;
    }
  }

 private:
  std::map<std::string, Tables> by_language_;
};

namespace detail {

template <typename Insert>
void parse_pairs(std::istream& in, const std::string& source, Insert insert) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t offset = 0;
  std::map<std::string, std::size_t> seen;
  while (std::getline(in, line)) {
    ++line_no;
    try {
      text::validate(line, offset);
    } catch (const EncodingError& e) {
      throw FormatError(source, line_no, e.what());
    }
    offset += line.size() + 1;
    if (detail::skip_line(line)) continue;
    const auto cols = read_columns(line);
    if (cols.size() != 2 || cols[0].empty() || cols[1].empty())
      throw FormatError(source, line_no, "expected 2 non-empty tab-separated columns");
    if (!seen.emplace(std::string(cols[0]), line_no).second)
      throw FormatError(source, line_no, "duplicate key '" + std::string(cols[0]) + "'");
    insert(cols[0], cols[1], line_no);
  }
}

}  // namespace detail

inline void parse_abbreviations(std::istream& in, AuxLexica& aux,
                                const std::string& language,
                                const std::string& source = "<abbreviations>") {
  detail::parse_pairs(in, source, [&](auto key, auto value, std::size_t) {
    aux.add_abbreviation(language, key, std::string(value));
  });
}

inline void parse_symbols(std::istream& in, AuxLexica& aux, const std::string& language,
                          const std::string& source = "<symbols>") {
  detail::parse_pairs(in, source, [&](auto key, auto value, std::size_t) {
    aux.add_symbol(language, std::string(key), std::string(value));
  });
}

inline void parse_char_map(std::istream& in, AuxLexica& aux, const std::string& language,
                           const std::string& source = "<chars>") {
  detail::parse_pairs(in, source, [&](auto key, auto value, std::size_t line_no) {
    if (text::length(key) != 1)
      throw FormatError(source, line_no, "character-map key must be one character");
    aux.add_char(language, std::string(key), std::string(value));
  });
}

}  // namespace olaph
