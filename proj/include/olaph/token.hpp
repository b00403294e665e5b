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

#pragma once

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "olaph/lexicon.hpp"
#include "olaph/text.hpp"

namespace olaph {

enum class TokenKind { kWord, kNumber, kSymbol, kPunctuation };
enum class Entity { kPerson, kOrg, kLocation, kMisc };

inline std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::kWord: return "word";
    case TokenKind::kNumber: return "number";
    case TokenKind::kSymbol: return "symbol";
    case TokenKind::kPunctuation: return "punctuation";
  }
  return "word";
}

inline std::string_view to_string(Entity entity) {
  switch (entity) {
    case Entity::kPerson: return "person";
    case Entity::kOrg: return "org";
    case Entity::kLocation: return "location";
    case Entity::kMisc: return "misc";
  }
  return "misc";
}

inline std::optional<Entity> parse_entity(std::string_view s) {
  if (s == "person") return Entity::kPerson;
  if (s == "org") return Entity::kOrg;
  if (s == "location") return Entity::kLocation;
  if (s == "misc") return Entity::kMisc;
  return std::nullopt;
}

struct Span {
  std::size_t start = 0;
  std::size_t end = 0;
  friend bool operator==(const Span&, const Span&) = default;
};

struct Token {
  std::string surface;
  Span span;
  TokenKind kind = TokenKind::kWord;
  std::optional<Pos> pos;
  std::optional<Entity> entity;
  std::optional<std::string> language;
  // Set on words produced by number/symbol normalization.
  bool normalized = false;
};

inline bool is_punctuation(char32_t c) {
  switch (c) {
    case U'.': case U',': case U';': case U':': case U'!': case U'?':
    case U'"': case U'\'': case U'(': case U')': case U'[': case U']':
    case U'{': case U'}': case U'-': case U'/': case 0x2013: case 0x2014:
    case 0x2026: case 0xAB: case 0xBB: case 0x201E: case 0x201C:
    case 0x201D: case 0x2018: case 0x2019: case 0x201A: case 0xBF: case 0xA1:
      return true;
    default:
      return false;
  }
}

// Splits a sentence into word, number, symbol and punctuation tokens whose
// spans tile its non-whitespace bytes.
//
// Words are letter runs that may contain internal hyphens and apostrophes.
// Numbers are digit runs joined by single '.', ',', ':' or '/' separators;
// in English an immediate st/nd/rd/th suffix belongs to the number, in
// German a trailing '.' does when a word follows.
inline std::vector<Token> tokenize(std::string_view sentence, std::string_view language) {
  std::vector<Token> tokens;
  auto peek = [&](std::size_t at) -> char32_t {
    if (at >= sentence.size()) return 0;
    std::size_t p = at;
    return text::decode(sentence, p);
  };
  auto next_pos = [&](std::size_t at) {
    std::size_t p = at;
    text::decode(sentence, p);
    return p;
  };
  std::size_t pos = 0;
  while (pos < sentence.size()) {
    const std::size_t start = pos;
    const char32_t c = peek(pos);
    if (text::is_space(c)) {
      pos = next_pos(pos);
      continue;
    }
    Token tok;
    if (text::is_letter(c)) {
      tok.kind = TokenKind::kWord;
      pos = next_pos(pos);
      for (;;) {
        const char32_t d = peek(pos);
        if (text::is_letter(d)) {
          pos = next_pos(pos);
        } else if ((d == U'-' || d == U'\'' || d == 0x2019) &&
                   text::is_letter(peek(next_pos(pos)))) {
          pos = next_pos(pos);
        } else {
          break;
        }
      }
    } else if (text::is_digit(c)) {
      tok.kind = TokenKind::kNumber;
      ++pos;
      for (;;) {
        const char32_t d = peek(pos);
        if (text::is_digit(d)) {
          ++pos;
        } else if ((d == U'.' || d == U',' || d == U':' || d == U'/') &&
                   text::is_digit(peek(pos + 1))) {
          ++pos;
        } else {
          break;
        }
      }
      if (language == "en") {
        const auto rest = sentence.substr(pos, 2);
        if ((rest == "st" || rest == "nd" || rest == "rd" || rest == "th") &&
            !text::is_letter(peek(pos + 2)))
          pos += 2;
      } else if (language == "de" && peek(pos) == U'.') {
        std::size_t after = pos + 1;
        while (after < sentence.size() && text::is_space(peek(after))) after = next_pos(after);
        if (after > pos + 1 && text::is_letter(peek(after))) ++pos;
      }
    } else {
      tok.kind = is_punctuation(c) ? TokenKind::kPunctuation : TokenKind::kSymbol;
      pos = next_pos(pos);
    }
    tok.span = {start, pos};
    tok.surface = std::string(sentence.substr(start, pos - start));
    tokens.push_back(std::move(tok));
  }
  return tokens;
}

// Joins output pieces with single spaces. Closing punctuation attaches to the
// left and opening punctuation to the right; the flag marks non-word pieces.
inline std::string join_pieces(const std::vector<std::pair<std::string, bool>>& pieces) {
  static constexpr std::string_view kClosing[] = {".", ",", ";", ":", "!", "?", ")", "]", "}",
                                                  "…", "»", "“", "%"};
  static constexpr std::string_view kOpening[] = {"(", "[", "{", "„", "«", "¿", "¡"};
  auto in = [](const auto& list, std::string_view s) {
    return std::find(std::begin(list), std::end(list), s) != std::end(list);
  };
  std::string out;
  bool glue_next = true;
  for (const auto& [piece, passthrough] : pieces) {
    const bool attach_left = passthrough && in(kClosing, piece);
    if (!out.empty() && !attach_left && !glue_next) out += ' ';
    out += piece;
    glue_next = passthrough && in(kOpening, piece);
  }
  return out;
}

inline std::string join_tokens(const std::vector<Token>& tokens) {
  std::vector<std::pair<std::string, bool>> pieces;
  for (const auto& t : tokens) pieces.emplace_back(t.surface, t.kind != TokenKind::kWord);
  return join_pieces(pieces);
}

}  // namespace olaph
