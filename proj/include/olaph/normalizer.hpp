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

// Number and symbol normalization into spoken words for English and German.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "olaph/error.hpp"
#include "olaph/lexicon.hpp"
#include "olaph/text.hpp"
#include "olaph/token.hpp"

namespace olaph {

enum class NumberKind { kCardinal, kOrdinal, kDecimal, kDate, kTime, kYear };

inline std::string_view to_string(NumberKind kind) {
  switch (kind) {
    case NumberKind::kCardinal: return "cardinal";
    case NumberKind::kOrdinal: return "ordinal";
    case NumberKind::kDecimal: return "decimal";
    case NumberKind::kDate: return "date";
    case NumberKind::kTime: return "time";
    case NumberKind::kYear: return "year";
  }
  return "cardinal";
}

struct NumberToken {
  std::string surface;
  NumberKind kind = NumberKind::kCardinal;
  std::string language;
};

// Neighbouring tokens of a number, as seen by the classifier.
struct NumberContext {
  std::optional<std::string> previous;  // preceding word, if any
  std::optional<TokenKind> next_kind;
  std::optional<std::string> next;
};

// German adjective declension, selecting the ordinal ending.
enum class GrammaticalCase { kNominative, kAccusative, kDative, kGenitive };
enum class Gender { kMasculine, kFeminine, kNeuter, kPlural };
enum class Declension { kWeak, kMixed, kStrong };

struct OrdinalInflection {
  GrammaticalCase grammatical_case = GrammaticalCase::kNominative;
  Gender gender = Gender::kMasculine;
  Declension declension = Declension::kWeak;
};

inline constexpr std::int64_t kMaxCardinal = 1'000'000'000'000'000;  // 10^15

namespace detail {

inline void check_language(std::string_view language) {
  if (language != "en" && language != "de")
    throw Error("normalization is not supported for language '" + std::string(language) + "'");
}

// ---- English ---------------------------------------------------------------

inline constexpr std::array<std::string_view, 20> kEnSmall = {
    "zero",    "one",     "two",       "three",    "four",     "five",    "six",
    "seven",   "eight",   "nine",      "ten",      "eleven",   "twelve",  "thirteen",
    "fourteen", "fifteen", "sixteen",  "seventeen", "eighteen", "nineteen"};
inline constexpr std::array<std::string_view, 10> kEnTens = {
    "", "", "twenty", "thirty", "forty", "fifty", "sixty", "seventy", "eighty", "ninety"};
inline constexpr std::array<std::string_view, 6> kEnScales = {
    "", "thousand", "million", "billion", "trillion", "quadrillion"};

inline std::string en_below_100(std::int64_t n) {
  if (n < 20) return std::string(kEnSmall[n]);
  std::string out(kEnTens[n / 10]);
  if (n % 10) out += "-" + std::string(kEnSmall[n % 10]);
  return out;
}

inline std::string en_below_1000(std::int64_t n) {
  if (n < 100) return en_below_100(n);
  std::string out = std::string(kEnSmall[n / 100]) + " hundred";
  if (n % 100) out += " and " + en_below_100(n % 100);
  return out;
}

// Groups are joined with "and" before a trailing part under one hundred and
// with a comma otherwise ("one thousand and one", "one thousand, two
// hundred").
inline std::string en_cardinal(std::int64_t n) {
  if (n < 0) return "minus " + en_cardinal(-n);
  if (n < 1000) return en_below_1000(n);
  std::vector<std::int64_t> groups;
  for (std::int64_t v = n; v > 0; v /= 1000) groups.push_back(v % 1000);
  std::string out;
  for (std::size_t i = groups.size(); i-- > 0;) {
    const std::int64_t g = groups[i];
    if (g == 0) continue;
    std::string part = en_below_1000(g);
    if (i > 0) part += " " + std::string(kEnScales[i]);
    if (!out.empty()) out += (i == 0 && g < 100) ? " and " : ", ";
    out += part;
  }
  return out;
}

inline std::string en_ordinal_word(std::string_view word) {
  static constexpr std::pair<std::string_view, std::string_view> kIrregular[] = {
      {"one", "first"}, {"two", "second"}, {"three", "third"}, {"five", "fifth"},
      {"eight", "eighth"}, {"nine", "ninth"}, {"twelve", "twelfth"}};
  for (const auto& [card, ord] : kIrregular)
    if (word == card) return std::string(ord);
  if (!word.empty() && word.back() == 'y')
    return std::string(word.substr(0, word.size() - 1)) + "ieth";
  return std::string(word) + "th";
}

inline std::string en_ordinal(std::int64_t n) {
  const std::string card = en_cardinal(n);
  const std::size_t cut = card.find_last_of(" -");
  const std::size_t start = cut == std::string::npos ? 0 : cut + 1;
  return card.substr(0, start) + en_ordinal_word(card.substr(start));
}

inline std::string en_year(std::int64_t n) {
  if (n < 1100 || n > 1999) return en_cardinal(n);
  const std::int64_t high = n / 100;
  const std::int64_t low = n % 100;
  if (low == 0) return en_below_100(high) + " hundred";
  if (low < 10) return en_below_100(high) + " oh-" + en_below_100(low);
  return en_below_100(high) + " " + en_below_100(low);
}

// ---- German ----------------------------------------------------------------

inline constexpr std::array<std::string_view, 20> kDeSmall = {
    "null",     "eins",     "zwei",     "drei",      "vier",
    "fünf",     "sechs",    "sieben",   "acht",      "neun",
    "zehn",     "elf",      "zwölf",    "dreizehn",  "vierzehn",
    "fünfzehn", "sechzehn", "siebzehn", "achtzehn",  "neunzehn"};
inline constexpr std::array<std::string_view, 10> kDeTens = {
    "", "", "zwanzig", "dreißig", "vierzig", "fünfzig", "sechzig", "siebzig", "achtzig", "neunzig"};

// `bare_one`: render a final 1 as "ein" (before "hundert", "tausend", ...).
inline std::string de_below_100(std::int64_t n, bool bare_one) {
  if (n == 1) return bare_one ? "ein" : "eins";
  if (n < 20) return std::string(kDeSmall[n]);
  std::string out;
  if (n % 10) out = (n % 10 == 1 ? std::string("ein") : std::string(kDeSmall[n % 10])) + "und";
  return out + std::string(kDeTens[n / 10]);
}

inline std::string de_below_1000(std::int64_t n, bool bare_one) {
  if (n < 100) return de_below_100(n, bare_one);
  std::string out = de_below_100(n / 100, true) + "hundert";
  if (n % 100) out += de_below_100(n % 100, bare_one);
  return out;
}

inline std::string de_below_million(std::int64_t n, bool bare_one) {
  if (n < 1000) return de_below_1000(n, bare_one);
  std::string out = de_below_1000(n / 1000, true) + "tausend";
  if (n % 1000) out += de_below_1000(n % 1000, bare_one);
  return out;
}

struct DeScale {
  std::int64_t value;
  std::string_view singular;
  std::string_view plural;
};
inline constexpr std::array<DeScale, 4> kDeScales = {{
    {1'000'000'000'000'000, "Billiarde", "Billiarden"},
    {1'000'000'000'000, "Billion", "Billionen"},
    {1'000'000'000, "Milliarde", "Milliarden"},
    {1'000'000, "Million", "Millionen"},
}};

// Words for the part of n at or above one million, e.g. "zwei Millionen".
inline std::string de_large_part(std::int64_t n) {
  std::string out;
  for (const auto& scale : kDeScales) {
    const std::int64_t count = (n / scale.value) % 1000;
    if (count == 0) continue;
    if (!out.empty()) out += ' ';
    if (count == 1) {
      out += "eine " + std::string(scale.singular);
    } else {
      out += de_below_1000(count, true) + " " + std::string(scale.plural);
    }
  }
  return out;
}

// Numbers below one million form a single word; each power of a million is a
// separate noun ("eine Million zweihunderttausend").
inline std::string de_cardinal(std::int64_t n) {
  if (n < 0) return "minus " + de_cardinal(-n);
  if (n == 0) return "null";
  std::string out = de_large_part(n);
  const std::int64_t rest = n % 1'000'000;
  if (rest) {
    if (!out.empty()) out += ' ';
    out += de_below_million(rest, false);
  }
  return out;
}

inline std::string_view de_ending(const OrdinalInflection& f) {
  // [declension][case][gender]
  static constexpr std::string_view kTable[3][4][4] = {
      {{"e", "e", "e", "en"}, {"en", "e", "e", "en"}, {"en", "en", "en", "en"}, {"en", "en", "en", "en"}},
      {{"er", "e", "es", "en"}, {"en", "e", "es", "en"}, {"en", "en", "en", "en"}, {"en", "en", "en", "en"}},
      {{"er", "e", "es", "e"}, {"en", "e", "es", "e"}, {"em", "er", "em", "en"}, {"en", "er", "en", "er"}},
  };
  return kTable[static_cast<int>(f.declension)][static_cast<int>(f.grammatical_case)]
               [static_cast<int>(f.gender)];
}

// Ordinal stem without ending: "dritt", "zwanzigst", "einhundertdritt".
inline std::string de_ordinal_stem(std::int64_t n) {
  if (n >= 1'000'000) {
    const std::int64_t rest = n % 1'000'000;
    if (rest) return de_large_part(n) + " " + de_ordinal_stem(rest);
    // Exact multiples of a million: one word, "zweimillionst".
    for (const auto& scale : kDeScales) {
      if (n % scale.value != 0) continue;
      const std::int64_t count = n / scale.value;
      if (count >= 1000) continue;
      std::string noun = text::fold(scale.singular);
      if (noun.back() == 'e') noun.pop_back();
      return (count == 1 ? std::string() : de_below_1000(count, true)) + noun + "st";
    }
    return de_cardinal(n) + "st";
  }
  const std::int64_t low = n % 100;
  if (low >= 1 && low < 20) {
    std::string head;
    if (n >= 100) head = de_below_million(n - low, false);
    std::string tail;
    switch (low) {
      case 1: tail = "erst"; break;
      case 3: tail = "dritt"; break;
      case 7: tail = "siebt"; break;
      case 8: tail = "acht"; break;
      default: tail = std::string(kDeSmall[low]) + "t"; break;
    }
    return head + tail;
  }
  if (n == 100) return "hundertst";
  if (n == 1000) return "tausendst";
  return de_below_million(n, false) + "st";
}

inline std::string de_year(std::int64_t n) {
  if (n >= 1100 && n <= 1999) {
    const std::int64_t low = n % 100;
    return de_below_100(n / 100, true) + "hundert" + (low ? de_below_100(low, false) : "");
  }
  return de_cardinal(n);
}

inline constexpr std::array<std::string_view, 12> kEnMonths = {
    "January", "February", "March",     "April",   "May",      "June",
    "July",    "August",   "September", "October", "November", "December"};
inline constexpr std::array<std::string_view, 12> kDeMonths = {
    "Januar", "Februar", "März",      "April",   "Mai",      "Juni",
    "Juli",   "August",  "September", "Oktober", "November", "Dezember"};

inline std::int64_t parse_int(std::string_view digits) {
  std::int64_t v = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') throw Error("not an integer: " + std::string(digits));
    if (v > kMaxCardinal) throw Error("number out of range: " + std::string(digits));
    v = v * 10 + (c - '0');
  }
  return v;
}

inline std::string digit_word(char digit, std::string_view language) {
  const int d = digit - '0';
  return std::string(language == "en" ? kEnSmall[d] : kDeSmall[d]);
}

inline bool is_month_name(std::string_view word) {
  for (const auto& m : kEnMonths)
    if (text::fold(m) == text::fold(word)) return true;
  for (const auto& m : kDeMonths)
    if (text::fold(m) == text::fold(word)) return true;
  return false;
}

inline bool is_year_cue(std::string_view word) {
  static constexpr std::string_view kCues[] = {"in", "im", "since", "seit", "year", "jahr",
                                               "anno", "until", "bis", "from", "von", "ab"};
  const std::string w = text::fold(word);
  for (const auto& c : kCues)
    if (w == c) return true;
  return is_month_name(word);
}

// Pattern table; matched against the whole surface.
struct Patterns {
  std::regex time{R"(\d{1,2}:\d{2})"};
  std::regex de_date{R"(\d{1,2}\.\d{1,2}\.\d{2,4})"};
  std::regex en_date{R"(\d{1,2}/\d{1,2}/\d{2,4})"};
  std::regex de_decimal{R"(\d+,\d+)"};
  std::regex en_decimal{R"(\d+\.\d+)"};
  std::regex de_ordinal{R"(\d+\.)"};
  std::regex en_ordinal{R"(\d+(st|nd|rd|th))"};
  std::regex year{R"(\d{4})"};
  std::regex digits{R"(\d+)"};
  std::regex en_grouped{R"(\d{1,3}(,\d{3})+)"};
  std::regex de_grouped{R"(\d{1,3}(\.\d{3})+)"};
};

inline const Patterns& patterns() {
  static const Patterns p;
  return p;
}

inline std::vector<std::int64_t> digit_groups(std::string_view surface) {
  std::vector<std::int64_t> out;
  std::string cur;
  for (char c : surface) {
    if (c >= '0' && c <= '9') {
      cur += c;
    } else if (!cur.empty()) {
      out.push_back(parse_int(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(parse_int(cur));
  return out;
}

inline bool valid_time(std::string_view s) {
  const auto g = digit_groups(s);
  return g.size() == 2 && g[0] <= 24 && g[1] <= 59;
}

// Day, month, year in locale order; false if out of range.
inline bool valid_date(std::string_view s, std::string_view language) {
  const auto g = digit_groups(s);
  if (g.size() != 3) return false;
  const auto day = language == "en" ? g[1] : g[0];
  const auto month = language == "en" ? g[0] : g[1];
  if (month < 1 || month > 12 || day < 1) return false;
  static constexpr int kDays[] = {31, 29, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  const auto year = g[2];
  const bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
  if (month == 2 && day == 29) return leap;
  return day <= kDays[month - 1];
}

}  // namespace detail

inline std::string normalize_cardinal(std::int64_t n, std::string_view language) {
  detail::check_language(language);
  if (n > kMaxCardinal || n < -kMaxCardinal) throw Error("cardinal out of range");
  return language == "en" ? detail::en_cardinal(n) : detail::de_cardinal(n);
}

// German inflection is selected by `inflection`; English ignores it.
inline std::string normalize_ordinal(std::int64_t n, std::string_view language,
                                     const OrdinalInflection& inflection = {}) {
  detail::check_language(language);
  if (n < 1) throw Error("ordinal must be at least 1");
  if (n > kMaxCardinal) throw Error("ordinal out of range");
  if (language == "en") return detail::en_ordinal(n);
  return detail::de_ordinal_stem(n) + std::string(detail::de_ending(inflection));
}

inline std::string normalize_year(std::int64_t n, std::string_view language) {
  detail::check_language(language);
  if (n < 0 || n > kMaxCardinal) throw Error("year out of range");
  return language == "en" ? detail::en_year(n) : detail::de_year(n);
}

inline std::string normalize_decimal(std::string_view surface, std::string_view language) {
  detail::check_language(language);
  const auto& p = detail::patterns();
  const std::string s(surface);
  const bool en = language == "en";
  if (!std::regex_match(s, en ? p.en_decimal : p.de_decimal))
    throw Error("not a decimal: " + s);
  const std::size_t sep = s.find(en ? '.' : ',');
  std::string out = normalize_cardinal(detail::parse_int(s.substr(0, sep)), language);
  out += en ? " point" : " Komma";
  for (char c : s.substr(sep + 1)) out += " " + detail::digit_word(c, language);
  return out;
}

// en: M/D/Y read "December twenty-fourth two thousand and one";
// de: D.M.Y read "vierundzwanzigster Dezember zweitausendeins".
inline std::string normalize_date(std::string_view surface, std::string_view language) {
  detail::check_language(language);
  const auto& p = detail::patterns();
  const std::string s(surface);
  const bool en = language == "en";
  if (!std::regex_match(s, en ? p.en_date : p.de_date) || !detail::valid_date(s, language))
    throw Error("not a date: " + s);
  const auto g = detail::digit_groups(s);
  if (en) {
    return std::string(detail::kEnMonths[g[0] - 1]) + " " + normalize_ordinal(g[1], "en") + " " +
           normalize_year(g[2], "en");
  }
  const OrdinalInflection strong{GrammaticalCase::kNominative, Gender::kMasculine,
                                 Declension::kStrong};
  return normalize_ordinal(g[0], "de", strong) + " " + std::string(detail::kDeMonths[g[1] - 1]) +
         " " + normalize_year(g[2], "de");
}

inline std::string normalize_time(std::string_view surface, std::string_view language) {
  detail::check_language(language);
  const std::string s(surface);
  if (!std::regex_match(s, detail::patterns().time) || !detail::valid_time(s))
    throw Error("not a time: " + s);
  const auto g = detail::digit_groups(s);
  if (language == "en") {
    std::string out = normalize_cardinal(g[0], "en");
    if (g[1] == 0) return out + " o'clock";
    if (g[1] < 10) return out + " oh " + normalize_cardinal(g[1], "en");
    return out + " " + normalize_cardinal(g[1], "en");
  }
  std::string out = (g[0] == 1 ? std::string("ein") : normalize_cardinal(g[0], "de")) + " Uhr";
  if (g[1]) out += " " + normalize_cardinal(g[1], "de");
  return out;
}

inline NumberToken classify_numeric(std::string_view surface, std::string_view language,
                                    const NumberContext& context = {}) {
  const auto& p = detail::patterns();
  const std::string s(surface);
  const bool en = language == "en";
  NumberToken tok{s, NumberKind::kCardinal, std::string(language)};
  if (std::regex_match(s, p.time) && detail::valid_time(s)) {
    tok.kind = NumberKind::kTime;
  } else if (std::regex_match(s, en ? p.en_date : p.de_date) && detail::valid_date(s, language)) {
    tok.kind = NumberKind::kDate;
  } else if (std::regex_match(s, en ? p.en_decimal : p.de_decimal)) {
    tok.kind = NumberKind::kDecimal;
  } else if (!en && std::regex_match(s, p.de_ordinal) &&
             context.next_kind == TokenKind::kWord) {
    tok.kind = NumberKind::kOrdinal;
  } else if (en && std::regex_match(s, p.en_ordinal) && s.front() != '0') {
    tok.kind = NumberKind::kOrdinal;
  } else if (std::regex_match(s, p.year)) {
    const auto v = detail::parse_int(s);
    const bool unit_follows = context.next_kind == TokenKind::kSymbol;
    if (v >= 1000 && v <= 2099 && !unit_follows && context.previous &&
        detail::is_year_cue(*context.previous))
      tok.kind = NumberKind::kYear;
  }
  return tok;
}

// Spoken form of a classified number.
inline std::string normalize_number(const NumberToken& tok,
                                    const OrdinalInflection& inflection = {}) {
  const auto& lang = tok.language;
  detail::check_language(lang);
  switch (tok.kind) {
    case NumberKind::kTime: return normalize_time(tok.surface, lang);
    case NumberKind::kDate: return normalize_date(tok.surface, lang);
    case NumberKind::kDecimal: return normalize_decimal(tok.surface, lang);
    case NumberKind::kYear: return normalize_year(detail::parse_int(tok.surface), lang);
    case NumberKind::kOrdinal: {
      const auto groups = detail::digit_groups(tok.surface);
      if (groups.size() != 1 || groups[0] < 1)
        return normalize_cardinal(groups.empty() ? 0 : groups[0], lang);
      return normalize_ordinal(groups[0], lang, inflection);
    }
    case NumberKind::kCardinal: break;
  }
  const auto& p = detail::patterns();
  std::string s = tok.surface;
  if (std::regex_match(s, lang == "en" ? p.en_grouped : p.de_grouped))
    std::erase(s, lang == "en" ? ',' : '.');
  if (std::regex_match(s, p.digits)) {
    if (s.size() <= 15 || (s.size() == 16 && s == "1000000000000000"))
      return normalize_cardinal(detail::parse_int(s), lang);
    // Too long for a cardinal: read digit by digit.
    std::vector<std::string> words;
    for (char c : s) words.push_back(detail::digit_word(c, lang));
    return text::join(words, " ");
  }
  // Unrecognised separators: read each digit group on its own.
  std::vector<std::string> words;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    words.push_back(normalize_number({cur, NumberKind::kCardinal, lang}));
    cur.clear();
  };
  for (char c : s) {
    if (c >= '0' && c <= '9') {
      cur += c;
    } else {
      flush();
    }
  }
  flush();
  return text::join(words, " ");
}

inline bool is_currency(std::string_view symbol) {
  return symbol == "€" || symbol == "$" || symbol == "£" || symbol == "¥";
}

// Splits spoken text into word tokens flagged as normalized; commas of the
// English long-number style are dropped.
inline std::vector<Token> to_word_tokens(std::string_view spoken, const Span& span) {
  std::vector<Token> out;
  for (auto part : text::split(spoken, ' ')) {
    while (!part.empty() && part.back() == ',') part.remove_suffix(1);
    if (part.empty()) continue;
    Token t;
    t.surface = std::string(part);
    t.span = span;
    t.kind = TokenKind::kWord;
    t.normalized = true;
    out.push_back(std::move(t));
  }
  return out;
}

// Normalizes a number or symbol token into word tokens. A surface mixing
// digits and symbols ("42%", "€5") is re-tokenized first; a currency symbol
// directly before an amount is read after it. A symbol without a spoken form
// is returned unchanged (still a symbol token).
inline std::vector<Token> normalize_token(const Token& token, std::string_view language,
                                          const AuxLexica& aux,
                                          const NumberContext& context = {}) {
  detail::check_language(language);
  if (token.kind != TokenKind::kNumber && token.kind != TokenKind::kSymbol)
    throw Error("normalize_token expects a number or symbol token");
  auto pieces = tokenize(token.surface, language);
  // "3." is an ordinal only in context; the tokenizer already decided that.
  if (token.kind == TokenKind::kNumber && language == "de" &&
      std::regex_match(token.surface, detail::patterns().de_ordinal))
    pieces = {token};
  if (pieces.size() == 1) {
    const Token& piece = pieces.front();
    if (piece.kind == TokenKind::kNumber) {
      return to_word_tokens(normalize_number(classify_numeric(piece.surface, language, context)),
                            token.span);
    }
    if (auto words = aux.expand_symbol(piece.surface, language))
      return to_word_tokens(*words, token.span);
    Token same = token;
    same.kind = piece.kind;
    return {same};
  }
  std::vector<Token> out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const Token& piece = pieces[i];
    NumberContext ctx;
    if (i > 0) ctx.previous = pieces[i - 1].surface;
    else ctx.previous = context.previous;
    if (i + 1 < pieces.size()) {
      ctx.next_kind = pieces[i + 1].kind;
      ctx.next = pieces[i + 1].surface;
    } else {
      ctx.next_kind = context.next_kind;
      ctx.next = context.next;
    }
    Token sub = piece;
    sub.span = token.span;
    if (sub.kind == TokenKind::kSymbol && is_currency(sub.surface) && i + 1 < pieces.size() &&
        pieces[i + 1].kind == TokenKind::kNumber) {
      Token amount = pieces[i + 1];
      amount.span = token.span;
      NumberContext actx = ctx;
      actx.next_kind = i + 2 < pieces.size() ? std::optional(pieces[i + 2].kind) : context.next_kind;
      for (auto& t : normalize_token(amount, language, aux, actx)) out.push_back(std::move(t));
      for (auto& t : normalize_token(sub, language, aux, ctx)) out.push_back(std::move(t));
      ++i;
      continue;
    }
    if (sub.kind == TokenKind::kWord || sub.kind == TokenKind::kPunctuation) {
      out.push_back(std::move(sub));
      continue;
    }
    for (auto& t : normalize_token(sub, language, aux, ctx)) out.push_back(std::move(t));
  }
  return out;
}

// Convenience: surfaces of normalize_token's output.
inline std::vector<std::string> normalize_words(std::string_view surface, std::string_view language,
                                                const AuxLexica& aux,
                                                const NumberContext& context = {}) {
  Token t;
  t.surface = std::string(surface);
  t.span = {0, surface.size()};
  t.kind = text::has_digit(surface) ? TokenKind::kNumber : TokenKind::kSymbol;
  std::vector<std::string> out;
  for (const auto& tok : normalize_token(t, language, aux, context)) out.push_back(tok.surface);
  return out;
}

// Replaces the number and symbol tokens of a tokenized sentence by their spoken
// words. Tokens tagged with another normalizable language use it; everything
// else uses `language`. A currency symbol directly before an amount is read
// after it.
inline std::vector<Token> normalize_tokens(const std::vector<Token>& tokens, std::string_view language,
                                           const AuxLexica& aux) {
  detail::check_language(language);
  std::vector<Token> out;
  std::optional<std::string> previous_word;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& tok = tokens[i];
    if (tok.kind == TokenKind::kWord) {
      previous_word = tok.surface;
      out.push_back(tok);
      continue;
    }
    if (tok.kind == TokenKind::kPunctuation) {
      out.push_back(tok);
      continue;
    }
    const std::string lang = tok.language && (*tok.language == "en" || *tok.language == "de")
                                 ? *tok.language
                                 : std::string(language);
    auto context_at = [&](std::size_t k) {
      NumberContext ctx;
      ctx.previous = previous_word;
      if (k + 1 < tokens.size()) {
        ctx.next_kind = tokens[k + 1].kind;
        ctx.next = tokens[k + 1].surface;
      }
      return ctx;
    };
    auto emit = [&](const Token& t, const NumberContext& ctx) {
      for (auto& n : normalize_token(t, lang, aux, ctx)) {
        if (n.kind == TokenKind::kWord) n.language = lang;
        out.push_back(std::move(n));
      }
    };
    if (tok.kind == TokenKind::kSymbol && is_currency(tok.surface) && i + 1 < tokens.size() &&
        tokens[i + 1].kind == TokenKind::kNumber) {
      emit(tokens[i + 1], context_at(i + 1));
      emit(tok, context_at(i));
      ++i;
      continue;
    }
    emit(tok, context_at(i));
  }
  return out;
}

}  // namespace olaph
