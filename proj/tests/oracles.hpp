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

// Independent reference implementations and fixtures shared by the unit and
// acceptance suites. Nothing here calls into the splitter or normalizer.

#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "olaph/olaph.hpp"

namespace oracle {

inline const std::vector<std::string>& fixture_words() {
  static const std::vector<std::string> kWords = {
      "sun",  "flower", "day",  "light", "house", "boat", "rain", "bow",  "fire",  "man",
      "snow", "ball",   "foot", "hand",  "book",  "door", "bell", "key",  "bird",  "song",
      "star", "fish",   "cat",  "walk",  "side",  "way",  "stone", "wall", "air",  "port",
      "line", "time",   "ice",  "cake",  "pan",   "ten",  "tent", "s",    "a",     "at",
      "he",   "heat",   "eat",  "to",    "top",   "pot",  "ho",   "use",  "ear",   "arm",
      "all",  "one",    "in",   "an",    "me",    "tar",  "ok",   "re",   "ton",   "art"};
  return kWords;
}

inline olaph::Lexicon fixture_lexicon() {
  olaph::Lexicon lex("en");
  for (const auto& w : fixture_words()) lex.add({w, "/" + w + "/", std::nullopt, 0});
  return lex;
}

// Seeded counts; every seventh word is left out of the corpus so the floor
// probability is exercised.
inline olaph::CorpusStats fixture_stats() {
  olaph::CorpusStats stats;
  stats.language = "en";
  std::mt19937 rng(20260101);
  std::uniform_int_distribution<int> dist(1, 500);
  std::uint64_t sum = 0;
  const auto& words = fixture_words();
  for (std::size_t i = 0; i < words.size(); ++i) {
    const int c = dist(rng);
    if (i % 7 == 3) continue;
    stats.counts[words[i]] = static_cast<std::uint64_t>(c);
    sum += static_cast<std::uint64_t>(c);
  }
  stats.counts["filler"] = 1000;
  stats.total = sum + 1000;
  return stats;
}

// Concatenations of 2-4 fixture words, at most `max_len` letters.
inline std::vector<std::string> oracle_compounds(std::size_t n, std::uint32_t seed = 7,
                                                 std::size_t max_len = 18) {
  std::mt19937 rng(seed);
  const auto& words = fixture_words();
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  std::uniform_int_distribution<int> parts(2, 4);
  std::set<std::string> seen;
  std::vector<std::string> out;
  while (out.size() < n) {
    std::string w;
    const int k = parts(rng);
    for (int i = 0; i < k; ++i) w += words[pick(rng)];
    if (w.size() > max_len || !seen.insert(w).second) continue;
    out.push_back(w);
  }
  return out;
}

struct BruteResult {
  std::vector<std::string> pieces;
  double score = -1;
  bool found = false;
  bool unique = true;  // no other cover within 1e-12 relative of the best
};

// Scores every subset of the n-1 split points of an ASCII word directly from
// the definition.
inline BruteResult brute_force_split(const std::string& word, const std::set<std::string>& vocab,
                                     const std::map<std::string, std::uint64_t>& counts,
                                     std::uint64_t total, double alpha, double beta) {
  BruteResult best;
  const std::size_t n = word.size();
  const double floor_p = 0.5 / static_cast<double>(total);
  std::vector<double> scores;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    std::vector<std::string> pieces;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      if (i == n || (mask >> (i - 1)) & 1) {
        pieces.push_back(word.substr(start, i - start));
        start = i;
      }
    }
    bool ok = true;
    for (const auto& p : pieces) ok = ok && vocab.count(p);
    if (!ok) continue;
    double sum = 0;
    for (const auto& p : pieces) {
      auto it = counts.find(p);
      const double prob =
          it == counts.end() ? floor_p : static_cast<double>(it->second) / static_cast<double>(total);
      const double pen = p.size() == 1 ? 0.1 : p.size() == 2 ? 0.5 : 1.0;
      sum += prob * std::pow(static_cast<double>(p.size()) / static_cast<double>(n), alpha) * pen;
    }
    const double score = std::pow(static_cast<double>(pieces.size()), -beta) * sum;
    scores.push_back(score);
    if (!best.found || score > best.score ||
        (score == best.score && pieces.size() < best.pieces.size())) {
      best.pieces = pieces;
      best.score = score;
      best.found = true;
    }
  }
  int close = 0;
  for (double s : scores)
    if (std::abs(s - best.score) <= 1e-12 * best.score) ++close;
  best.unique = close == 1;
  return best;
}

// English number words back to an integer; commas and "and" are ignored.
inline std::int64_t words_to_number(const std::string& words) {
  static const std::map<std::string, std::int64_t> kSmall = {
      {"zero", 0},     {"one", 1},        {"two", 2},        {"three", 3},     {"four", 4},
      {"five", 5},     {"six", 6},        {"seven", 7},      {"eight", 8},     {"nine", 9},
      {"ten", 10},     {"eleven", 11},    {"twelve", 12},    {"thirteen", 13}, {"fourteen", 14},
      {"fifteen", 15}, {"sixteen", 16},   {"seventeen", 17}, {"eighteen", 18}, {"nineteen", 19},
      {"twenty", 20},  {"thirty", 30},    {"forty", 40},     {"fifty", 50},    {"sixty", 60},
      {"seventy", 70}, {"eighty", 80},    {"ninety", 90}};
  static const std::map<std::string, std::int64_t> kScale = {
      {"thousand", 1000}, {"million", 1000000}, {"billion", 1000000000}};
  std::string cleaned;
  for (char c : words) cleaned += (c == '-' || c == ',') ? ' ' : c;
  std::istringstream in(cleaned);
  std::int64_t total = 0;
  std::int64_t current = 0;
  bool any = false;
  std::string w;
  while (in >> w) {
    if (w == "and") continue;
    any = true;
    if (auto it = kSmall.find(w); it != kSmall.end()) {
      current += it->second;
    } else if (w == "hundred") {
      current *= 100;
    } else if (auto sc = kScale.find(w); sc != kScale.end()) {
      total += current * sc->second;
      current = 0;
    } else {
      throw std::runtime_error("unknown number word '" + w + "'");
    }
  }
  if (!any) throw std::runtime_error("no number words");
  return total + current;
}

// German number words (below one million) back to an integer.
inline std::int64_t german_words_to_number(std::string w) {
  static const std::vector<std::pair<std::string, std::int64_t>> kBase = {
      {"null", 0},      {"eins", 1},      {"ein", 1},        {"zwei", 2},      {"drei", 3},
      {"vier", 4},      {"fünf", 5},      {"sechs", 6},      {"sieben", 7},    {"acht", 8},
      {"neun", 9},      {"zehn", 10},     {"elf", 11},       {"zwölf", 12},    {"dreizehn", 13},
      {"vierzehn", 14}, {"fünfzehn", 15}, {"sechzehn", 16},  {"siebzehn", 17}, {"achtzehn", 18},
      {"neunzehn", 19}, {"zwanzig", 20},  {"dreißig", 30},   {"vierzig", 40},  {"fünfzig", 50},
      {"sechzig", 60},  {"siebzig", 70},  {"achtzig", 80},   {"neunzig", 90}};
  auto exact = [&](const std::string& x) -> std::int64_t {
    for (const auto& [k, v] : kBase)
      if (k == x) return v;
    return -1;
  };
  auto below_100 = [&](const std::string& x) -> std::int64_t {
    if (x.empty()) return 0;
    if (auto v = exact(x); v >= 0) return v;
    const auto und = x.find("und");
    if (und == std::string::npos) throw std::runtime_error("bad German number '" + x + "'");
    const auto unit = exact(x.substr(0, und));
    const auto tens = exact(x.substr(und + 3));
    if (unit < 1 || unit > 9 || tens < 20 || tens % 10)
      throw std::runtime_error("bad German number '" + x + "'");
    return tens + unit;
  };
  auto below_1000 = [&](const std::string& x) -> std::int64_t {
    const auto h = x.find("hundert");
    if (h == std::string::npos) return below_100(x);
    const std::int64_t count = h == 0 ? 1 : below_100(x.substr(0, h));
    return count * 100 + below_100(x.substr(h + 7));
  };
  const auto t = w.find("tausend");
  if (t == std::string::npos) return below_1000(w);
  const std::int64_t count = t == 0 ? 1 : below_1000(w.substr(0, t));
  return count * 1000 + below_1000(w.substr(t + 7));
}

struct NormCase {
  std::string language;
  std::string input;
  std::string expected;
};

inline std::vector<NormCase> normalization_cases(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<NormCase> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto a = line.find('\t');
    const auto b = line.find('\t', a + 1);
    out.push_back({line.substr(0, a), line.substr(a + 1, b - a - 1), line.substr(b + 1)});
  }
  return out;
}

inline std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

// Random sentences mixing words, numbers, symbols and punctuation.
inline std::vector<std::string> random_sentences(std::size_t n, const std::string& language,
                                                 std::uint32_t seed) {
  static const std::vector<std::string> kEn = {"the", "house", "is", "old", "we", "read",
                                               "a", "book", "in", "and", "it", "was"};
  static const std::vector<std::string> kDe = {"das", "Haus", "ist", "alt", "wir", "haben",
                                               "ein", "Buch", "im", "und", "es", "war"};
  const auto& words = language == "en" ? kEn : kDe;
  std::mt19937 rng(seed);
  auto below = [&](int k) { return std::uniform_int_distribution<int>(0, k - 1)(rng); };
  std::vector<std::string> out;
  while (out.size() < n) {
    std::string s;
    const int items = 3 + below(8);
    for (int i = 0; i < items; ++i) {
      std::string piece;
      switch (below(10)) {
        case 0: piece = std::to_string(below(100000)); break;
        case 1: piece = std::to_string(below(10)) + (language == "en" ? "." : ",") +
                        std::to_string(below(100)); break;
        case 2: {
          const int m = below(60);
          piece = std::to_string(below(24)) + ":" + (m < 10 ? "0" : "") + std::to_string(m);
          break;
        }
        case 3: piece = std::to_string(1 + below(99)) + (below(2) ? "%" : ""); break;
        case 4: piece = (language == "en" ? "$" : "€") + std::to_string(below(1000)); break;
        default: piece = words[static_cast<std::size_t>(below(static_cast<int>(words.size())))];
      }
      if (!s.empty()) s += ' ';
      s += piece;
      switch (below(8)) {
        case 0: s += ','; break;
        case 1: s += ';'; break;
        case 2: s += " -"; break;
        default: break;
      }
    }
    static const char* kEnds[] = {".", "!", "?"};
    s += kEnds[below(3)];
    if (below(4) == 0) s = "(" + s + ")";
    out.push_back(s);
  }
  return out;
}

inline const olaph::Resources& shared_resources() {
  static const olaph::Resources res =
      olaph::load_resources(OLAPH_DATA_DIR, olaph::available_languages(OLAPH_DATA_DIR));
  return res;
}

}  // namespace oracle
