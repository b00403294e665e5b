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

// Probabilistic compound splitting.
//
// Every exact cover of a word by lexicon subwords is enumerated and scored as
//
//   score(W) = n^-beta * sum_{s in W} P(s) * (len(s) / len(W))^alpha * L(s)
//
// where len() counts characters, n is the number of subwords in the cover,
// P(s) comes from corpus statistics and L(s) penalises one- and two-letter
// pieces (0.1 and 0.5). The n^-beta factor is constant per cover and is
// applied outside the sum.

#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "olaph/corpus_stats.hpp"
#include "olaph/error.hpp"
#include "olaph/lexicon.hpp"
#include "olaph/text.hpp"

namespace olaph {

struct ScoreParams {
  double alpha = 1.0;
  double beta = 15.0;

  void validate() const {
    if (!std::isfinite(alpha) || !std::isfinite(beta) || alpha < 0 || beta < 0)
      throw Error("score parameters must be finite and non-negative");
  }
};

struct SplitLimits {
  std::size_t max_word_length = 64;  // characters
  std::size_t max_subwords = 8;
};

struct Subword {
  std::string surface;
  std::string language;
  std::string phonemes;

  friend bool operator==(const Subword&, const Subword&) = default;
};

struct Segmentation {
  std::string word;
  std::vector<Subword> subwords;
  double score = 0.0;

  std::string phonemes() const {
    std::string out;
    for (const auto& s : subwords) out += s.phonemes;
    return out;
  }

  // Subword surfaces joined by '|'.
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < subwords.size(); ++i) {
      if (i) out += '|';
      out += subwords[i].surface;
    }
    return out;
  }
};

// Multiplier for very short subwords.
inline double length_penalty(std::size_t chars) {
  if (chars == 1) return 0.1;
  if (chars == 2) return 0.5;
  return 1.0;
}

// Result of a candidate predicate: the language a subword is attributed to and
// its pronunciation. Absent means "not a valid subword".
using Candidate = std::optional<std::pair<std::string, std::string>>;

// Enumerates every exact cover of `word` whose pieces all satisfy
// `is_candidate`. Covers are listed in ascending order of their split-position
// sequences, with a shorter sequence before any of its extensions; for "abc"
// that is [abc], [a,bc], [a,b,c], [ab,c].
template <typename Predicate>
std::vector<Segmentation> enumerate_segmentations(std::string_view word,
                                                  Predicate&& is_candidate,
                                                  const SplitLimits& limits = {}) {
  if (limits.max_subwords < 1) throw Error("max_subwords must be at least 1");
  const auto bounds = text::boundaries(word);
  const std::size_t n = bounds.size() - 1;
  if (n > limits.max_word_length)
    throw Error("word longer than " + std::to_string(limits.max_word_length) +
                " characters: " + std::string(word));
  if (n == 0) return {};

  // piece[i][j]: candidate for characters [i, j).
  std::vector<std::vector<Candidate>> piece(n, std::vector<Candidate>(n + 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      piece[i][j] = is_candidate(word.substr(bounds[i], bounds[j] - bounds[i]));

  // suffixes[i]: every cover of [i, n) as a list of end offsets, at most
  // max_subwords long, memoised per start offset.
  using Ends = std::vector<std::size_t>;
  std::vector<std::optional<std::vector<Ends>>> memo(n + 1);
  std::function<const std::vector<Ends>&(std::size_t)> suffixes =
      [&](std::size_t start) -> const std::vector<Ends>& {
    auto& slot = memo[start];
    if (slot) return *slot;
    std::vector<Ends> out;
    if (piece[start][n]) out.push_back({n});
    for (std::size_t end = start + 1; end < n; ++end) {
      if (!piece[start][end]) continue;
      for (const auto& rest : suffixes(end)) {
        if (rest.size() + 1 > limits.max_subwords) continue;
        Ends ends{end};
        ends.insert(ends.end(), rest.begin(), rest.end());
        out.push_back(std::move(ends));
      }
    }
    slot = std::move(out);
    return *slot;
  };

  std::vector<Segmentation> result;
  for (const auto& ends : suffixes(0)) {
    Segmentation seg;
    seg.word = std::string(word);
    std::size_t start = 0;
    for (std::size_t end : ends) {
      const auto& cand = *piece[start][end];
      seg.subwords.push_back({std::string(word.substr(bounds[start], bounds[end] - bounds[start])),
                              cand.first, cand.second});
      start = end;
    }
    result.push_back(std::move(seg));
  }
  return result;
}

// Throws if the subwords do not reassemble the word (case-folded).
inline void check_cover(const Segmentation& seg) {
  std::string joined;
  for (const auto& s : seg.subwords) {
    if (s.surface.empty()) throw Error("segmentation contains an empty subword");
    joined += s.surface;
  }
  if (seg.subwords.empty() || text::fold(joined) != text::fold(seg.word))
    throw Error("segmentation does not cover '" + seg.word + "'");
}

inline double score_segmentation(const Segmentation& seg, const CorpusStats& stats,
                                 const ScoreParams& params) {
  check_cover(seg);
  params.validate();
  const double word_len = static_cast<double>(text::length(seg.word));
  double sum = 0.0;
  for (const auto& s : seg.subwords) {
    const std::size_t len = text::length(s.surface);
    sum += probability(stats, s.surface) *
           std::pow(static_cast<double>(len) / word_len, params.alpha) * length_penalty(len);
  }
  return std::pow(static_cast<double>(seg.subwords.size()), -params.beta) * sum;
}

// Guesses the language of a string among the given candidates. May return
// nothing or a language outside the candidates.
using LanguageGuesser = std::function<std::optional<std::string>(
    std::string_view text, const std::vector<std::string>& candidates)>;

// Picks the language for a subword found in one or more lexica. A unique
// member wins; with several members the guess is used when it names one of
// them, otherwise the highest-priority member (the primary lexicon when it
// contains the subword). Returns nothing if no lexicon contains it.
inline std::optional<std::pair<std::string, std::string>> attribute_language(
    std::string_view subword, std::span<const Lexicon* const> lexica,
    const LanguageGuesser& guess = {}) {
  std::vector<const Lexicon*> members;
  for (const Lexicon* lex : lexica)
    if (lex && lex->contains(subword)) members.push_back(lex);
  if (members.empty()) return std::nullopt;
  const Lexicon* chosen = members.front();
  if (members.size() > 1 && guess) {
    std::vector<std::string> langs;
    for (const Lexicon* lex : members) langs.push_back(lex->language());
    if (auto verdict = guess(subword, langs)) {
      for (const Lexicon* lex : members)
        if (lex->language() == *verdict) {
          chosen = lex;
          break;
        }
    }
  }
  return std::pair{chosen->language(), *chosen->lookup(subword)};
}

// Highest-scoring cover; ties go to fewer subwords, then to the earlier cover
// in enumeration order.
inline std::optional<Segmentation> best_split(std::string_view word,
                                              std::span<const Lexicon* const> lexica,
                                              const CorpusStats& stats,
                                              const ScoreParams& params = {},
                                              const LanguageGuesser& guess = {},
                                              const SplitLimits& limits = {}) {
  if (word.empty()) throw Error("best_split requires a non-empty word");
  params.validate();
  auto candidates = enumerate_segmentations(
      word,
      [&](std::string_view sub) -> Candidate { return attribute_language(sub, lexica, guess); },
      limits);
  std::optional<Segmentation> best;
  for (auto& seg : candidates) {
    seg.score = score_segmentation(seg, stats, params);
    if (!best || seg.score > best->score ||
        (seg.score == best->score && seg.subwords.size() < best->subwords.size()))
      best = std::move(seg);
  }
  return best;
}

}  // namespace olaph
