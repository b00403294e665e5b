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

// Evaluation and data-generation utilities: cross-system output alignment and
// grapheme/phoneme pair generation.

#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "olaph/error.hpp"
#include "olaph/ipa.hpp"
#include "olaph/pipeline.hpp"

namespace olaph {

enum class MatchCategory { kAllMatch, kPartialMatch, kMismatch };

inline std::string_view to_string(MatchCategory c) {
  switch (c) {
    case MatchCategory::kAllMatch: return "all_match";
    case MatchCategory::kPartialMatch: return "partial_match";
    case MatchCategory::kMismatch: return "mismatch";
  }
  return "mismatch";
}

struct AlignmentRow {
  std::string surface;
  std::map<std::string, std::string> outputs;  // system -> stripped phonemes
  MatchCategory category = MatchCategory::kMismatch;
};

struct AlignmentSummary {
  std::size_t all_match = 0;
  std::size_t partial_match = 0;
  std::size_t mismatch = 0;
  // Partial-match rows in which the two named systems agree.
  std::map<std::pair<std::string, std::string>, std::size_t> pair_matches;

  std::size_t total() const { return all_match + partial_match + mismatch; }
};

struct Alignment {
  std::vector<AlignmentRow> rows;
  AlignmentSummary summary;
};

// Categorises each reference word by equality of the systems' outputs after
// strip_verbose: all equal, some pair equal, or all different.
inline Alignment align_outputs(const std::vector<std::string>& reference_tokens,
                               const std::map<std::string, std::vector<std::string>>& systems) {
  if (systems.size() < 2) throw Error("alignment needs at least two systems");
  for (const auto& [name, outputs] : systems)
    if (outputs.size() != reference_tokens.size())
      throw Error("system '" + name + "' has " + std::to_string(outputs.size()) +
                  " outputs for " + std::to_string(reference_tokens.size()) + " reference words");
  Alignment result;
  for (std::size_t i = 0; i < reference_tokens.size(); ++i) {
    AlignmentRow row;
    row.surface = reference_tokens[i];
    for (const auto& [name, outputs] : systems) row.outputs[name] = strip_verbose(outputs[i]);
    std::size_t equal_pairs = 0;
    std::size_t pairs = 0;
    std::vector<std::pair<std::string, std::string>> agreeing;
    for (auto a = row.outputs.begin(); a != row.outputs.end(); ++a) {
      for (auto b = std::next(a); b != row.outputs.end(); ++b) {
        ++pairs;
        if (a->second == b->second) {
          ++equal_pairs;
          agreeing.emplace_back(a->first, b->first);
        }
      }
    }
    if (equal_pairs == pairs) {
      row.category = MatchCategory::kAllMatch;
      ++result.summary.all_match;
    } else if (equal_pairs > 0) {
      row.category = MatchCategory::kPartialMatch;
      ++result.summary.partial_match;
      for (const auto& p : agreeing) ++result.summary.pair_matches[p];
    } else {
      row.category = MatchCategory::kMismatch;
      ++result.summary.mismatch;
    }
    result.rows.push_back(std::move(row));
  }
  return result;
}

// Review TSV: `surface \t category \t <system>...` with a header row.
inline void write_alignment_report(const Alignment& alignment, std::ostream& out) {
  out << "surface\tcategory";
  if (!alignment.rows.empty())
    for (const auto& [name, _] : alignment.rows.front().outputs) out << '\t' << name;
  out << '\n';
  for (const auto& row : alignment.rows) {
    out << row.surface << '\t' << to_string(row.category);
    for (const auto& [_, ph] : row.outputs) out << '\t' << ph;
    out << '\n';
  }
}

inline void write_alignment_summary(const AlignmentSummary& s, std::ostream& out) {
  out << "all_match\t" << s.all_match << '\n';
  for (const auto& [pair, n] : s.pair_matches)
    out << "match:" << pair.first << '+' << pair.second << '\t' << n << '\n';
  out << "partial_match\t" << s.partial_match << '\n';
  out << "mismatch\t" << s.mismatch << '\n';
  out << "total\t" << s.total() << '\n';
}

inline nlohmann::ordered_json to_json(const PhonemizedSentence& sentence,
                                      std::string_view language) {
  nlohmann::ordered_json words = nlohmann::ordered_json::array();
  for (const auto& item : sentence.items) {
    nlohmann::ordered_json w;
    if (const auto* pw = std::get_if<PhonemizedWord>(&item)) {
      w["surface"] = pw->surface;
      w["phonemes"] = pw->phonemes;
      w["source"] = std::string(to_string(pw->source));
      w["lang"] = pw->language_used;
    } else {
      const auto& p = std::get<Passthrough>(item);
      w["surface"] = p.surface;
      w["phonemes"] = p.surface;
      w["source"] = "punctuation";
      w["lang"] = std::string(language);
    }
    words.push_back(std::move(w));
  }
  nlohmann::ordered_json out;
  out["text"] = sentence.text;
  out["words"] = std::move(words);
  return out;
}

inline bool has_unresolved(const std::vector<PhonemizedSentence>& sentences) {
  for (const auto& s : sentences)
    for (const auto& item : s.items)
      if (const auto* w = std::get_if<PhonemizedWord>(&item); w && w->source == Source::kUnresolved)
        return true;
  return false;
}

struct PairStats {
  std::size_t written = 0;
  std::size_t skipped = 0;  // lines containing unresolved words
};

// One JSONL record `{"lang", "text", "phonemes"}` per input line, in input
// order. Blank lines count as skipped.
inline PairStats gen_pairs(std::istream& corpus, const Pipeline& pipeline, std::ostream& out) {
  PairStats stats;
  std::string line;
  std::size_t offset = 0;
  while (std::getline(corpus, line)) {
    text::validate(line, offset);
    offset += line.size() + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto sentences = pipeline.phonemize_text(line);
    if (sentences.empty() || has_unresolved(sentences)) {
      ++stats.skipped;
      continue;
    }
    nlohmann::ordered_json rec;
    rec["lang"] = pipeline.config().primary_language;
    rec["text"] = line;
    rec["phonemes"] = render_plain(sentences);
    out << rec.dump() << '\n';
    if (!out) throw Error("write failed after " + std::to_string(stats.written) + " pairs");
    ++stats.written;
  }
  return stats;
}

}  // namespace olaph
