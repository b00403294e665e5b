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

// Word occurrence statistics from a reference corpus; backs the subword
// probability term of the compound-splitting score.

#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "olaph/error.hpp"
#include "olaph/text.hpp"

namespace olaph {

struct CorpusStats {
  std::string language;
  std::map<std::string, std::uint64_t> counts;  // lowercased word -> count
  std::uint64_t total = 0;
  // Unset means the default 0.5 / total.
  std::optional<double> configured_floor;

  double floor_epsilon() const {
    if (configured_floor) return *configured_floor;
    if (total == 0) throw Error("corpus statistics are empty");
    return 0.5 / static_cast<double>(total);
  }

  std::uint64_t count(std::string_view word) const {
    auto it = counts.find(text::fold(word));
    return it == counts.end() ? 0 : it->second;
  }

  friend bool operator==(const CorpusStats&, const CorpusStats&) = default;
};

namespace detail {

inline void count_line(CorpusStats& stats, std::string_view line) {
  std::string word;
  auto flush = [&] {
    if (!word.empty()) {
      ++stats.counts[word];
      ++stats.total;
      word.clear();
    }
  };
  for (std::size_t pos = 0; pos < line.size();) {
    const char32_t c = text::decode(line, pos);
    if (text::is_letter(c)) {
      text::append(word, text::to_lower(c));
    } else {
      flush();
    }
  }
  flush();
}

}  // namespace detail

// Counts maximal letter runs, lowercased. Throws EncodingError carrying the
// byte offset into the stream of the first invalid sequence.
inline CorpusStats build_stats(std::istream& corpus, std::string language) {
  CorpusStats stats;
  stats.language = std::move(language);
  std::string line;
  std::size_t offset = 0;
  while (std::getline(corpus, line)) {
    text::validate(line, offset);
    offset += line.size() + 1;
    detail::count_line(stats, line);
  }
  return stats;
}

// count(subword) / total, or the floor for unseen words.
inline double probability(const CorpusStats& stats, std::string_view subword) {
  if (stats.total == 0) throw Error("probability requested from empty corpus statistics");
  const std::uint64_t c = stats.count(subword);
  if (c == 0) return stats.floor_epsilon();
  return static_cast<double>(c) / static_cast<double>(stats.total);
}

// Header `#total \t N`, optional `#language` and `#floor` lines, then
// `word \t count` rows in key order.
inline void save_stats(const CorpusStats& stats, std::ostream& out) {
  out << "#total\t" << stats.total << '\n';
  if (!stats.language.empty()) out << "#language\t" << stats.language << '\n';
  if (stats.configured_floor)
    out << "#floor\t" << std::setprecision(17) << *stats.configured_floor << '\n';
  for (const auto& [word, count] : stats.counts) out << word << '\t' << count << '\n';
}

inline void save_stats(const CorpusStats& stats, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ResourceError("cannot write " + path);
  save_stats(stats, out);
  if (!out) throw ResourceError("write failed: " + path);
}

inline CorpusStats load_stats(std::istream& in, const std::string& source = "<stats>") {
  CorpusStats stats;
  std::optional<std::uint64_t> header_total;
  std::uint64_t sum = 0;
  std::string line;
  std::size_t line_no = 0;
  auto parse_uint = [&](std::string_view s, std::string_view what) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
      throw FormatError(source, line_no, std::string(what) + " must be a non-negative integer");
    return v;
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
    if (text::trim(view).empty()) continue;
    const auto cols = text::split(view, '\t');
    if (cols.size() != 2) throw FormatError(source, line_no, "expected 2 tab-separated columns");
    if (cols[0] == "#total") {
      header_total = parse_uint(cols[1], "total");
      continue;
    }
    if (cols[0] == "#language") {
      stats.language = std::string(cols[1]);
      continue;
    }
    if (cols[0] == "#floor") {
      double v = 0;
      const auto [ptr, ec] = std::from_chars(cols[1].data(), cols[1].data() + cols[1].size(), v);
      if (ec != std::errc() || !(v > 0)) throw FormatError(source, line_no, "floor must be positive");
      stats.configured_floor = v;
      continue;
    }
    if (cols[0].front() == '#') continue;
    if (!cols[1].empty() && cols[1].front() == '-')
      throw FormatError(source, line_no, "negative count");
    const std::uint64_t c = parse_uint(cols[1], "count");
    if (c == 0) throw FormatError(source, line_no, "count must be positive");
    try {
      text::validate(cols[0]);
    } catch (const EncodingError& e) {
      throw FormatError(source, line_no, e.what());
    }
    if (!stats.counts.emplace(std::string(cols[0]), c).second)
      throw FormatError(source, line_no, "duplicate word '" + std::string(cols[0]) + "'");
    sum += c;
  }
  if (!header_total) throw FormatError(source, 0, "missing #total header");
  if (*header_total != sum)
    throw FormatError(source, 0, "#total " + std::to_string(*header_total) +
                                     " does not match sum of counts " + std::to_string(sum));
  stats.total = sum;
  return stats;
}

inline CorpusStats load_stats(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ResourceError("cannot open " + path);
  return load_stats(in, path);
}

}  // namespace olaph
