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

// Command-line front end. Exit codes: 0 success, 1 usage error, 2 data error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "olaph/olaph.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kUsage = 1;
constexpr int kData = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string data_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("OLAPH_DATA"); env && *env) return env;
  return OLAPH_DEFAULT_DATA_DIR;
}

void require_primary(const std::string& lang) {
  if (!olaph::is_primary_language(lang)) throw UsageError("unsupported language '" + lang + "'");
}

void require_known(const std::string& lang) {
  for (auto known : olaph::kLanguageOrder)
    if (known == lang) return;
  throw UsageError("unsupported language '" + lang + "'");
}

olaph::Resources load(const std::string& dir, const std::string& primary) {
  auto langs = olaph::available_languages(dir);
  if (std::find(langs.begin(), langs.end(), primary) == langs.end())
    throw olaph::ResourceError("no lexicon for '" + primary + "' in " + dir);
  return olaph::load_resources(dir, langs);
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw olaph::ResourceError("cannot open " + path);
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw olaph::ResourceError("cannot write " + path);
  return out;
}

std::vector<std::string> read_lines(const std::string& path) {
  auto in = open_in(path);
  std::vector<std::string> lines;
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    olaph::text::validate(line, offset);
    offset += line.size() + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"olaph: multilingual grapheme-to-phoneme conversion"};
  app.require_subcommand(1);

  std::string lang;
  std::string lexicon_dir;
  olaph::ScoreParams params;

  auto* phon = app.add_subcommand("phonemize", "Convert text to IPA");
  bool strip = false;
  bool use_stdin = false;
  bool detect = false;
  std::string format = "text";
  std::string input;
  phon->add_option("--lang", lang, "Primary language (en, de)")->required();
  phon->add_option("--lexicon-dir", lexicon_dir, "Resource directory");
  phon->add_option("--alpha", params.alpha, "Subword length exponent");
  phon->add_option("--beta", params.beta, "Subword count penalty");
  phon->add_flag("--strip-verbose", strip, "Drop stress, length and syllable marks");
  phon->add_flag("--detect", detect, "Pick the primary language from the text");
  phon->add_option("--format", format)->check(CLI::IsMember({"text", "jsonl"}));
  phon->add_flag("--stdin", use_stdin, "Read one text per line from stdin");
  phon->add_option("text", input, "Input text");

  auto* split = app.add_subcommand("split", "Best compound split of a word");
  std::string word;
  split->add_option("--lang", lang)->required();
  split->add_option("--lexicon-dir", lexicon_dir);
  split->add_option("--alpha", params.alpha);
  split->add_option("--beta", params.beta);
  split->add_option("word", word)->required();

  auto* norm = app.add_subcommand("normalize", "Spell out numbers and symbols");
  norm->add_option("--lang", lang)->required();
  norm->add_option("--lexicon-dir", lexicon_dir);
  norm->add_option("text", input)->required();

  auto* stats = app.add_subcommand("build-stats", "Count word frequencies in a corpus");
  std::string corpus;
  std::string output;
  stats->add_option("--lang", lang)->required();
  stats->add_option("corpus", corpus)->required();
  stats->add_option("-o,--output", output)->required();

  auto* pairs = app.add_subcommand("gen-pairs", "Write text/IPA pairs as JSONL");
  pairs->add_option("--lang", lang)->required();
  pairs->add_option("--lexicon-dir", lexicon_dir);
  pairs->add_option("corpus", corpus)->required();
  pairs->add_option("-o,--output", output)->required();

  auto* compare = app.add_subcommand("compare", "Align outputs of several systems");
  std::string tokens_file;
  std::string report;
  std::vector<std::string> system_files;
  compare->add_option("--tokens", tokens_file, "Reference words, one per line")->required();
  compare->add_option("systems", system_files, "System outputs, one per line")->required();
  compare->add_option("--report", report, "Review TSV")->required();

  auto* train = app.add_subcommand("train-profiles", "Train language identification profiles");
  std::vector<std::string> train_specs;
  std::string out_dir;
  train->add_option("corpora", train_specs, "LANG=FILE pairs")->required();
  train->add_option("-o,--output-dir", out_dir)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*phon) {
      require_primary(lang);
      if (input.empty() == !use_stdin) throw UsageError("give either TEXT or --stdin");
      const auto res = load(data_dir(lexicon_dir), lang);
      olaph::PipelineConfig cfg;
      cfg.primary_language = lang;
      cfg.score_params = params;
      cfg.strip_verbose = strip;
      cfg.auto_detect_text_language = detect;
      const olaph::Pipeline pipeline(res, cfg);
      auto run = [&](const std::string& text) {
        const auto sentences = pipeline.phonemize_text(text);
        if (format == "text") {
          std::cout << olaph::render_plain(sentences) << '\n';
        } else {
          for (const auto& s : sentences) std::cout << olaph::to_json(s, lang).dump() << '\n';
        }
      };
      if (use_stdin) {
        std::string line;
        std::size_t offset = 0;
        while (std::getline(std::cin, line)) {
          olaph::text::validate(line, offset);
          offset += line.size() + 1;
          run(line);
        }
      } else {
        olaph::text::validate(input);
        run(input);
      }
    } else if (*split) {
      require_primary(lang);
      const auto res = load(data_dir(lexicon_dir), lang);
      olaph::PipelineConfig cfg;
      cfg.primary_language = lang;
      cfg.score_params = params;
      const olaph::Pipeline pipeline(res, cfg);
      std::vector<const olaph::Lexicon*> lexica;
      for (const auto& l : pipeline.config().allowed_languages) lexica.push_back(res.lexicon(l));
      const auto seg = olaph::best_split(word, lexica, res.stats.at(lang), params, {},
                                         cfg.split_limits);
      if (!seg) {
        std::cerr << "olaph: no segmentation of '" << word << "'\n";
        return kData;
      }
      std::cout << seg->to_string() << '\t' << std::setprecision(17) << seg->score << '\n';
    } else if (*norm) {
      require_primary(lang);
      olaph::text::validate(input);
      olaph::AuxLexica aux;
      const fs::path dir = data_dir(lexicon_dir);
      const auto sym = dir / ("sym." + lang + ".tsv");
      if (fs::exists(sym)) {
        auto in = open_in(sym.string());
        olaph::parse_symbols(in, aux, lang, sym.string());
      }
      std::cout << olaph::normalize_text(input, lang, aux) << '\n';
    } else if (*stats) {
      require_known(lang);
      auto in = open_in(corpus);
      olaph::save_stats(olaph::build_stats(in, lang), output);
    } else if (*pairs) {
      require_primary(lang);
      const auto res = load(data_dir(lexicon_dir), lang);
      olaph::PipelineConfig cfg;
      cfg.primary_language = lang;
      const olaph::Pipeline pipeline(res, cfg);
      auto in = open_in(corpus);
      auto out = open_out(output);
      const auto counts = olaph::gen_pairs(in, pipeline, out);
      std::cerr << "written " << counts.written << ", skipped " << counts.skipped << '\n';
    } else if (*compare) {
      if (system_files.size() < 2) throw UsageError("compare needs at least two system files");
      std::map<std::string, std::vector<std::string>> systems;
      for (const auto& f : system_files) {
        const std::string name = fs::path(f).stem().string();
        if (!systems.emplace(name, read_lines(f)).second)
          throw UsageError("duplicate system name '" + name + "'");
      }
      const auto alignment = olaph::align_outputs(read_lines(tokens_file), systems);
      auto out = open_out(report);
      olaph::write_alignment_report(alignment, out);
      olaph::write_alignment_summary(alignment.summary, std::cout);
    } else if (*train) {
      std::map<std::string, std::vector<std::string>> corpora;
      for (const auto& spec : train_specs) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos) throw UsageError("expected LANG=FILE, got '" + spec + "'");
        const std::string l = spec.substr(0, eq);
        require_known(l);
        corpora[l] = read_lines(spec.substr(eq + 1));
      }
      for (const auto& [l, profile] : olaph::train_language_profiles(corpora)) {
        auto out = open_out((fs::path(out_dir) / ("profile." + l + ".tsv")).string());
        olaph::save_profile(profile, out);
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "olaph: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "olaph: " << e.what() << '\n';
    return kData;
  }
  return 0;
}
