#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "dicoder/annotator.hpp"
#include "dicoder/coder.hpp"
#include "dicoder/corpus.hpp"
#include "dicoder/eval.hpp"
#include "dicoder/matcher.hpp"
#include "dicoder/normalize.hpp"

namespace dicoder::cli {

/// Settings shared by the build, annotate and eval commands. Every knob
/// carries its default; paths are empty when not given.
struct CliConfig {
  // Dictionary sources.
  std::vector<std::filesystem::path> corpus;
  std::vector<std::filesystem::path> external;
  DictionaryMode mode = DictionaryMode::CorpusOnly;

  // Normalization and matching.
  std::optional<std::filesystem::path> stopwords;
  std::optional<std::filesystem::path> abbreviations;
  std::size_t max_dist = 1;
  std::size_t fuzzy_min_len = 5;

  // CSV dialect.
  CorpusFormat corpus_format{};
  TermListFormat term_list_format{};

  // annotate
  std::filesystem::path input;
  std::size_t workers = 0;  // 0: one per hardware thread

  // eval
  std::filesystem::path gold;
  std::filesystem::path predicted;

  std::optional<std::filesystem::path> output;
};

inline NormalizationConfig load_normalization(const CliConfig& c) {
  return c.stopwords ? NormalizationConfig::from_file(*c.stopwords) : NormalizationConfig::french_default();
}

inline AbbreviationTable load_abbreviations(const CliConfig& c, const NormalizationConfig& cfg) {
  return c.abbreviations ? AbbreviationTable::from_file(*c.abbreviations, cfg)
                         : AbbreviationTable::french_default(cfg);
}

inline DictionarySpec dictionary_spec(const CliConfig& c) {
  DictionarySpec spec;
  spec.corpus_sources = c.corpus;
  spec.external_term_lists = c.external;
  spec.mode = c.mode;
  spec.corpus_format = c.corpus_format;
  spec.term_list_format = c.term_list_format;
  spec.term_list_format.delimiter = c.corpus_format.delimiter;
  return spec;
}

/// Annotates every line on `workers` threads. Result order follows `lines`
/// whatever the worker count.
inline std::vector<std::vector<Annotation>> annotate_lines(const std::vector<CorpusRecord>& lines,
                                                           const AnnotatorContext& ctx, std::size_t workers) {
  std::vector<std::vector<Annotation>> results(lines.size());
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(lines.size(), 1));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto work = [&] {
    try {
      for (std::size_t i; (i = next.fetch_add(1)) < lines.size() && !failed;) {
        results[i] = annotate_line(lines[i].raw_text, ctx);
      }
    } catch (...) {
      if (!failed.exchange(true)) failure = std::current_exception();
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

/// Builds the dictionary and prints its report line. Writes the JSON report
/// when an output path is set.
inline int cmd_build(const CliConfig& c, std::ostream& out, std::ostream& err) {
  try {
    const auto cfg = load_normalization(c);
    const auto dict = assemble_dictionary(dictionary_spec(c), cfg);
    out << summary_line(dict.report) << '\n';
    if (dict.report.skipped_rows || dict.report.malformed_rows) {
      err << "warning: skipped " << dict.report.skipped_rows << " rows, " << dict.report.malformed_rows
          << " malformed\n";
    }
    if (c.output) {
      std::ofstream f(*c.output);
      if (!f) throw Error("cannot write report: " + c.output->string());
      f << to_json(dict.report).dump(2) << '\n';
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

/// Builds the dictionary, annotates every distinct line of the input corpus
/// and writes the annotation CSV.
inline int cmd_annotate(const CliConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.input.empty()) throw Error("annotate needs --input");
    if (!c.output) throw Error("annotate needs --output");
    const auto cfg = load_normalization(c);
    const auto abbrevs = load_abbreviations(c, cfg);
    const auto dict = assemble_dictionary(dictionary_spec(c), cfg);

    auto parsed = parse_aligned_causes(c.input, c.corpus_format, Need::Raw);
    if (parsed.malformed_rows) err << "warning: skipped " << parsed.malformed_rows << " malformed rows\n";
    const auto lines = distinct_lines(parsed.records);

    const AnnotatorContext ctx(dict.trie, cfg, abbrevs, {c.max_dist, c.fuzzy_min_len});
    const auto results = annotate_lines(lines, ctx, c.workers);

    std::vector<AnnotationRow> rows;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      for (const auto& a : results[i]) rows.push_back(AnnotationRow::from(lines[i], a));
    }
    const auto n = write_annotations(std::move(rows), *c.output, c.corpus_format.delimiter);
    out << "lines=" << lines.size() << " annotations=" << n << '\n';
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

/// Scores an annotation file against a gold corpus. P/R/F are 1 when both
/// sides are empty and 0 when exactly one side is.
inline int cmd_eval(const CliConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.gold.empty() || c.predicted.empty()) throw Error("eval needs --gold and --predicted");
    auto gold = parse_aligned_causes(c.gold, c.corpus_format, Need::Code);
    if (gold.malformed_rows) err << "warning: skipped " << gold.malformed_rows << " malformed gold rows\n";
    const auto predicted = read_annotations(c.predicted, c.corpus_format.delimiter);
    const auto report = evaluate(coded_lines(gold.records), coded_lines(predicted));
    out << summary_line(report) << '\n';
    out << "tp=" << report.tp << " fp=" << report.fp << " fn=" << report.fn << '\n';
    if (c.output) {
      std::ofstream f(*c.output);
      if (!f) throw Error("cannot write report: " + c.output->string());
      f << to_json(report).dump(2) << '\n';
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace dicoder::cli
