#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "dicoder/corpus.hpp"
#include "dicoder/csv.hpp"
#include "dicoder/error.hpp"
#include "dicoder/normalize.hpp"
#include "dicoder/trie.hpp"

namespace dicoder {

/// Occurrence counts of codes per normalized term key (space-joined tokens),
/// plus the first surface label seen for each key.
class CodeFrequencyTable {
 public:
  void add(const std::string& key, const std::string& code, std::string_view label, std::size_t count = 1) {
    if (count == 0) return;
    counts_[key][code] += count;
    labels_.try_emplace(key, label);
  }

  bool contains(std::string_view key) const { return counts_.find(key) != counts_.end(); }
  std::size_t size() const noexcept { return counts_.size(); }
  bool empty() const noexcept { return counts_.empty(); }

  const std::map<std::string, std::size_t>& codes(std::string_view key) const {
    auto it = counts_.find(key);
    if (it == counts_.end()) throw Error("unknown term key: '" + std::string(key) + "'");
    return it->second;
  }

  const std::string& label(std::string_view key) const {
    auto it = labels_.find(key);
    if (it == labels_.end()) throw Error("unknown term key: '" + std::string(key) + "'");
    return it->second;
  }

  const std::map<std::string, std::map<std::string, std::size_t>, std::less<>>& entries() const noexcept {
    return counts_;
  }

 private:
  std::map<std::string, std::map<std::string, std::size_t>, std::less<>> counts_;
  std::map<std::string, std::string, std::less<>> labels_;
};

/// Most frequent code of `key`; ties go to the smallest code.
inline const std::string& resolve_code(const CodeFrequencyTable& table, std::string_view key) {
  const auto& codes = table.codes(key);
  auto best = codes.begin();
  for (auto it = codes.begin(); it != codes.end(); ++it) {
    if (it->second > best->second) best = it;  // map order makes the first maximum the smallest code
  }
  return best->first;
}

struct Harvest {
  CodeFrequencyTable table;
  std::size_t skipped_rows = 0;  // empty standard text, empty code, or stopwords only
};

/// One count per (normalized standard text, code) row.
inline Harvest build_dictionary_from_corpus(const std::vector<CorpusRecord>& records,
                                            const NormalizationConfig& cfg) {
  Harvest h;
  for (const auto& r : records) {
    if (!r.standard_text || !r.code) {
      ++h.skipped_rows;
      continue;
    }
    const auto key = join_tokens(normalized_tokens(*r.standard_text, cfg));
    if (key.empty()) {
      ++h.skipped_rows;
      continue;
    }
    h.table.add(key, *r.code, *r.standard_text);
  }
  return h;
}

/// Columns of an external label/code term list.
struct TermListFormat {
  char delimiter = ';';
  std::string col_label = "label";
  std::string col_code = "code";
};

/// Reads a label/code CSV (header row first) into a frequency table.
inline Harvest parse_term_list(std::istream& in, const TermListFormat& fmt, const NormalizationConfig& cfg) {
  csv::Reader reader(in, fmt.delimiter);
  Harvest h;
  auto header = reader.next();
  if (!header) return h;
  detail::strip_bom(*header);
  const auto label = csv::find_column(*header, fmt.col_label);
  if (!label) throw Error("missing column '" + fmt.col_label + "' (label)");
  const auto code = csv::find_column(*header, fmt.col_code);
  if (!code) throw Error("missing column '" + fmt.col_code + "' (code)");
  while (auto row = reader.next()) {
    if (csv::is_blank(*row)) continue;
    if (row->size() != header->size() || (*row)[*code].empty()) {
      ++h.skipped_rows;
      continue;
    }
    const auto key = join_tokens(normalized_tokens((*row)[*label], cfg));
    if (key.empty()) {
      ++h.skipped_rows;
      continue;
    }
    h.table.add(key, (*row)[*code], (*row)[*label]);
  }
  return h;
}

inline Harvest parse_term_list(const std::filesystem::path& path, const TermListFormat& fmt,
                               const NormalizationConfig& cfg) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read term list: " + path.string());
  try {
    return parse_term_list(in, fmt, cfg);
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

enum class DictionaryMode { CorpusOnly, CorpusPlusExternal };

inline DictionaryMode parse_mode(std::string_view s) {
  if (s == "corpus_only") return DictionaryMode::CorpusOnly;
  if (s == "corpus_plus_external") return DictionaryMode::CorpusPlusExternal;
  throw Error("unknown dictionary mode: '" + std::string(s) + "'");
}

struct DictionarySpec {
  std::vector<std::filesystem::path> corpus_sources;
  std::vector<std::filesystem::path> external_term_lists;  // read only in CorpusPlusExternal mode
  DictionaryMode mode = DictionaryMode::CorpusOnly;
  CorpusFormat corpus_format{};
  TermListFormat term_list_format{};
};

struct BuildReport {
  std::size_t terms = 0;
  std::size_t codes = 0;
  std::size_t conflicts = 0;  // external keys whose code disagrees with the corpus code
  std::size_t ambiguous = 0;  // keys seen with more than one code in one source kind
  std::size_t skipped_rows = 0;
  std::size_t malformed_rows = 0;

  friend bool operator==(const BuildReport&, const BuildReport&) = default;
};

inline nlohmann::json to_json(const BuildReport& r) {
  return {{"terms", r.terms},     {"codes", r.codes},
          {"conflicts", r.conflicts}, {"ambiguous", r.ambiguous},
          {"skipped_rows", r.skipped_rows}, {"malformed_rows", r.malformed_rows}};
}

/// "terms=3 codes=3 conflicts=0 ambiguous=0 skipped=0 malformed=0"
inline std::string summary_line(const BuildReport& r) {
  return "terms=" + std::to_string(r.terms) + " codes=" + std::to_string(r.codes) +
         " conflicts=" + std::to_string(r.conflicts) + " ambiguous=" + std::to_string(r.ambiguous) +
         " skipped=" + std::to_string(r.skipped_rows) + " malformed=" + std::to_string(r.malformed_rows);
}

struct AssembledDictionary {
  DictionaryTrie trie;
  BuildReport report;
};

/// Inserts every corpus key with its resolved code, then external keys not
/// already present. The returned trie is frozen.
inline AssembledDictionary assemble_dictionary(const CodeFrequencyTable& corpus,
                                               const CodeFrequencyTable& external) {
  AssembledDictionary out;
  std::set<std::string> codes;

  auto insert_all = [&](const CodeFrequencyTable& table, const CodeFrequencyTable* shadow) {
    for (const auto& [key, counts] : table.entries()) {
      if (counts.size() > 1) ++out.report.ambiguous;
      const std::string& code = resolve_code(table, key);
      if (shadow && shadow->contains(key)) {
        if (resolve_code(*shadow, key) != code) ++out.report.conflicts;
        continue;
      }
      Term term{{}, table.label(key), code};
      detail::for_each_space_token(key, [&](std::string_view t, auto, auto) { term.tokens.emplace_back(t); });
      out.trie.insert_term(std::move(term));
      codes.insert(code);
    }
  };

  insert_all(corpus, nullptr);
  insert_all(external, &corpus);
  out.trie.freeze();
  out.report.terms = out.trie.term_count();
  out.report.codes = codes.size();
  return out;
}

/// Reads every source named by `spec` and assembles the dictionary. Throws
/// on unreadable or malformed sources, or when there is nothing to read.
inline AssembledDictionary assemble_dictionary(const DictionarySpec& spec, const NormalizationConfig& cfg) {
  const bool use_external = spec.mode == DictionaryMode::CorpusPlusExternal;
  if (spec.corpus_sources.empty() && (!use_external || spec.external_term_lists.empty())) {
    throw Error("no sources");
  }

  CodeFrequencyTable corpus, external;
  std::size_t skipped = 0, malformed = 0;
  for (const auto& path : spec.corpus_sources) {
    auto parsed = parse_aligned_causes(path, spec.corpus_format, Need::Standard | Need::Code);
    malformed += parsed.malformed_rows;
    auto h = build_dictionary_from_corpus(parsed.records, cfg);
    skipped += h.skipped_rows;
    for (const auto& [key, counts] : h.table.entries()) {
      for (const auto& [code, n] : counts) corpus.add(key, code, h.table.label(key), n);
    }
  }
  if (use_external) {
    for (const auto& path : spec.external_term_lists) {
      auto h = parse_term_list(path, spec.term_list_format, cfg);
      skipped += h.skipped_rows;
      for (const auto& [key, counts] : h.table.entries()) {
        for (const auto& [code, n] : counts) external.add(key, code, h.table.label(key), n);
      }
    }
  }

  auto out = assemble_dictionary(corpus, external);
  out.report.skipped_rows = skipped;
  out.report.malformed_rows = malformed;
  return out;
}

}  // namespace dicoder
