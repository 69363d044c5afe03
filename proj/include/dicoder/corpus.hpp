#pragma once

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "dicoder/annotator.hpp"
#include "dicoder/csv.hpp"
#include "dicoder/error.hpp"
#include "dicoder/matcher.hpp"

namespace dicoder {

/// One data row of an AlignedCauses file.
struct CorpusRecord {
  std::string doc_id;
  std::string line_id;
  std::string raw_text;
  std::optional<std::string> standard_text;
  std::optional<std::string> code;

  friend bool operator==(const CorpusRecord&, const CorpusRecord&) = default;
};

/// CSV dialect and column names of a corpus file. Column selectors are
/// header names or 0-based indices.
struct CorpusFormat {
  char delimiter = ';';
  std::string col_doc = "DocID";
  std::string col_line = "LineID";
  std::string col_raw = "RawText";
  std::string col_standard = "StandardText";
  std::string col_code = "ICD10";
};

/// Which content columns a caller needs. DocID and LineID are always required.
enum class Need : unsigned { None = 0, Raw = 1, Standard = 2, Code = 4, All = 7 };

constexpr Need operator|(Need a, Need b) {
  return static_cast<Need>(static_cast<unsigned>(a) | static_cast<unsigned>(b));
}
constexpr bool has(Need set, Need flag) {
  return (static_cast<unsigned>(set) & static_cast<unsigned>(flag)) != 0;
}

struct CorpusParseResult {
  std::vector<CorpusRecord> records;
  std::size_t malformed_rows = 0;
};

namespace detail {

inline void strip_bom(csv::Row& header) {
  if (!header.empty() && header[0].rfind("\xEF\xBB\xBF", 0) == 0) header[0].erase(0, 3);
}

inline std::optional<std::size_t> column(const csv::Row& header, const std::string& selector, bool required,
                                         std::string_view role) {
  auto idx = csv::find_column(header, selector);
  if (!idx && required) {
    throw Error("missing column '" + selector + "' (" + std::string(role) + ")");
  }
  return idx;
}

inline std::optional<std::string> optional_field(const csv::Row& row, std::optional<std::size_t> idx) {
  if (!idx || row[*idx].empty()) return std::nullopt;
  return row[*idx];
}

}  // namespace detail

/// Reads an AlignedCauses-style CSV (first row is the header). Rows with an
/// empty code are kept; rows whose field count differs from the header, or
/// whose DocID/LineID is empty, are counted as malformed and skipped.
inline CorpusParseResult parse_aligned_causes(std::istream& in, const CorpusFormat& fmt, Need need = Need::All) {
  csv::Reader reader(in, fmt.delimiter);
  CorpusParseResult result;
  auto header = reader.next();
  if (!header) return result;
  detail::strip_bom(*header);

  const auto doc = detail::column(*header, fmt.col_doc, true, "document id");
  const auto line = detail::column(*header, fmt.col_line, true, "line id");
  const auto raw = detail::column(*header, fmt.col_raw, has(need, Need::Raw), "raw text");
  const auto standard = detail::column(*header, fmt.col_standard, has(need, Need::Standard), "standard text");
  const auto code = detail::column(*header, fmt.col_code, has(need, Need::Code), "code");

  while (auto row = reader.next()) {
    if (csv::is_blank(*row)) continue;
    if (row->size() != header->size() || (*row)[*doc].empty() || (*row)[*line].empty()) {
      ++result.malformed_rows;
      continue;
    }
    CorpusRecord rec;
    rec.doc_id = (*row)[*doc];
    rec.line_id = (*row)[*line];
    if (raw) rec.raw_text = (*row)[*raw];
    rec.standard_text = detail::optional_field(*row, standard);
    rec.code = detail::optional_field(*row, code);
    result.records.push_back(std::move(rec));
  }
  return result;
}

inline CorpusParseResult parse_aligned_causes(const std::filesystem::path& path, const CorpusFormat& fmt,
                                              Need need = Need::All) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read corpus file: " + path.string());
  try {
    return parse_aligned_causes(in, fmt, need);
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

/// The raw lines of a corpus, one per (doc, line) in first-seen order;
/// raw text repeated for multi-code lines is collapsed.
inline std::vector<CorpusRecord> distinct_lines(const std::vector<CorpusRecord>& records) {
  std::vector<CorpusRecord> out;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& r : records) {
    if (seen.emplace(r.doc_id, r.line_id).second) out.push_back(r);
  }
  return out;
}

/// Orders identifiers numerically when both are all digits, else bytewise.
inline bool id_less(std::string_view a, std::string_view b) {
  auto numeric = [](std::string_view s) {
    return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
  };
  if (numeric(a) && numeric(b)) {
    const auto ta = a.substr(std::min(a.find_first_not_of('0'), a.size()));
    const auto tb = b.substr(std::min(b.find_first_not_of('0'), b.size()));
    if (ta.size() != tb.size()) return ta.size() < tb.size();
    if (ta != tb) return ta < tb;
  }
  return a < b;
}

/// One output row: an annotation located in the corpus.
struct AnnotationRow {
  std::string doc_id;
  std::string line_id;
  std::size_t start_char = 0;
  std::size_t end_char = 0;
  std::string matched_text;
  std::string term_label;
  std::string code;
  std::vector<MatchTechnique> techniques;

  static AnnotationRow from(const CorpusRecord& line, const Annotation& a) {
    return {line.doc_id, line.line_id, a.start_char, a.end_char,
            line.raw_text.substr(a.start_char, a.end_char - a.start_char),
            a.term_label, a.code, a.techniques};
  }

  friend bool operator==(const AnnotationRow&, const AnnotationRow&) = default;
};

inline bool row_less(const AnnotationRow& a, const AnnotationRow& b) {
  if (a.doc_id != b.doc_id) return id_less(a.doc_id, b.doc_id);
  if (a.line_id != b.line_id) return id_less(a.line_id, b.line_id);
  return std::tie(a.start_char, a.end_char, a.code) < std::tie(b.start_char, b.end_char, b.code);
}

inline const csv::Row kAnnotationHeader = {"doc_id", "line_id", "start_char", "end_char", "matched_text",
                                           "term_label", "code", "techniques"};

/// Writes rows sorted by (doc, line, start) under the annotation header.
/// Returns the number of data rows.
inline std::size_t write_annotations(std::vector<AnnotationRow> rows, std::ostream& out, char delimiter = ';') {
  std::stable_sort(rows.begin(), rows.end(), row_less);
  csv::write_row(out, kAnnotationHeader, delimiter);
  for (const auto& r : rows) {
    std::string techniques;
    for (auto t : r.techniques) {
      if (!techniques.empty()) techniques.push_back(',');
      techniques += to_string(t);
    }
    csv::write_row(out,
                   {r.doc_id, r.line_id, std::to_string(r.start_char), std::to_string(r.end_char), r.matched_text,
                    r.term_label, r.code, techniques},
                   delimiter);
  }
  return rows.size();
}

inline std::size_t write_annotations(std::vector<AnnotationRow> rows, const std::filesystem::path& path,
                                     char delimiter = ';') {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write annotation file: " + path.string());
  const auto n = write_annotations(std::move(rows), out, delimiter);
  out.flush();
  if (!out) throw Error("write failed: " + path.string());
  return n;
}

inline std::vector<AnnotationRow> read_annotations(std::istream& in, char delimiter = ';') {
  csv::Reader reader(in, delimiter);
  auto header = reader.next();
  if (!header) return {};
  detail::strip_bom(*header);
  std::vector<std::size_t> idx;
  for (const auto& name : kAnnotationHeader) {
    auto i = csv::find_column(*header, name);
    if (!i) throw Error("annotation file lacks column '" + name + "'");
    idx.push_back(*i);
  }
  std::vector<AnnotationRow> rows;
  while (auto row = reader.next()) {
    if (csv::is_blank(*row)) continue;
    if (row->size() != header->size()) throw Error("annotation file: bad field count on line " + std::to_string(reader.line()));
    const auto& f = *row;
    AnnotationRow r;
    r.doc_id = f[idx[0]];
    r.line_id = f[idx[1]];
    try {
      r.start_char = std::stoul(f[idx[2]]);
      r.end_char = std::stoul(f[idx[3]]);
    } catch (const std::exception&) {
      throw Error("annotation file: bad offset on line " + std::to_string(reader.line()));
    }
    r.matched_text = f[idx[4]];
    r.term_label = f[idx[5]];
    r.code = f[idx[6]];
    std::string_view techs = f[idx[7]];
    while (!techs.empty()) {
      const auto comma = techs.find(',');
      r.techniques.push_back(technique_from_string(techs.substr(0, comma)));
      techs = comma == std::string_view::npos ? std::string_view{} : techs.substr(comma + 1);
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

inline std::vector<AnnotationRow> read_annotations(const std::filesystem::path& path, char delimiter = ';') {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read annotation file: " + path.string());
  try {
    return read_annotations(in, delimiter);
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

}  // namespace dicoder
