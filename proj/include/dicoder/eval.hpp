#pragma once

#include <cstddef>
#include <iomanip>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "dicoder/corpus.hpp"

namespace dicoder {

/// One code assigned to one certificate line.
struct CodedLine {
  std::string doc_id;
  std::string line_id;
  std::string code;

  friend auto operator<=>(const CodedLine&, const CodedLine&) = default;
};

struct EvalReport {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
};

namespace detail {

// tp/(tp+other); 1 when both sides are empty, 0 when only one is.
inline double ratio(std::size_t tp, std::size_t other, bool both_empty) {
  if (tp + other == 0) return both_empty ? 1.0 : 0.0;
  return static_cast<double>(tp) / static_cast<double>(tp + other);
}

}  // namespace detail

/// Builds a report from raw counts.
inline EvalReport report_from_counts(std::size_t tp, std::size_t fp, std::size_t fn) {
  EvalReport r{tp, fp, fn};
  const bool both_empty = tp + fp == 0 && tp + fn == 0;
  r.precision = detail::ratio(tp, fp, both_empty);
  r.recall = detail::ratio(tp, fn, both_empty);
  const double sum = r.precision + r.recall;
  r.f_measure = sum > 0.0 ? 2.0 * r.precision * r.recall / sum : 0.0;
  return r;
}

/// Micro-averaged set comparison of (doc, line, code) tuples; duplicates
/// within a side count once.
inline EvalReport evaluate(const std::vector<CodedLine>& gold, const std::vector<CodedLine>& predicted) {
  const std::set<CodedLine> g(gold.begin(), gold.end());
  const std::set<CodedLine> p(predicted.begin(), predicted.end());
  std::size_t tp = 0;
  for (const auto& t : p) tp += g.count(t);
  return report_from_counts(tp, p.size() - tp, g.size() - tp);
}

/// Gold tuples of a corpus; rows without a code carry no assignment.
inline std::vector<CodedLine> coded_lines(const std::vector<CorpusRecord>& records) {
  std::vector<CodedLine> out;
  for (const auto& r : records) {
    if (r.code) out.push_back({r.doc_id, r.line_id, *r.code});
  }
  return out;
}

inline std::vector<CodedLine> coded_lines(const std::vector<AnnotationRow>& rows) {
  std::vector<CodedLine> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back({r.doc_id, r.line_id, r.code});
  return out;
}

inline nlohmann::json to_json(const EvalReport& r) {
  return {{"tp", r.tp},
          {"fp", r.fp},
          {"fn", r.fn},
          {"precision", r.precision},
          {"recall", r.recall},
          {"f_measure", r.f_measure}};
}

/// "precision 0.667 recall 0.500 f 0.571"
inline std::string summary_line(const EvalReport& r) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << "precision " << r.precision << " recall " << r.recall << " f "
     << r.f_measure;
  return os.str();
}

}  // namespace dicoder
