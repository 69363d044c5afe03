#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "dicoder/error.hpp"

namespace dicoder::csv {

using Row = std::vector<std::string>;

// RFC 4180 reader with a configurable delimiter: fields may be quoted with
// '"', quotes inside quoted fields are doubled, quoted fields may span lines.
// Both LF and CRLF line ends are accepted.
class Reader {
 public:
  Reader(std::istream& in, char delimiter) : in_(in), delim_(delimiter) {}

  /// Next record, or nothing at end of input. Sets `line()` to the physical
  /// line the record started on (1-based).
  std::optional<Row> next() {
    Row row;
    std::string field;
    bool quoted = false;
    bool any = false;
    int c;
    start_line_ = line_ + 1;
    while ((c = in_.get()) != std::char_traits<char>::eof()) {
      any = true;
      const char ch = static_cast<char>(c);
      if (quoted) {
        if (ch == '"') {
          if (in_.peek() == '"') {
            in_.get();
            field.push_back('"');
          } else {
            quoted = false;
          }
        } else {
          if (ch == '\n') ++line_;
          field.push_back(ch);
        }
        continue;
      }
      if (ch == '"') {
        quoted = true;
      } else if (ch == delim_) {
        row.push_back(std::move(field));
        field.clear();
      } else if (ch == '\n') {
        ++line_;
        if (!field.empty() && field.back() == '\r') field.pop_back();
        row.push_back(std::move(field));
        return row;
      } else {
        field.push_back(ch);
      }
    }
    if (quoted) throw Error("unterminated quoted field starting on line " + std::to_string(start_line_));
    if (!any) return std::nullopt;
    ++line_;
    if (!field.empty() && field.back() == '\r') field.pop_back();
    row.push_back(std::move(field));
    return row;
  }

  std::size_t line() const noexcept { return start_line_; }

 private:
  std::istream& in_;
  char delim_;
  std::size_t line_ = 0;
  std::size_t start_line_ = 0;
};

inline bool is_blank(const Row& row) { return row.size() == 1 && row[0].empty(); }

inline void write_field(std::ostream& out, std::string_view field, char delimiter) {
  const bool needs_quotes = field.find_first_of(std::string{delimiter, '"', '\n', '\r'}) != std::string_view::npos;
  if (!needs_quotes) {
    out << field;
    return;
  }
  out << '"';
  for (char c : field) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

inline void write_row(std::ostream& out, const Row& row, char delimiter) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out << delimiter;
    write_field(out, row[i], delimiter);
  }
  out << '\n';
}

/// Resolves a column selector against a header: a header name, or a
/// 0-based index when the selector is all digits and no header matches it.
inline std::optional<std::size_t> find_column(const Row& header, std::string_view selector) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == selector) return i;
  }
  if (selector.empty() || selector.find_first_not_of("0123456789") != std::string_view::npos) return std::nullopt;
  const std::size_t idx = std::stoul(std::string(selector));
  if (idx < header.size()) return idx;
  return std::nullopt;
}

}  // namespace dicoder::csv
