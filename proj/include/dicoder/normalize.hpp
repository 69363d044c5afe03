#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dicoder/detail/unicode_tables.hpp"
#include "dicoder/detail/utf8.hpp"
#include "dicoder/error.hpp"

namespace dicoder {

// Normalization
//
// Text is folded one code point at a time: case folding, canonical
// decomposition, and removal of combining marks. Letters and decimal digits
// are token characters; marks and format characters vanish; every other code
// point (punctuation, symbols, whitespace, malformed bytes) becomes exactly
// one ASCII space. Apostrophes and hyphens are punctuation.

enum class CharClass { Token, Dropped, Separator };

namespace detail {

inline constexpr char32_t kHangulFirst = 0xAC00;
inline constexpr char32_t kHangulLast = 0xD7A3;

template <std::size_t N>
constexpr bool in_ranges(const std::array<CodeRange, N>& ranges, char32_t cp) {
  auto it = std::upper_bound(ranges.begin(), ranges.end(), cp,
                             [](char32_t c, const CodeRange& r) { return c < r.first; });
  return it != ranges.begin() && cp <= std::prev(it)->last;
}

// Appends the folded form of a token code point.
inline void append_folded(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp >= 'A' && cp <= 'Z' ? cp + ('a' - 'A') : cp));
    return;
  }
  if (cp >= kHangulFirst && cp <= kHangulLast) {
    const char32_t s = cp - kHangulFirst;
    append_utf8(out, 0x1100 + s / 588);
    append_utf8(out, 0x1161 + (s % 588) / 28);
    if (s % 28 != 0) append_utf8(out, 0x11A7 + s % 28);
    return;
  }
  auto it = std::lower_bound(kFoldTable.begin(), kFoldTable.end(), cp,
                             [](const FoldEntry& e, char32_t c) { return e.from < c; });
  if (it != kFoldTable.end() && it->from == cp) {
    for (std::size_t i = 0; i < it->length; ++i) append_utf8(out, it->to[i]);
  } else {
    append_utf8(out, cp);
  }
}

}  // namespace detail

inline CharClass classify(char32_t cp) {
  if (cp < 0x80) {
    const bool alnum = (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z') ||
                       (cp >= '0' && cp <= '9');
    return alnum ? CharClass::Token : CharClass::Separator;
  }
  if (detail::in_ranges(detail::kTokenRanges, cp)) return CharClass::Token;
  if (detail::in_ranges(detail::kDroppedRanges, cp)) return CharClass::Dropped;
  return CharClass::Separator;
}

/// Lowercases, strips diacritics and replaces each punctuation character
/// by one space. Total and idempotent; input is read as UTF-8.
inline std::string normalize_text(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (std::size_t pos = 0; pos < raw.size();) {
    const auto d = detail::decode_utf8(raw, pos);
    pos += d.length;
    switch (classify(d.cp)) {
      case CharClass::Token:
        detail::append_folded(out, d.cp);
        break;
      case CharClass::Dropped:
        break;
      case CharClass::Separator:
        out.push_back(' ');
        break;
    }
  }
  return out;
}

/// Stopword set plus loaders. Tokens are letters and digits (see classify).
struct NormalizationConfig {
  std::set<std::string, std::less<>> stopwords;

  /// 25 French function words.
  static NormalizationConfig french_default();

  /// Reads a stopword file: one token per line, `#` comments and blank
  /// lines ignored. Entries are normalized on load; an entry that
  /// normalizes to several tokens contributes each of them.
  static NormalizationConfig from_stream(std::istream& in);
  static NormalizationConfig from_file(const std::filesystem::path& path);
};

inline constexpr std::array<std::string_view, 25> kDefaultStopwords = {
    "de", "du",  "des", "d",    "le",  "la",   "les",  "l",    "un",
    "une", "et", "a",   "au",   "aux", "en",   "sur",  "avec", "chez",
    "par", "pour", "ou", "dans", "ce", "sa",   "son"};

inline NormalizationConfig NormalizationConfig::french_default() {
  NormalizationConfig cfg;
  cfg.stopwords.insert(kDefaultStopwords.begin(), kDefaultStopwords.end());
  return cfg;
}

namespace detail {

// Splits normalized text on spaces, invoking fn(token, begin, end).
template <typename Fn>
void for_each_space_token(std::string_view text, Fn&& fn) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    const std::size_t begin = pos;
    while (pos < text.size() && text[pos] != ' ') ++pos;
    if (pos > begin) fn(text.substr(begin, pos - begin), begin, pos);
  }
}

}  // namespace detail

inline NormalizationConfig NormalizationConfig::from_stream(std::istream& in) {
  NormalizationConfig cfg;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    detail::for_each_space_token(normalize_text(line), [&](std::string_view tok, auto, auto) {
      cfg.stopwords.emplace(tok);
    });
  }
  return cfg;
}

inline NormalizationConfig NormalizationConfig::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read stopword file: " + path.string());
  return from_stream(in);
}

inline bool is_stopword(std::string_view token, const NormalizationConfig& cfg) {
  return !token.empty() && cfg.stopwords.find(token) != cfg.stopwords.end();
}

/// Byte range [begin, end) into the original UTF-8 string.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const Span&, const Span&) = default;
};

struct TokenizedText {
  std::string original;
  std::vector<std::string> tokens;
  std::vector<Span> offsets;  // parallel to tokens
};

/// Normalizes and splits `raw`, dropping stopwords. Offsets are byte spans of
/// the original string: each starts at the first token character and ends
/// after the last token character or trailing combining mark.
inline TokenizedText tokenize(std::string_view raw, const NormalizationConfig& cfg) {
  TokenizedText out;
  out.original.assign(raw);

  std::string current;
  Span span;
  bool in_token = false;

  auto flush = [&] {
    if (in_token && !is_stopword(current, cfg)) {
      out.tokens.push_back(current);
      out.offsets.push_back(span);
    }
    current.clear();
    in_token = false;
  };

  for (std::size_t pos = 0; pos < raw.size();) {
    const auto d = detail::decode_utf8(raw, pos);
    switch (classify(d.cp)) {
      case CharClass::Token:
        if (!in_token) {
          in_token = true;
          span.begin = pos;
        }
        detail::append_folded(current, d.cp);
        span.end = pos + d.length;
        break;
      case CharClass::Dropped:
        if (in_token) span.end = pos + d.length;
        break;
      case CharClass::Separator:
        flush();
        break;
    }
    pos += d.length;
  }
  flush();
  return out;
}

/// Normalized, stopword-free tokens of `raw`.
inline std::vector<std::string> normalized_tokens(std::string_view raw,
                                                  const NormalizationConfig& cfg) {
  return tokenize(raw, cfg).tokens;
}

/// Space-joined token sequence; the canonical key of a term.
inline std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string key;
  for (const auto& t : tokens) {
    if (!key.empty()) key.push_back(' ');
    key += t;
  }
  return key;
}

}  // namespace dicoder
