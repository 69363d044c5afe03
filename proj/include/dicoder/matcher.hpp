#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dicoder/detail/utf8.hpp"
#include "dicoder/error.hpp"
#include "dicoder/levenshtein.hpp"
#include "dicoder/normalize.hpp"
#include "dicoder/trie.hpp"

namespace dicoder {

/// How one input token was matched. Declaration order is priority order:
/// Perfect is preferred over everything else.
enum class MatchTechnique : unsigned char { Perfect, Abbreviation, Levenshtein, BigramLevenshtein };

inline constexpr unsigned priority(MatchTechnique t) noexcept { return static_cast<unsigned>(t); }

inline std::string_view to_string(MatchTechnique t) noexcept {
  switch (t) {
    case MatchTechnique::Perfect: return "perfect";
    case MatchTechnique::Abbreviation: return "abbreviation";
    case MatchTechnique::Levenshtein: return "levenshtein";
    case MatchTechnique::BigramLevenshtein: return "bigram_levenshtein";
  }
  return "?";
}

inline MatchTechnique technique_from_string(std::string_view s) {
  for (auto t : {MatchTechnique::Perfect, MatchTechnique::Abbreviation,
                 MatchTechnique::Levenshtein, MatchTechnique::BigramLevenshtein}) {
    if (to_string(t) == s) return t;
  }
  throw Error("unknown match technique: '" + std::string(s) + "'");
}

/// Abbreviation token -> normalized expansions.
class AbbreviationTable {
 public:
  using Expansion = std::vector<std::string>;

  /// Normalizes both sides under `cfg`. Rejects empty keys or expansions,
  /// multi-token keys, and expansions equal to the key itself.
  void add(std::string_view abbreviation, std::string_view expansion, const NormalizationConfig& cfg) {
    const auto key_tokens = normalized_tokens(abbreviation, cfg);
    if (key_tokens.size() != 1) {
      throw Error("abbreviation must normalize to one token: '" + std::string(abbreviation) + "'");
    }
    auto exp = normalized_tokens(expansion, cfg);
    if (exp.empty()) throw Error("empty expansion for abbreviation '" + key_tokens[0] + "'");
    if (exp.size() == 1 && exp[0] == key_tokens[0]) {
      throw Error("abbreviation '" + key_tokens[0] + "' expands to itself");
    }
    auto& list = entries_[key_tokens[0]];
    if (std::find(list.begin(), list.end(), exp) == list.end()) list.push_back(std::move(exp));
  }

  const std::vector<Expansion>& expansions(std::string_view token) const {
    static const std::vector<Expansion> kNone;
    auto it = entries_.find(token);
    return it == entries_.end() ? kNone : it->second;
  }

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const std::map<std::string, std::vector<Expansion>, std::less<>>& entries() const noexcept {
    return entries_;
  }

  /// Lines of `abbrev=expansion words`; `#` comments and blank lines ignored.
  static AbbreviationTable from_stream(std::istream& in, const NormalizationConfig& cfg) {
    AbbreviationTable table;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos) {
        throw Error("abbreviation line " + std::to_string(lineno) + ": expected 'abbrev=expansion'");
      }
      try {
        table.add(std::string_view(line).substr(0, eq), std::string_view(line).substr(eq + 1), cfg);
      } catch (const Error& e) {
        throw Error("abbreviation line " + std::to_string(lineno) + ": " + e.what());
      }
    }
    return table;
  }

  static AbbreviationTable from_file(const std::filesystem::path& path, const NormalizationConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read abbreviation file: " + path.string());
    return from_stream(in, cfg);
  }

  /// Nine frequent French clinical abbreviations (same content as
  /// data/abbreviations.txt).
  static AbbreviationTable french_default(const NormalizationConfig& cfg) {
    std::istringstream in{std::string(kDefaultAbbreviations)};
    return from_stream(in, cfg);
  }

  static constexpr std::string_view kDefaultAbbreviations =
      "ins=insuffisance\n"
      "avc=accident vasculaire cerebral\n"
      "bpco=bronchopneumopathie chronique obstructive\n"
      "ira=insuffisance respiratoire aigue\n"
      "irc=insuffisance renale chronique\n"
      "hta=hypertension arterielle\n"
      "idm=infarctus du myocarde\n"
      "ep=embolie pulmonaire\n"
      "acfa=arythmie complete par fibrillation auriculaire\n";

 private:
  std::map<std::string, std::vector<Expansion>, std::less<>> entries_;
};

/// Expansions of `token`; never contains the token itself.
inline const std::vector<AbbreviationTable::Expansion>& expand_abbreviation(
    std::string_view token, const AbbreviationTable& abbrevs) {
  return abbrevs.expansions(token);
}

struct MatchOptions {
  /// Largest edit distance accepted by the Levenshtein techniques.
  std::size_t max_dist = 1;
  /// Input tokens shorter than this (in code points) only match perfectly
  /// or through an abbreviation.
  std::size_t fuzzy_min_len = 5;
};

/// One way an input token advances through the trie.
struct TokenMatch {
  MatchTechnique technique;
  /// Dictionary tokens walked: one for Perfect and Levenshtein, two for
  /// BigramLevenshtein, the expansion length for Abbreviation.
  std::vector<std::string> dict_tokens;
  const TrieNode* target;
};

namespace detail {

inline void add_or_replace(std::vector<TokenMatch>& out, TokenMatch m) {
  for (auto& existing : out) {
    if (existing.target == m.target) {
      if (priority(m.technique) < priority(existing.technique)) existing = std::move(m);
      return;
    }
  }
  out.push_back(std::move(m));
}

inline const TrieNode* walk_perfect(const TrieNode& from, const std::vector<std::string>& tokens) {
  const TrieNode* node = &from;
  for (const auto& t : tokens) {
    node = child_lookup(*node, t);
    if (node == nullptr) return nullptr;
  }
  return node;
}

// Composed-word candidates among the grandchildren of `node`: pairs (c, g)
// with distance(input, "c g") <= max_dist. The space counts as a character,
// so splitting a glued word costs one deletion.
inline void bigram_candidates_scan(std::string_view input, const TrieNode& node, std::size_t max_dist,
                                   std::vector<TokenMatch>& out) {
  const std::size_t in_len = utf8_length(input);
  std::string spaced;
  for (const auto& [c_tok, child] : node.children()) {
    for (const auto& [g_tok, grandchild] : child->children()) {
      const std::size_t pair_len = utf8_length(c_tok) + 1 + utf8_length(g_tok);
      if ((pair_len > in_len ? pair_len - in_len : in_len - pair_len) > max_dist) continue;
      spaced.assign(c_tok).append(1, ' ').append(g_tok);
      if (bounded_levenshtein(input, spaced, max_dist) <= max_dist) {
        add_or_replace(out, {MatchTechnique::BigramLevenshtein, {c_tok, g_tok}, grandchild.get()});
      }
    }
  }
}

// Same result for max_dist == 1 through the bigram index. The input has no
// space, so one edit reaches "c g" only if the input is c + g (the space is
// inserted) or c + x + g for a single code point x (x becomes the space).
inline void bigram_candidates_indexed(const std::string& input, const TrieNode& node,
                                      const BigramIndex& bigrams, std::vector<TokenMatch>& out) {
  auto try_pairs = [&](const std::string& key, std::optional<std::size_t> first_len) {
    for (const auto& [first, second] : bigrams.find(key)) {
      if (first_len && utf8_length(first) != *first_len) continue;
      const TrieNode* child = child_lookup(node, first);
      if (child == nullptr) continue;
      const TrieNode* grandchild = child_lookup(*child, second);
      if (grandchild == nullptr) continue;
      add_or_replace(out, {MatchTechnique::BigramLevenshtein, {first, second}, grandchild});
    }
  };
  try_pairs(input, std::nullopt);
  std::string key;
  std::size_t index = 0;
  for (std::size_t pos = 0; pos < input.size(); ++index) {
    const std::size_t len = decode_utf8(input, pos).length;
    if (index > 0 && pos + len < input.size()) {
      key.assign(input, 0, pos).append(input, pos + len);
      try_pairs(key, index);
    }
    pos += len;
  }
}

}  // namespace detail

/// Every way `input` can advance from `node`:
///  - Perfect: a child labelled exactly `input`;
///  - Abbreviation: an expansion of `input` walked child by child;
///  - Levenshtein: a child within `max_dist` edits;
///  - BigramLevenshtein: a child/grandchild pair within `max_dist` edits of
///    `input` when compared as "child grandchild".
/// The fuzzy techniques require `input` to be at least `fuzzy_min_len` code
/// points long. One match per target node, the highest-priority one.
inline std::vector<TokenMatch> match_token(const std::string& input, const TrieNode& node,
                                           const AbbreviationTable& abbrevs, const BigramIndex& bigrams,
                                           const MatchOptions& opts = {}) {
  std::vector<TokenMatch> out;
  if (input.empty()) return out;

  if (const TrieNode* child = child_lookup(node, input)) {
    out.push_back({MatchTechnique::Perfect, {input}, child});
  }

  for (const auto& expansion : expand_abbreviation(input, abbrevs)) {
    if (const TrieNode* target = detail::walk_perfect(node, expansion)) {
      detail::add_or_replace(out, {MatchTechnique::Abbreviation, expansion, target});
    }
  }

  if (opts.max_dist == 0 || detail::utf8_length(input) < opts.fuzzy_min_len) return out;

  const std::size_t in_len = detail::utf8_length(input);
  for (const auto& [tok, child] : node.children()) {
    const std::size_t len = detail::utf8_length(tok);
    if ((len > in_len ? len - in_len : in_len - len) > opts.max_dist) continue;
    const std::size_t d = bounded_levenshtein(input, tok, opts.max_dist);
    if (d > 0 && d <= opts.max_dist) {
      detail::add_or_replace(out, {MatchTechnique::Levenshtein, {tok}, child.get()});
    }
  }

  if (opts.max_dist == 1) {
    detail::bigram_candidates_indexed(input, node, bigrams, out);
  } else {
    detail::bigram_candidates_scan(input, node, opts.max_dist, out);
  }
  return out;
}

inline std::vector<TokenMatch> match_token(const std::string& input, const TrieNode& node,
                                           const DictionaryTrie& trie, const AbbreviationTable& abbrevs,
                                           const MatchOptions& opts = {}) {
  return match_token(input, node, abbrevs, trie.bigrams(), opts);
}

}  // namespace dicoder
