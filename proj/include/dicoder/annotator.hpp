#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "dicoder/matcher.hpp"
#include "dicoder/normalize.hpp"
#include "dicoder/trie.hpp"

namespace dicoder {

/// A terminal passed by a match state: the term and how it was reached.
struct TerminalHit {
  std::size_t start_index = 0;
  std::size_t end_index = 0;  // one past the last consumed input token
  const Term* term = nullptr;
  std::vector<MatchTechnique> techniques;

  std::size_t length() const noexcept { return end_index - start_index; }
};

/// A live position in the trie for input tokens [start_index, start_index + techniques.size()).
struct MatchState {
  const TrieNode* node = nullptr;
  std::size_t start_index = 0;
  std::vector<MatchTechnique> techniques;
  std::vector<std::string> dict_tokens;
  std::optional<TerminalHit> last_terminal;

  std::size_t end_index() const noexcept { return start_index + techniques.size(); }
};

/// A detected term occurrence in a raw line.
struct Annotation {
  std::size_t start_char = 0;  // byte offsets into the raw line
  std::size_t end_char = 0;
  std::size_t start_token = 0;
  std::size_t end_token = 0;
  std::vector<std::string> matched_tokens;
  std::vector<std::string> term_tokens;
  std::string term_label;
  std::string code;
  std::vector<MatchTechnique> techniques;

  friend bool operator==(const Annotation&, const Annotation&) = default;
};

inline unsigned priority_sum(const std::vector<MatchTechnique>& techniques) {
  unsigned sum = 0;
  for (auto t : techniques) sum += priority(t);
  return sum;
}

/// Strict "better than" on terminal hits: more input tokens, then lower
/// technique priority sum, then smaller label.
inline bool better_hit(const TerminalHit& a, const TerminalHit& b) {
  if (a.length() != b.length()) return a.length() > b.length();
  const unsigned pa = priority_sum(a.techniques), pb = priority_sum(b.techniques);
  if (pa != pb) return pa < pb;
  return a.term->label < b.term->label;
}

/// The best terminal passed by any of `states`, or nothing when none of them
/// passed a terminal. States are expected to share a start index.
inline std::optional<TerminalHit> select_longest(const std::vector<MatchState>& states) {
  std::optional<TerminalHit> best;
  for (const auto& s : states) {
    if (s.last_terminal && (!best || better_hit(*s.last_terminal, *best))) best = s.last_terminal;
  }
  return best;
}

/// Everything the traversal needs besides the text. References must outlive it.
struct AnnotatorContext {
  const DictionaryTrie& trie;
  const NormalizationConfig& cfg;
  const AbbreviationTable& abbrevs;
  MatchOptions options{};

  AnnotatorContext(const DictionaryTrie& t, const NormalizationConfig& c, const AbbreviationTable& a,
                   MatchOptions o = {})
      : trie(t), cfg(c), abbrevs(a), options(o) {
    if (!trie.frozen()) throw std::logic_error("annotation requires a frozen dictionary");
  }
};

namespace detail {

inline bool better_trail(const MatchState& a, const MatchState& b) {
  const unsigned pa = priority_sum(a.techniques), pb = priority_sum(b.techniques);
  if (pa != pb) return pa < pb;
  return std::tie(a.techniques, a.dict_tokens) < std::tie(b.techniques, b.dict_tokens);
}

// Keeps one state per (start, node): the best trail, carrying the best
// terminal either of them passed.
inline void merge_state(std::vector<MatchState>& states, MatchState s) {
  for (auto& existing : states) {
    if (existing.node != s.node || existing.start_index != s.start_index) continue;
    std::optional<TerminalHit> hit = existing.last_terminal;
    if (s.last_terminal && (!hit || better_hit(*s.last_terminal, *hit))) hit = s.last_terminal;
    if (better_trail(s, existing)) existing = std::move(s);
    existing.last_terminal = std::move(hit);
    return;
  }
  states.push_back(std::move(s));
}

}  // namespace detail

/// Advances every state by one input token, forking once per TokenMatch.
/// With `spawn_fresh`, a new root-anchored state also tries the token.
/// States without a match die; states landing on a terminal record it.
inline std::vector<MatchState> advance_states(const std::vector<MatchState>& states,
                                              const std::string& input_token, std::size_t token_index,
                                              const AnnotatorContext& ctx, bool spawn_fresh = true) {
  std::vector<MatchState> next;

  auto step = [&](const MatchState& s) {
    for (auto& m : match_token(input_token, *s.node, ctx.abbrevs, ctx.trie.bigrams(), ctx.options)) {
      MatchState succ;
      succ.node = m.target;
      succ.start_index = s.start_index;
      succ.techniques = s.techniques;
      succ.techniques.push_back(m.technique);
      succ.dict_tokens = s.dict_tokens;
      succ.dict_tokens.insert(succ.dict_tokens.end(), m.dict_tokens.begin(), m.dict_tokens.end());
      succ.last_terminal = s.last_terminal;
      if (const auto& term = m.target->terminal()) {
        TerminalHit hit{succ.start_index, token_index + 1, &*term, succ.techniques};
        if (!succ.last_terminal || better_hit(hit, *succ.last_terminal)) succ.last_terminal = std::move(hit);
      }
      detail::merge_state(next, std::move(succ));
    }
  };

  for (const auto& s : states) step(s);
  if (spawn_fresh) {
    MatchState fresh;
    fresh.node = &ctx.trie.root();
    fresh.start_index = token_index;
    step(fresh);
  }
  return next;
}

/// Greedy leftmost-longest scan of one raw line. At each start token every
/// forked path is followed until it dies; the best terminal passed from the
/// leftmost start is committed and scanning resumes after it. A start that
/// passes no terminal is abandoned and the next token becomes the leftmost
/// candidate.
inline std::vector<Annotation> annotate_tokens(const TokenizedText& text, const AnnotatorContext& ctx) {
  std::vector<Annotation> out;
  const auto& tokens = text.tokens;

  std::vector<MatchState> alive;
  // Dead or finished candidates still waiting for an earlier start to resolve.
  std::vector<TerminalHit> pending;
  std::size_t next_start = 0;  // no start before this can still be committed

  auto commit = [&](const TerminalHit& hit) {
    Annotation a;
    a.start_token = hit.start_index;
    a.end_token = hit.end_index;
    a.start_char = text.offsets[hit.start_index].begin;
    a.end_char = text.offsets[hit.end_index - 1].end;
    a.matched_tokens.assign(tokens.begin() + static_cast<std::ptrdiff_t>(hit.start_index),
                            tokens.begin() + static_cast<std::ptrdiff_t>(hit.end_index));
    a.term_tokens = hit.term->tokens;
    a.term_label = hit.term->label;
    a.code = hit.term->code;
    a.techniques = hit.techniques;
    out.push_back(std::move(a));
  };

  auto best_pending = [&](std::size_t start) {
    std::optional<TerminalHit> best;
    for (const auto& h : pending) {
      if (h.start_index == start && (!best || better_hit(h, *best))) best = h;
    }
    return best;
  };

  // Decides every start below `limit` none of whose paths is still alive.
  auto resolve = [&](std::size_t limit) {
    while (next_start < limit) {
      const bool still_alive = std::any_of(alive.begin(), alive.end(), [&](const MatchState& s) {
        return s.start_index == next_start;
      });
      if (still_alive) return;
      if (auto hit = best_pending(next_start)) {
        commit(*hit);
        next_start = hit->end_index;
      } else {
        ++next_start;
      }
      std::erase_if(alive, [&](const MatchState& s) { return s.start_index < next_start; });
      std::erase_if(pending, [&](const TerminalHit& h) { return h.start_index < next_start; });
    }
  };

  for (std::size_t j = 0; j < tokens.size(); ++j) {
    alive = advance_states(alive, tokens[j], j, ctx, j >= next_start);
    for (const auto& s : alive) {
      if (s.last_terminal && s.last_terminal->end_index == j + 1) pending.push_back(*s.last_terminal);
    }
    resolve(j + 1);
  }
  alive.clear();
  resolve(tokens.size());
  return out;
}

inline std::vector<Annotation> annotate_line(std::string_view raw, const AnnotatorContext& ctx) {
  return annotate_tokens(tokenize(raw, ctx.cfg), ctx);
}

inline std::vector<Annotation> annotate_line(std::string_view raw, const DictionaryTrie& trie,
                                             const NormalizationConfig& cfg, const AbbreviationTable& abbrevs,
                                             MatchOptions options = {}) {
  return annotate_line(raw, AnnotatorContext(trie, cfg, abbrevs, options));
}

}  // namespace dicoder
