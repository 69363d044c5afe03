#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dicoder/error.hpp"
#include "dicoder/normalize.hpp"

namespace dicoder {

/// A dictionary entry: its normalized tokens, surface label and code.
struct Term {
  std::vector<std::string> tokens;
  std::string label;
  std::string code;

  /// Tokenizes `label` under `cfg`. The token list may come out empty
  /// (stopword-only label); insertion rejects such terms.
  static Term from_label(std::string label, std::string code, const NormalizationConfig& cfg) {
    Term t;
    t.tokens = normalized_tokens(label, cfg);
    t.label = std::move(label);
    t.code = std::move(code);
    return t;
  }

  friend bool operator==(const Term&, const Term&) = default;
};

class TrieNode {
 public:
  using Children = std::map<std::string, std::unique_ptr<TrieNode>, std::less<>>;

  TrieNode() = default;
  TrieNode(std::string token, const TrieNode* parent, std::size_t depth)
      : token_(std::move(token)), parent_(parent), depth_(depth) {}

  TrieNode(const TrieNode&) = delete;
  TrieNode& operator=(const TrieNode&) = delete;

  /// Edge token into this node; empty for the root.
  const std::string& token() const noexcept { return token_; }
  const TrieNode* parent() const noexcept { return parent_; }
  std::size_t depth() const noexcept { return depth_; }
  bool is_root() const noexcept { return parent_ == nullptr; }

  const Children& children() const noexcept { return children_; }
  const std::optional<Term>& terminal() const noexcept { return terminal_; }
  bool is_terminal() const noexcept { return terminal_.has_value(); }

 private:
  friend class DictionaryTrie;

  std::string token_;
  const TrieNode* parent_ = nullptr;
  std::size_t depth_ = 0;
  Children children_;
  std::optional<Term> terminal_;
};

/// The child reached by exactly `token`, or nullptr. Looks one level down only.
inline const TrieNode* child_lookup(const TrieNode& node, std::string_view token) {
  if (token.empty()) return nullptr;
  auto it = node.children().find(token);
  return it == node.children().end() ? nullptr : it->second.get();
}

/// Edge tokens of the node's children, in sorted order.
inline std::vector<std::string_view> children_tokens(const TrieNode& node) {
  std::vector<std::string_view> out;
  out.reserve(node.children().size());
  for (const auto& [tok, _] : node.children()) out.push_back(tok);
  return out;
}

/// Edge tokens from the root down to `node`.
inline std::vector<std::string> path_tokens(const TrieNode& node) {
  std::vector<std::string> out(node.depth());
  for (const TrieNode* n = &node; !n->is_root(); n = n->parent()) out[n->depth() - 1] = n->token();
  return out;
}

/// Maps a concatenated token pair ("meningo" + "encephalite") to every
/// (first, second) pair that occurs consecutively on some term path.
class BigramIndex {
 public:
  using Pair = std::pair<std::string, std::string>;

  void add(const std::string& first, const std::string& second) {
    auto& pairs = index_[first + second];
    Pair p{first, second};
    for (const auto& q : pairs) {
      if (q == p) return;
    }
    pairs.push_back(std::move(p));
    ++pair_count_;
  }

  /// Pairs whose concatenation equals `concatenated`; empty when none.
  const std::vector<Pair>& find(const std::string& concatenated) const {
    static const std::vector<Pair> kNone;
    auto it = index_.find(concatenated);
    return it == index_.end() ? kNone : it->second;
  }

  bool contains(const std::string& first, const std::string& second) const {
    for (const auto& p : find(first + second)) {
      if (p.first == first && p.second == second) return true;
    }
    return false;
  }

  std::size_t size() const noexcept { return pair_count_; }
  bool empty() const noexcept { return pair_count_ == 0; }

 private:
  std::unordered_map<std::string, std::vector<Pair>> index_;
  std::size_t pair_count_ = 0;
};

/// Token tree: each term is a root-to-node path; the node ending a term
/// holds it. Built by insert_term(), then frozen; a frozen trie is immutable
/// and may be shared by any number of concurrent annotators.
class DictionaryTrie {
 public:
  DictionaryTrie() = default;
  DictionaryTrie(DictionaryTrie&&) noexcept = default;
  DictionaryTrie& operator=(DictionaryTrie&&) noexcept = default;

  /// Adds `term`; an existing terminal on the same path is overwritten.
  /// Returns true when the path was not a term before.
  bool insert_term(Term term) {
    if (frozen_) throw std::logic_error("insert_term on a frozen dictionary");
    if (term.tokens.empty()) throw Error("cannot insert a term without tokens: '" + term.label + "'");
    if (term.code.empty()) throw Error("cannot insert a term without code: '" + term.label + "'");

    TrieNode* node = root_.get();
    for (const auto& tok : term.tokens) {
      if (tok.empty()) throw Error("empty token in term '" + term.label + "'");
      auto it = node->children_.find(tok);
      if (it == node->children_.end()) {
        auto child = std::make_unique<TrieNode>(tok, node, node->depth_ + 1);
        it = node->children_.emplace(tok, std::move(child)).first;
        ++node_count_;
      }
      node = it->second.get();
    }
    const bool fresh = !node->terminal_.has_value();
    if (fresh) ++term_count_;
    node->terminal_ = std::move(term);
    return fresh;
  }

  /// Builds the bigram index and forbids further insertion.
  void freeze() {
    if (frozen_) return;
    bigrams_ = build_bigram_index(*this);
    frozen_ = true;
  }

  bool frozen() const noexcept { return frozen_; }
  const TrieNode& root() const noexcept { return *root_; }
  const BigramIndex& bigrams() const noexcept { return bigrams_; }

  std::size_t term_count() const noexcept { return term_count_; }
  /// Node count including the root.
  std::size_t node_count() const noexcept { return node_count_; }

  /// Node reached by following `tokens` exactly from the root.
  const TrieNode* find(const std::vector<std::string>& tokens) const {
    const TrieNode* node = root_.get();
    for (const auto& t : tokens) {
      node = child_lookup(*node, t);
      if (node == nullptr) return nullptr;
    }
    return node;
  }

  /// Visits every terminal term in path order.
  template <typename Fn>
  void for_each_term(Fn&& fn) const {
    visit(*root_, fn);
  }

  /// Consecutive token pairs of every root-to-terminal path, keyed by
  /// their concatenation. Only edges leading toward a terminal count.
  static BigramIndex build_bigram_index(const DictionaryTrie& trie) {
    BigramIndex index;
    trie.for_each_term([&](const Term& term) {
      for (std::size_t i = 0; i + 1 < term.tokens.size(); ++i) {
        index.add(term.tokens[i], term.tokens[i + 1]);
      }
    });
    return index;
  }

 private:
  template <typename Fn>
  static void visit(const TrieNode& node, Fn& fn) {
    if (node.terminal_) fn(*node.terminal_);
    for (const auto& [_, child] : node.children_) visit(*child, fn);
  }

  std::unique_ptr<TrieNode> root_ = std::make_unique<TrieNode>();
  BigramIndex bigrams_;
  std::size_t term_count_ = 0;
  std::size_t node_count_ = 1;
  bool frozen_ = false;
};

inline BigramIndex build_bigram_index(const DictionaryTrie& trie) {
  return DictionaryTrie::build_bigram_index(trie);
}

}  // namespace dicoder
