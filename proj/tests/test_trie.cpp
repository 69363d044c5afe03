#include <gtest/gtest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "dicoder/trie.hpp"
#include "oracles.hpp"

using namespace dicoder;

namespace {
const auto kCfg = NormalizationConfig::french_default();
}

TEST(Trie, InsertBuildsTokenPath) {
  DictionaryTrie trie;
  trie.insert_term(Term::from_label("insuffisance cardiaque aigue", "I509", kCfg));
  const TrieNode* n = trie.find({"insuffisance", "cardiaque", "aigue"});
  ASSERT_NE(n, nullptr);
  EXPECT_EQ(n->depth(), 3u);
  ASSERT_TRUE(n->is_terminal());
  EXPECT_EQ(n->terminal()->code, "I509");
  EXPECT_FALSE(trie.find({"insuffisance"})->is_terminal());
  EXPECT_FALSE(trie.find({"insuffisance", "cardiaque"})->is_terminal());
}

TEST(Trie, PrefixTermsCoexist) {
  DictionaryTrie trie;
  trie.insert_term(Term::from_label("insuffisance cardiaque", "I509", kCfg));
  trie.insert_term(Term::from_label("insuffisance cardiaque aigue", "I509", kCfg));
  const TrieNode* cardiaque = trie.find({"insuffisance", "cardiaque"});
  ASSERT_NE(cardiaque, nullptr);
  EXPECT_TRUE(cardiaque->is_terminal());
  EXPECT_NE(child_lookup(*cardiaque, "aigue"), nullptr);
  EXPECT_EQ(trie.term_count(), 2u);
}

TEST(Trie, EmptyTermIsRejected) {
  DictionaryTrie trie;
  EXPECT_THROW(trie.insert_term(Term{{}, "de la", "X1"}), Error);
  EXPECT_THROW(trie.insert_term(Term::from_label("de la", "X1", kCfg)), Error);
  EXPECT_THROW(trie.insert_term(Term{{"avc"}, "avc", ""}), Error);
  EXPECT_EQ(trie.term_count(), 0u);
  EXPECT_FALSE(trie.root().is_terminal());
}

TEST(Trie, SamePathOverwritesTerminal) {
  DictionaryTrie trie;
  EXPECT_TRUE(trie.insert_term(Term::from_label("AVC", "I64", kCfg)));
  EXPECT_FALSE(trie.insert_term(Term::from_label("avc", "I640", kCfg)));
  EXPECT_EQ(trie.term_count(), 1u);
  EXPECT_EQ(trie.find({"avc"})->terminal()->code, "I640");
}

TEST(Trie, FrozenTrieRejectsInsertion) {
  auto trie = fixtures::insuffisance_trie(kCfg);
  EXPECT_TRUE(trie.frozen());
  EXPECT_THROW(trie.insert_term(Term::from_label("avc", "I640", kCfg)), std::logic_error);
}

TEST(ChildLookup, FollowsOneLevelOnly) {
  const auto trie = fixtures::insuffisance_trie(kCfg);
  EXPECT_EQ(child_lookup(trie.root(), "cardiaque"), nullptr);
  const TrieNode* ins = child_lookup(trie.root(), "insuffisance");
  ASSERT_NE(ins, nullptr);
  const TrieNode* card = child_lookup(*ins, "cardiaque");
  ASSERT_NE(card, nullptr);
  EXPECT_EQ(card->token(), "cardiaque");
  EXPECT_EQ(child_lookup(*ins, "aigue"), nullptr);
  EXPECT_EQ(child_lookup(trie.root(), ""), nullptr);
  EXPECT_EQ(child_lookup(*card, ""), nullptr);
}

TEST(ChildrenTokens, Insuffisance) {
  const auto trie = fixtures::insuffisance_trie(kCfg);
  EXPECT_EQ(children_tokens(trie.root()), (std::vector<std::string_view>{"insuffisance"}));
  const TrieNode* ins = trie.find({"insuffisance"});
  EXPECT_EQ(children_tokens(*ins), (std::vector<std::string_view>{"cardiaque", "respiratoire"}));
  EXPECT_TRUE(children_tokens(*trie.find({"insuffisance", "respiratoire", "aigue"})).empty());
}

TEST(Trie, InsuffisanceShape) {
  const auto trie = fixtures::insuffisance_trie(kCfg);
  EXPECT_EQ(trie.term_count(), 5u);
  // root, insuffisance, cardiaque, aigue, congestive, respiratoire, aigue
  EXPECT_EQ(trie.node_count(), 7u);
  EXPECT_EQ(path_tokens(*trie.find({"insuffisance", "cardiaque", "congestive"})),
            (std::vector<std::string>{"insuffisance", "cardiaque", "congestive"}));
}

TEST(Trie, RoundTripAndPrefixSharingOnRandomTermSets) {
  std::mt19937_64 rng(1);
  for (int iter = 0; iter < 1000; ++iter) {
    const int n_terms = std::uniform_int_distribution<int>(1, 30)(rng);
    std::map<std::vector<std::string>, std::pair<std::string, std::string>> expected;
    std::set<std::vector<std::string>> prefixes;
    DictionaryTrie trie;
    for (int t = 0; t < n_terms; ++t) {
      std::vector<std::string> tokens;
      const int len = std::uniform_int_distribution<int>(1, 4)(rng);
      // tiny alphabet so that terms share prefixes
      for (int k = 0; k < len; ++k) tokens.push_back(fixtures::random_word(rng, 1, 2, 3) + "x");
      const std::string code = "C" + std::to_string(t);
      const std::string label = join_tokens(tokens);
      trie.insert_term(Term{tokens, label, code});
      expected[tokens] = {label, code};
      for (std::size_t k = 1; k <= tokens.size(); ++k) prefixes.emplace(tokens.begin(), tokens.begin() + k);
    }
    ASSERT_EQ(trie.term_count(), expected.size());
    ASSERT_EQ(trie.node_count(), prefixes.size() + 1);
    for (const auto& [tokens, lc] : expected) {
      const TrieNode* node = trie.find(tokens);
      ASSERT_NE(node, nullptr);
      ASSERT_TRUE(node->is_terminal());
      ASSERT_EQ(node->terminal()->label, lc.first);
      ASSERT_EQ(node->terminal()->code, lc.second);
    }
  }
}

TEST(BigramIndex, InsuffisancePairs) {
  const auto trie = fixtures::insuffisance_trie(kCfg);
  const auto& idx = trie.bigrams();
  EXPECT_TRUE(idx.contains("insuffisance", "cardiaque"));
  EXPECT_TRUE(idx.contains("cardiaque", "aigue"));
  EXPECT_TRUE(idx.contains("cardiaque", "congestive"));
  EXPECT_TRUE(idx.contains("insuffisance", "respiratoire"));
  EXPECT_TRUE(idx.contains("respiratoire", "aigue"));
  EXPECT_EQ(idx.size(), 5u);
  EXPECT_EQ(idx.find("insuffisancecardiaque").size(), 1u);
  EXPECT_FALSE(idx.contains("insuffisance", "aigue"));
}

TEST(BigramIndex, DegenerateTries) {
  DictionaryTrie empty;
  EXPECT_TRUE(build_bigram_index(empty).empty());
  DictionaryTrie single;
  single.insert_term(Term::from_label("avc", "I640", kCfg));
  EXPECT_TRUE(build_bigram_index(single).empty());
}

TEST(BigramIndex, ConcatenationCollisionsKeepAllPairs) {
  const auto trie = fixtures::trie_of({{"ab c", "A1"}, {"a bc", "A2"}}, NormalizationConfig{});
  EXPECT_EQ(trie.bigrams().find("abc").size(), 2u);
}
