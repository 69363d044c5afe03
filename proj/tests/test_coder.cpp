#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dicoder/coder.hpp"
#include "oracles.hpp"

using namespace dicoder;

namespace {

const auto kCfg = NormalizationConfig::french_default();

CorpusRecord row(std::string standard, std::string code) {
  return {"1", "1", "", std::move(standard), std::move(code)};
}

std::vector<CorpusRecord> avc_rows() {
  std::vector<CorpusRecord> rows;
  const std::vector<std::pair<std::string, int>> counts = {{"F179", 1}, {"I64", 260},  {"I640", 1635},
                                                           {"T821", 1}, {"Z915", 1}, {"I489", 1}};
  for (const auto& [code, n] : counts) {
    for (int i = 0; i < n; ++i) rows.push_back(row("avc", code));
  }
  return rows;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  auto p = std::filesystem::temp_directory_path() / ("dicoder_coder_" + name);
  std::ofstream(p) << content;
  return p;
}

}  // namespace

TEST(BuildFromCorpus, AvcCounts) {
  const auto h = build_dictionary_from_corpus(avc_rows(), kCfg);
  ASSERT_EQ(h.table.size(), 1u);
  const auto& codes = h.table.codes("avc");
  EXPECT_EQ(codes.at("I640"), 1635u);
  EXPECT_EQ(codes.at("I64"), 260u);
  EXPECT_EQ(codes.at("F179"), 1u);
  EXPECT_EQ(h.skipped_rows, 0u);
}

TEST(BuildFromCorpus, EmptyInput) {
  const auto h = build_dictionary_from_corpus({}, kCfg);
  EXPECT_TRUE(h.table.empty());
}

TEST(BuildFromCorpus, GlissementRowsAndSkips) {
  std::vector<CorpusRecord> rows = {row("syndrome glissement", "R453"), row("grabatisation 2 mois", "R263")};
  rows.push_back({"1", "2", "x", std::nullopt, std::string("R99")});
  rows.push_back({"1", "3", "x", std::string("malaise"), std::nullopt});
  rows.push_back(row("de la", "X1"));
  const auto h = build_dictionary_from_corpus(rows, kCfg);
  EXPECT_EQ(h.table.size(), 2u);
  EXPECT_EQ(h.table.codes("syndrome glissement").size(), 1u);
  EXPECT_EQ(h.table.codes("grabatisation 2 mois").at("R263"), 1u);
  EXPECT_EQ(h.skipped_rows, 3u);
}

TEST(ResolveCode, MostFrequentThenSmallest) {
  const auto h = build_dictionary_from_corpus(avc_rows(), kCfg);
  EXPECT_EQ(resolve_code(h.table, "avc"), "I640");

  CodeFrequencyTable t;
  t.add("malaise", "R55", "malaise");
  EXPECT_EQ(resolve_code(t, "malaise"), "R55");
  t.add("x", "B20", "x", 5);
  t.add("x", "A10", "x", 5);
  EXPECT_EQ(resolve_code(t, "x"), "A10");
  EXPECT_THROW(resolve_code(t, "absent"), Error);
}

TEST(ResolveCode, ArgmaxProperty) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 1000; ++i) {
    CodeFrequencyTable t;
    const int n = std::uniform_int_distribution<int>(1, 8)(rng);
    for (int k = 0; k < n; ++k) {
      t.add("k", "C" + std::to_string(std::uniform_int_distribution<int>(0, 9)(rng)), "k",
            std::uniform_int_distribution<std::size_t>(1, 4)(rng));
    }
    const auto& codes = t.codes("k");
    std::size_t max = 0;
    for (const auto& [c, n2] : codes) max = std::max(max, n2);
    const auto& got = resolve_code(t, "k");
    ASSERT_EQ(codes.at(got), max);
    for (const auto& [c, n2] : codes) {
      if (n2 == max) {
        ASSERT_LE(got, c);
      }
    }
  }
}

TEST(AssembleDictionary, CorpusWinsOverExternal) {
  CodeFrequencyTable corpus, external;
  corpus.add("avc", "I640", "AVC");
  external.add("avc", "I64", "avc");
  external.add("asthme", "J459", "Asthme");
  const auto d = assemble_dictionary(corpus, external);
  EXPECT_EQ(d.trie.find({"avc"})->terminal()->code, "I640");
  EXPECT_EQ(d.trie.find({"asthme"})->terminal()->code, "J459");
  EXPECT_EQ(d.report.terms, 2u);
  EXPECT_EQ(d.report.codes, 2u);
  EXPECT_EQ(d.report.conflicts, 1u);
  EXPECT_TRUE(d.trie.frozen());
}

TEST(AssembleDictionary, NoSources) {
  EXPECT_THROW(assemble_dictionary(DictionarySpec{}, kCfg), Error);
  DictionarySpec only_external;
  only_external.external_term_lists = {"terms.csv"};
  EXPECT_THROW(assemble_dictionary(only_external, kCfg), Error);  // corpus_only ignores them
}

TEST(AssembleDictionary, FromFiles) {
  const auto corpus = write_temp("corpus.csv",
                                 "DocID;LineID;RawText;StandardText;ICD10\n"
                                 "1;1;AVC massif;avc;I640\n"
                                 "1;1;AVC massif;AVC;I64\n"
                                 "2;1;avc;avc;I640\n"
                                 "3;1;bad row\n"
                                 "4;1;rien;;\n");
  const auto terms = write_temp("terms.csv",
                                "label;code\n"
                                "Accident vasculaire cérébral;I64\n"
                                "avc;I64\n"
                                "Asthme;J459\n");
  DictionarySpec spec;
  spec.corpus_sources = {corpus};
  auto d = assemble_dictionary(spec, kCfg);
  EXPECT_EQ(d.report.terms, 1u);
  EXPECT_EQ(d.report.malformed_rows, 1u);
  EXPECT_EQ(d.report.skipped_rows, 1u);
  EXPECT_EQ(d.report.ambiguous, 1u);

  spec.external_term_lists = {terms};
  spec.mode = DictionaryMode::CorpusPlusExternal;
  d = assemble_dictionary(spec, kCfg);
  EXPECT_EQ(d.report.terms, 3u);
  EXPECT_EQ(d.report.codes, 3u);
  EXPECT_EQ(d.report.conflicts, 1u);
  EXPECT_EQ(d.trie.find({"avc"})->terminal()->code, "I640");
  EXPECT_EQ(d.trie.find({"accident", "vasculaire", "cerebral"})->terminal()->label, "Accident vasculaire cérébral");

  spec.external_term_lists = {"/nonexistent.csv"};
  EXPECT_THROW(assemble_dictionary(spec, kCfg), Error);
}

TEST(AssembleDictionary, TermCountIsDistinctKeysAndRebuildIsIdentical) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 200; ++i) {
    CodeFrequencyTable corpus, external;
    std::set<std::string> keys;
    for (int k = 0; k < 20; ++k) {
      const auto key = fixtures::random_word(rng, 3, 4, 3) + " " + fixtures::random_word(rng, 3, 3, 2);
      const auto code = "C" + std::to_string(std::uniform_int_distribution<int>(0, 5)(rng));
      (k % 2 ? corpus : external).add(key, code, key);
      keys.insert(key);
    }
    const auto a = assemble_dictionary(corpus, external);
    const auto b = assemble_dictionary(corpus, external);
    ASSERT_EQ(a.report.terms, keys.size());
    ASSERT_EQ(a.report, b.report);
    std::vector<Term> ta, tb;
    a.trie.for_each_term([&](const Term& t) { ta.push_back(t); });
    b.trie.for_each_term([&](const Term& t) { tb.push_back(t); });
    ASSERT_EQ(ta, tb);
  }
}

TEST(TermList, ColumnsByIndex) {
  std::istringstream in("code,label\nJ459,asthme\n");
  const auto h = parse_term_list(in, {',', "1", "0"}, kCfg);
  EXPECT_EQ(resolve_code(h.table, "asthme"), "J459");

  std::istringstream bad("x;y\n1;2\n");
  EXPECT_THROW(parse_term_list(bad, {}, kCfg), Error);
}
