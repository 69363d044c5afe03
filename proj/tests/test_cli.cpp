#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "dicoder/cli.hpp"
#include "oracles.hpp"

using namespace dicoder;
using dicoder::cli::CliConfig;

namespace {

const std::filesystem::path kData = DICODER_TEST_DATA_DIR;

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("dicoder_cli_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(CmdBuild, ThreeRowFixture) {
  CliConfig c;
  c.corpus = {kData / "build3.csv"};
  c.output = temp_path("build3.json");
  std::ostringstream out, err;
  ASSERT_EQ(cli::cmd_build(c, out, err), 0) << err.str();
  EXPECT_EQ(out.str().rfind("terms=3 codes=3 ", 0), 0u) << out.str();
  const auto j = nlohmann::json::parse(slurp(*c.output));
  EXPECT_EQ(j.at("terms"), 3);
  EXPECT_EQ(j.at("codes"), 3);
}

TEST(CmdBuild, NoSourcesFails) {
  std::ostringstream out, err;
  EXPECT_NE(cli::cmd_build(CliConfig{}, out, err), 0);
  EXPECT_TRUE(out.str().empty());
  EXPECT_NE(err.str().find("no sources"), std::string::npos);
}

TEST(CmdBuild, ExternalOverlapIsAConflict) {
  CliConfig c;
  c.corpus = {kData / "build3.csv"};
  c.external = {kData / "external_terms.csv"};
  c.mode = DictionaryMode::CorpusPlusExternal;
  std::ostringstream out, err;
  ASSERT_EQ(cli::cmd_build(c, out, err), 0) << err.str();
  EXPECT_NE(out.str().find("terms=4 "), std::string::npos) << out.str();
  EXPECT_NE(out.str().find("conflicts=1"), std::string::npos) << out.str();
}

TEST(CmdAnnotate, DetresseLine) {
  CliConfig c;
  c.corpus = {kData / "insuffisance_corpus.csv"};
  c.input = kData / "detresse_input.csv";
  c.output = temp_path("detresse.csv");
  std::ostringstream out, err;
  ASSERT_EQ(cli::cmd_annotate(c, out, err), 0) << err.str();
  EXPECT_EQ(out.str(), "lines=1 annotations=1\n");
  std::ifstream in(*c.output);
  const auto rows = read_annotations(in);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].code, "I509");
  EXPECT_EQ(rows[0].matched_text, "INS CARDIAQU AIGUE");
  EXPECT_EQ(rows[0].term_label, "insuffisance cardiaque aigue");
  EXPECT_EQ(rows[0].techniques,
            (std::vector<MatchTechnique>{MatchTechnique::Abbreviation, MatchTechnique::Levenshtein,
                                         MatchTechnique::Perfect}));
}

TEST(CmdAnnotate, MeningoLine) {
  CliConfig c;
  c.corpus = {kData / "meningo_corpus.csv"};
  c.input = kData / "meningo_input.csv";
  c.output = temp_path("meningo.csv");
  std::ostringstream out, err;
  ASSERT_EQ(cli::cmd_annotate(c, out, err), 0) << err.str();
  std::ifstream in(*c.output);
  const auto rows = read_annotations(in);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].term_label, "meningo encephalite virale");
  EXPECT_EQ(rows[0].code, "A86");
}

TEST(CmdAnnotate, EmptyCorpus) {
  CliConfig c;
  c.corpus = {kData / "insuffisance_corpus.csv"};
  c.input = kData / "empty_input.csv";
  c.output = temp_path("empty.csv");
  std::ostringstream out, err;
  ASSERT_EQ(cli::cmd_annotate(c, out, err), 0) << err.str();
  EXPECT_EQ(out.str(), "lines=0 annotations=0\n");
  EXPECT_EQ(slurp(*c.output), "doc_id;line_id;start_char;end_char;matched_text;term_label;code;techniques\n");
}

TEST(CmdAnnotate, MissingInputFails) {
  CliConfig c;
  c.corpus = {kData / "insuffisance_corpus.csv"};
  c.input = kData / "does_not_exist.csv";
  c.output = temp_path("never.csv");
  std::ostringstream out, err;
  EXPECT_NE(cli::cmd_annotate(c, out, err), 0);
  EXPECT_FALSE(err.str().empty());
}

TEST(CmdEval, Fixtures) {
  CliConfig c;
  c.gold = kData / "eval_gold.csv";
  c.predicted = kData / "eval_pred.csv";
  c.output = temp_path("eval.json");
  std::ostringstream out, err;
  ASSERT_EQ(cli::cmd_eval(c, out, err), 0) << err.str();
  EXPECT_EQ(out.str(), "precision 0.667 recall 0.500 f 0.571\ntp=2 fp=1 fn=2\n");
  const auto j = nlohmann::json::parse(slurp(*c.output));
  EXPECT_EQ(j.at("tp"), 2);

  c.predicted = kData / "eval_gold.csv";  // not an annotation file
  std::ostringstream out2, err2;
  EXPECT_NE(cli::cmd_eval(c, out2, err2), 0);
}

TEST(CmdEval, GoldAgainstItself) {
  // the annotations of a gold corpus whose raw text is its standard text
  const auto corpus = temp_path("selfcorpus.csv");
  const auto annotations = temp_path("selfann.csv");
  {
    std::ofstream f(corpus);
    f << "DocID;LineID;RawText;StandardText;ICD10\n"
         "1;1;choc septique;choc septique;R572\n"
         "1;2;insuffisance renale aigue;insuffisance renale aigue;N179\n"
         "2;1;arret cardio respiratoire;arret cardio respiratoire;I469\n"
         "3;1;AVC;AVC;I640\n";
  }
  CliConfig c;
  c.corpus = {corpus};
  c.input = corpus;
  c.output = annotations;
  std::ostringstream out, err;
  ASSERT_EQ(cli::cmd_annotate(c, out, err), 0) << err.str();
  c.gold = corpus;
  c.predicted = annotations;
  c.output = temp_path("self.json");
  std::ostringstream eval_out;
  ASSERT_EQ(cli::cmd_eval(c, eval_out, err), 0) << err.str();
  EXPECT_EQ(eval_out.str().rfind("precision 1.000 recall 1.000 f 1.000", 0), 0u) << eval_out.str();
}

TEST(AnnotateLines, OrderIndependentOfWorkerCount) {
  const auto cfg = NormalizationConfig::french_default();
  const auto trie = fixtures::insuffisance_trie(cfg);
  const auto abbrevs = AbbreviationTable::french_default(cfg);
  const AnnotatorContext ctx(trie, cfg, abbrevs);
  std::vector<CorpusRecord> lines;
  std::mt19937_64 rng(51);
  const std::vector<std::string> words = {"insuffisance", "cardiaque", "ins", "aigue", "respiratoire",
                                          "cardiaqe", "congestive", "detresse"};
  for (int i = 0; i < 300; ++i) {
    std::string raw;
    for (int k = std::uniform_int_distribution<int>(0, 8)(rng); k > 0; --k) {
      raw += words[std::uniform_int_distribution<std::size_t>(0, words.size() - 1)(rng)] + " ";
    }
    lines.push_back({"1", std::to_string(i), raw, std::nullopt, std::nullopt});
  }
  const auto serial = cli::annotate_lines(lines, ctx, 1);
  EXPECT_EQ(cli::annotate_lines(lines, ctx, 4), serial);
  EXPECT_EQ(cli::annotate_lines(lines, ctx, 0), serial);
}
