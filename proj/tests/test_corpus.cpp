#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dicoder/corpus.hpp"
#include "dicoder/eval.hpp"
#include "oracles.hpp"

using namespace dicoder;

namespace {

const std::string kGlissement =
    "DocID;YearCoded;LineID;RawText;StandardText;ICD10\n"
    "7;2013;1;SYNDROME DE GLISEMENT AVEC GRABATISATION DEPUIS OCTOBRE 2012;syndrome glissement;R453\n"
    "7;2013;1;SYNDROME DE GLISEMENT AVEC GRABATISATION DEPUIS OCTOBRE 2012;grabatisation 2 mois;R263\n";

}  // namespace

TEST(ParseAlignedCauses, GlissementRows) {
  std::istringstream in(kGlissement);
  const auto r = parse_aligned_causes(in, CorpusFormat{});
  ASSERT_EQ(r.records.size(), 2u);
  EXPECT_EQ(r.records[0].raw_text, r.records[1].raw_text);
  EXPECT_EQ(r.records[0].raw_text, "SYNDROME DE GLISEMENT AVEC GRABATISATION DEPUIS OCTOBRE 2012");
  EXPECT_EQ(r.records[0].code, "R453");
  EXPECT_EQ(r.records[1].code, "R263");
  EXPECT_EQ(r.records[1].standard_text, "grabatisation 2 mois");
  EXPECT_EQ(distinct_lines(r.records).size(), 1u);
}

TEST(ParseAlignedCauses, HeaderOnly) {
  std::istringstream in("DocID;LineID;RawText;StandardText;ICD10\n");
  EXPECT_TRUE(parse_aligned_causes(in, CorpusFormat{}).records.empty());
  std::istringstream empty("");
  EXPECT_TRUE(parse_aligned_causes(empty, CorpusFormat{}).records.empty());
}

TEST(ParseAlignedCauses, MissingOptionalFieldIsAbsent) {
  std::istringstream in(
      "DocID;LineID;RawText;StandardText;ICD10\n"
      "1;1;malaise;;\n"
      "1;2;chute;chute;W19\n"
      "1;3;too;many;fields;here;x\n"
      ";4;no doc;;\n");
  const auto r = parse_aligned_causes(in, CorpusFormat{});
  ASSERT_EQ(r.records.size(), 2u);
  EXPECT_FALSE(r.records[0].standard_text.has_value());
  EXPECT_FALSE(r.records[0].code.has_value());
  EXPECT_EQ(r.records[1].code, "W19");
  EXPECT_EQ(r.malformed_rows, 2u);
}

TEST(ParseAlignedCauses, QuotedFieldsAndCrlf) {
  std::istringstream in(
      "\xEF\xBB\xBF" "DocID,LineID,RawText,StandardText,ICD10\r\n"
      "1,1,\"choc septique, \"\"grave\"\"\nsuite\",choc septique,R572\r\n");
  CorpusFormat fmt;
  fmt.delimiter = ',';
  const auto r = parse_aligned_causes(in, fmt);
  ASSERT_EQ(r.records.size(), 1u);
  EXPECT_EQ(r.records[0].raw_text, "choc septique, \"grave\"\nsuite");
  EXPECT_EQ(r.records[0].code, "R572");
}

TEST(ParseAlignedCauses, MissingColumnNamesIt) {
  std::istringstream in("DocID;LineID;Texte\n1;1;x\n");
  try {
    parse_aligned_causes(in, CorpusFormat{});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("RawText"), std::string::npos);
  }
  std::istringstream ok("DocID;LineID;Texte\n1;1;x\n");
  CorpusFormat fmt;
  fmt.col_raw = "Texte";
  EXPECT_EQ(parse_aligned_causes(ok, fmt, Need::Raw).records.at(0).raw_text, "x");
}

TEST(ParseAlignedCauses, UnterminatedQuoteIsAnError) {
  std::istringstream in("DocID;LineID;RawText\n1;1;\"open\n");
  EXPECT_THROW(parse_aligned_causes(in, CorpusFormat{}, Need::Raw), Error);
}

TEST(WriteAnnotations, DetresseRow) {
  AnnotationRow r{"1", "1", 0, 18, "INS CARDIAQU AIGUE", "insuffisance cardiaque aigue", "I509",
                  {MatchTechnique::Abbreviation, MatchTechnique::Levenshtein, MatchTechnique::Perfect}};
  std::ostringstream out;
  EXPECT_EQ(write_annotations({r}, out), 1u);
  EXPECT_EQ(out.str(),
            "doc_id;line_id;start_char;end_char;matched_text;term_label;code;techniques\n"
            "1;1;0;18;INS CARDIAQU AIGUE;insuffisance cardiaque aigue;I509;abbreviation,levenshtein,perfect\n");
}

TEST(WriteAnnotations, HeaderOnlyWhenEmpty) {
  std::ostringstream out;
  EXPECT_EQ(write_annotations({}, out), 0u);
  EXPECT_EQ(out.str(), "doc_id;line_id;start_char;end_char;matched_text;term_label;code;techniques\n");
}

TEST(WriteAnnotations, OrderedByDocLineStart) {
  auto mk = [](std::string doc, std::string line, std::size_t start, std::string code) {
    return AnnotationRow{doc, line, start, start + 3, "abc", "abc", code, {MatchTechnique::Perfect}};
  };
  std::vector<AnnotationRow> rows = {mk("2", "1", 9, "D"), mk("10", "1", 0, "E"), mk("2", "10", 0, "C"),
                                     mk("2", "1", 0, "A"), mk("2", "2", 4, "B")};
  std::stringstream buf;
  write_annotations(rows, buf);
  const auto back = read_annotations(buf);
  std::string codes;
  for (const auto& r : back) codes += r.code;
  EXPECT_EQ(codes, "ADBCE");
}

TEST(WriteAnnotations, ParseWriteParseRoundTrip) {
  std::mt19937_64 rng(41);
  const std::vector<std::string> texts = {"plain", "with;semicolon", "with \"quotes\"", "multi\nline", "é à ç", ""};
  for (int i = 0; i < 200; ++i) {
    std::vector<AnnotationRow> rows;
    const int n = std::uniform_int_distribution<int>(0, 10)(rng);
    for (int k = 0; k < n; ++k) {
      AnnotationRow r;
      r.doc_id = std::to_string(std::uniform_int_distribution<int>(1, 5)(rng));
      r.line_id = std::to_string(std::uniform_int_distribution<int>(1, 5)(rng));
      r.start_char = std::uniform_int_distribution<std::size_t>(0, 100)(rng);
      r.end_char = r.start_char + 1 + static_cast<std::size_t>(k);
      r.matched_text = texts[std::uniform_int_distribution<std::size_t>(0, texts.size() - 1)(rng)];
      r.term_label = texts[std::uniform_int_distribution<std::size_t>(0, texts.size() - 1)(rng)];
      r.code = "C" + std::to_string(k);
      for (int t = std::uniform_int_distribution<int>(1, 4)(rng); t > 0; --t) {
        r.techniques.push_back(static_cast<MatchTechnique>(std::uniform_int_distribution<int>(0, 3)(rng)));
      }
      rows.push_back(r);
    }
    for (char delim : {';', ','}) {
      std::stringstream a;
      write_annotations(rows, a, delim);
      const auto parsed = read_annotations(a, delim);
      std::stringstream b;
      write_annotations(parsed, b, delim);
      ASSERT_EQ(read_annotations(b, delim), parsed);
      auto sorted = rows;
      std::stable_sort(sorted.begin(), sorted.end(), row_less);
      ASSERT_EQ(parsed, sorted);
    }
  }
}

TEST(Evaluate, HandEnumerated) {
  const std::vector<CodedLine> gold = {{"1", "1", "a"}, {"1", "1", "b"}, {"1", "2", "c"}, {"2", "1", "d"}};
  const std::vector<CodedLine> pred = {{"1", "1", "a"}, {"1", "1", "b"}, {"1", "2", "e"}};
  const auto r = evaluate(gold, pred);
  EXPECT_EQ(r.tp, 2u);
  EXPECT_EQ(r.fp, 1u);
  EXPECT_EQ(r.fn, 2u);
  EXPECT_DOUBLE_EQ(r.precision, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(r.recall, 0.5);
  EXPECT_DOUBLE_EQ(r.f_measure, 4.0 / 7.0);
  EXPECT_EQ(summary_line(r), "precision 0.667 recall 0.500 f 0.571");
}

TEST(Evaluate, PerfectAndDegenerate) {
  const std::vector<CodedLine> gold = {{"1", "1", "a"}, {"1", "1", "a"}, {"1", "2", "b"}};
  auto r = evaluate(gold, gold);
  EXPECT_EQ(r.tp, 2u);
  EXPECT_EQ(summary_line(r), "precision 1.000 recall 1.000 f 1.000");

  r = evaluate({}, {});
  EXPECT_EQ(r.precision, 1.0);
  EXPECT_EQ(r.recall, 1.0);
  EXPECT_EQ(r.f_measure, 1.0);

  r = evaluate(gold, {});
  EXPECT_EQ(r.precision, 0.0);
  EXPECT_EQ(r.recall, 0.0);
  EXPECT_EQ(r.f_measure, 0.0);
  r = evaluate({}, gold);
  EXPECT_EQ(r.precision, 0.0);
  EXPECT_EQ(r.recall, 0.0);
}

TEST(Evaluate, ScoreIdentity) {
  // 794 true positives, 206 false positives, 225 false negatives:
  // P = 0.794, R = 794/1019 = 0.7792
  const auto r = report_from_counts(794, 206, 225);
  EXPECT_NEAR(r.precision, 0.794, 5e-4);
  EXPECT_NEAR(r.recall, 0.779, 5e-4);
  EXPECT_NEAR(r.f_measure, 0.786, 1e-3);
}

TEST(Evaluate, SymmetryAndRationalOracle) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 1000; ++i) {
    std::vector<CodedLine> gold, pred;
    for (int k = std::uniform_int_distribution<int>(0, 15)(rng); k > 0; --k) {
      gold.push_back({"d", std::to_string(std::uniform_int_distribution<int>(0, 4)(rng)),
                      std::to_string(std::uniform_int_distribution<int>(0, 4)(rng))});
    }
    for (int k = std::uniform_int_distribution<int>(0, 15)(rng); k > 0; --k) {
      pred.push_back({"d", std::to_string(std::uniform_int_distribution<int>(0, 4)(rng)),
                      std::to_string(std::uniform_int_distribution<int>(0, 4)(rng))});
    }
    const auto r = evaluate(gold, pred);
    const auto s = evaluate(pred, gold);
    ASSERT_EQ(r.tp, s.tp);
    ASSERT_EQ(r.fp, s.fn);
    ASSERT_DOUBLE_EQ(r.precision, s.recall);
    ASSERT_DOUBLE_EQ(r.recall, s.precision);
    ASSERT_DOUBLE_EQ(r.f_measure, s.f_measure);
    if (r.tp + r.fp > 0 && r.tp + r.fn > 0) {
      const auto f = oracle::f_measure(static_cast<long long>(r.tp), static_cast<long long>(r.fp),
                                       static_cast<long long>(r.fn));
      ASSERT_NEAR(r.f_measure, f.value(), 1e-12);
      ASSERT_LE(r.f_measure, std::sqrt(r.precision * r.recall) + 1e-12);
    }
  }
}

TEST(Evaluate, JsonReport) {
  const auto j = to_json(report_from_counts(2, 1, 2));
  EXPECT_EQ(j.at("tp"), 2);
  EXPECT_EQ(j.at("fp"), 1);
  EXPECT_EQ(j.at("fn"), 2);
  EXPECT_DOUBLE_EQ(j.at("f_measure").get<double>(), 4.0 / 7.0);
  EXPECT_TRUE(j.contains("precision"));
  EXPECT_TRUE(j.contains("recall"));
}
