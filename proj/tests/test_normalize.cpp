#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dicoder/normalize.hpp"
#include "oracles.hpp"

using namespace dicoder;

namespace {

std::string utf8(char32_t cp) {
  std::string s;
  detail::append_utf8(s, cp);
  return s;
}

// Mixed pools: ASCII, Latin-1 and Latin Extended letters, combining marks,
// Greek, Cyrillic, CJK, Hangul, punctuation, emoji, and arbitrary scalars.
std::string random_unicode(std::mt19937_64& rng, std::size_t max_len) {
  static const std::vector<std::pair<char32_t, char32_t>> pools = {
      {0x20, 0x7E},     {0xA0, 0xFF},     {0x100, 0x24F},   {0x300, 0x36F},   {0x370, 0x3FF},
      {0x400, 0x4FF},   {0x1E00, 0x1EFF}, {0x2000, 0x206F}, {0x4E00, 0x4E80}, {0xAC00, 0xAD00},
      {0xFB00, 0xFB06}, {0x1F600, 0x1F64F}, {0x0, 0x10FFFF}};
  std::uniform_int_distribution<std::size_t> len(0, max_len), pool(0, pools.size() - 1);
  std::string s;
  const auto n = len(rng);
  for (std::size_t i = 0; i < n; ++i) {
    const auto [lo, hi] = pools[pool(rng)];
    char32_t cp = std::uniform_int_distribution<char32_t>(lo, hi)(rng);
    if (cp >= 0xD800 && cp <= 0xDFFF) cp = 'x';
    detail::append_utf8(s, cp);
  }
  return s;
}

}  // namespace

TEST(NormalizeText, Examples) {
  EXPECT_EQ(normalize_text("SYNDROME DE GLISEMENT"), "syndrome de glisement");
  EXPECT_EQ(normalize_text(""), "");
  EXPECT_EQ(normalize_text("Insuffisance,cardiaque. aiguë"), "insuffisance cardiaque  aigue");
}

TEST(NormalizeText, FrenchDiacriticsAndPunctuation) {
  EXPECT_EQ(normalize_text("ÉPANCHEMENT PLEURAL À DROITE"), "epanchement pleural a droite");
  EXPECT_EQ(normalize_text("cœur, Œdème"), "coeur  oedeme");
  EXPECT_EQ(normalize_text("l'aorte"), "l aorte");
  EXPECT_EQ(normalize_text("broncho-pneumopathie"), "broncho pneumopathie");
  EXPECT_EQ(normalize_text("çà ÿ ï î ô û ù"), "ca y i i o u u");
  // decomposed input: e + combining acute
  EXPECT_EQ(normalize_text("e\xCC\x81tat"), "etat");
  EXPECT_EQ(normalize_text("Straße"), "strasse");
}

TEST(NormalizeText, DigitsAreKept) {
  EXPECT_EQ(normalize_text("OCTOBRE 2012"), "octobre 2012");
  EXPECT_EQ(normalize_text("grabatisation 2 mois"), "grabatisation 2 mois");
}

TEST(NormalizeText, MalformedBytesBecomeSpaces) {
  EXPECT_EQ(normalize_text(std::string("a\xFF" "b")), "a b");
  EXPECT_EQ(normalize_text(std::string("a\xC3")), "a ");
}

TEST(NormalizeText, EveryCodePointFoldsToFixedPoint) {
  for (char32_t cp = 0; cp <= 0x10FFFF; ++cp) {
    if (cp >= 0xD800 && cp <= 0xDFFF) continue;
    const auto once = normalize_text(utf8(cp));
    ASSERT_EQ(normalize_text(once), once) << "U+" << std::hex << static_cast<unsigned>(cp);
    for (std::size_t pos = 0; pos < once.size();) {
      const auto d = detail::decode_utf8(once, pos);
      ASSERT_TRUE(d.cp == ' ' || classify(d.cp) == CharClass::Token) << std::hex << static_cast<unsigned>(cp);
      pos += d.length;
    }
  }
}

TEST(NormalizeText, IdempotentOnRandomStrings) {
  std::mt19937_64 rng(20180901);
  for (int i = 0; i < 2000; ++i) {
    const auto s = random_unicode(rng, 40);
    const auto n = normalize_text(s);
    ASSERT_EQ(normalize_text(n), n) << s;
  }
}

TEST(NormalizeText, InsensitiveToCaseAndCombiningMarks) {
  // (lowercase, uppercase) spellings of the same letters
  const std::vector<std::pair<std::string, std::string>> letters = {
      {"a", "A"}, {"e", "E"}, {"z", "Z"}, {"é", "É"}, {"è", "È"}, {"ê", "Ê"}, {"à", "À"},
      {"ç", "Ç"}, {"ô", "Ô"}, {"ï", "Ï"}, {"ù", "Ù"}, {"œ", "Œ"}, {"ñ", "Ñ"}, {"ř", "Ř"}};
  const std::vector<char32_t> marks = {0x0300, 0x0301, 0x0302, 0x0308, 0x0327, 0x030C};
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1), mark(0, marks.size() - 1);
  std::uniform_int_distribution<int> coin(0, 3), len(0, 20);
  for (int i = 0; i < 2000; ++i) {
    std::string lower, upper, marked;
    const int n = len(rng);
    for (int k = 0; k < n; ++k) {
      if (coin(rng) == 0) {
        lower += ' ', upper += ' ', marked += ' ';
        continue;
      }
      const auto& [lo, up] = letters[pick(rng)];
      lower += lo;
      upper += up;
      marked += lo;
      if (lo.size() == 1 && coin(rng) == 0) marked += utf8(marks[mark(rng)]);
    }
    ASSERT_EQ(normalize_text(upper), normalize_text(lower)) << upper;
    ASSERT_EQ(normalize_text(marked), normalize_text(lower)) << marked;
  }
}

TEST(Stopwords, DefaultListHas25NormalizedEntries) {
  const auto cfg = NormalizationConfig::french_default();
  EXPECT_EQ(cfg.stopwords.size(), 25u);
  for (const auto& w : cfg.stopwords) EXPECT_EQ(normalize_text(w), w);
}

TEST(Stopwords, Membership) {
  const auto cfg = NormalizationConfig::french_default();
  EXPECT_TRUE(is_stopword("de", cfg));
  EXPECT_FALSE(is_stopword("", cfg));
  EXPECT_FALSE(is_stopword("cardiaque", cfg));
  for (auto w : kDefaultStopwords) EXPECT_TRUE(is_stopword(w, cfg)) << w;
}

TEST(Stopwords, FileFormat) {
  std::istringstream in("# comment\nDE\n\n  \nÀ\nl'\n# another\nAvec\n");
  const auto cfg = NormalizationConfig::from_stream(in);
  EXPECT_EQ(cfg.stopwords, (std::set<std::string, std::less<>>{"de", "a", "l", "avec"}));
}

TEST(Stopwords, ShippedFileMatchesBuiltIn) {
  const auto cfg = NormalizationConfig::from_file(DICODER_DATA_DIR "/stopwords.txt");
  EXPECT_EQ(cfg.stopwords, NormalizationConfig::french_default().stopwords);
}

TEST(Stopwords, MissingFileIsAnError) {
  EXPECT_THROW(NormalizationConfig::from_file("/nonexistent/stopwords.txt"), Error);
}

TEST(Tokenize, Examples) {
  const auto cfg = NormalizationConfig::french_default();
  EXPECT_EQ(tokenize("insuffisance cardiaque aigue detresse respiratoire", cfg).tokens,
            (std::vector<std::string>{"insuffisance", "cardiaque", "aigue", "detresse", "respiratoire"}));
  EXPECT_TRUE(tokenize("de avec", cfg).tokens.empty());

  const auto t = tokenize("AVC massif", cfg);
  EXPECT_EQ(t.tokens, (std::vector<std::string>{"avc", "massif"}));
  EXPECT_EQ(t.offsets, (std::vector<Span>{{0, 3}, {4, 10}}));
}

TEST(Tokenize, OffsetsReferToOriginalBytes) {
  const auto cfg = NormalizationConfig::french_default();
  const std::string raw = "Œdème aigu du poumon";
  const auto t = tokenize(raw, cfg);
  ASSERT_EQ(t.tokens, (std::vector<std::string>{"oedeme", "aigu", "poumon"}));
  EXPECT_EQ(raw.substr(t.offsets[0].begin, t.offsets[0].end - t.offsets[0].begin), "Œdème");
  EXPECT_EQ(raw.substr(t.offsets[2].begin, t.offsets[2].end - t.offsets[2].begin), "poumon");
}

TEST(Tokenize, TrailingCombiningMarkBelongsToToken) {
  const auto t = tokenize("cafe\xCC\x81 noir", NormalizationConfig{});
  ASSERT_EQ(t.tokens.size(), 2u);
  EXPECT_EQ(t.offsets[0], (Span{0, 6}));
}

TEST(Tokenize, OffsetInvariantsOnRandomStrings) {
  const auto cfg = NormalizationConfig::french_default();
  std::mt19937_64 rng(99);
  for (int i = 0; i < 2000; ++i) {
    const auto raw = random_unicode(rng, 30);
    const auto t = tokenize(raw, cfg);
    ASSERT_EQ(t.tokens.size(), t.offsets.size());
    std::size_t prev_end = 0;
    for (std::size_t k = 0; k < t.tokens.size(); ++k) {
      const auto [b, e] = t.offsets[k];
      ASSERT_LT(b, e);
      ASSERT_LE(prev_end, b);
      ASSERT_LE(e, raw.size());
      prev_end = e;
      // spans start and end on code point boundaries
      ASSERT_NE(static_cast<unsigned char>(raw[b]) & 0xC0, 0x80u);
      if (e < raw.size()) {
        ASSERT_NE(static_cast<unsigned char>(raw[e]) & 0xC0, 0x80u);
      }
      ASSERT_EQ(normalize_text(raw.substr(b, e - b)), t.tokens[k]);
      ASSERT_FALSE(is_stopword(t.tokens[k], cfg));
    }
  }
}

TEST(Tokenize, JoinRoundTripOnPlainLowercase) {
  const auto cfg = NormalizationConfig::french_default();
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    std::vector<std::string> words;
    const int n = std::uniform_int_distribution<int>(0, 8)(rng);
    for (int k = 0; k < n; ++k) {
      auto w = fixtures::random_word(rng, 4, 10);
      if (!is_stopword(w, cfg)) words.push_back(w);
    }
    const auto s = join_tokens(words);
    ASSERT_EQ(join_tokens(tokenize(s, cfg).tokens), normalize_text(s));
  }
}
