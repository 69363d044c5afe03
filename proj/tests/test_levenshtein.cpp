#include <gtest/gtest.h>

#include <random>
#include <string>

#include "dicoder/levenshtein.hpp"
#include "oracles.hpp"

using namespace dicoder;

TEST(Levenshtein, Examples) {
  EXPECT_EQ(levenshtein_distance("cardiaqu", "cardiaque"), 1u);
  EXPECT_EQ(levenshtein_distance("x", "x"), 0u);
  EXPECT_EQ(levenshtein_distance("meningoencephalite", "meningoencephalite"), 0u);
  EXPECT_EQ(levenshtein_distance("meningoencephalite", "meningo encephalite"), 1u);
  EXPECT_EQ(levenshtein_distance("", "abc"), 3u);
  EXPECT_EQ(levenshtein_distance("kitten", "sitting"), 3u);
}

TEST(Levenshtein, CountsCodePointsNotBytes) {
  EXPECT_EQ(levenshtein_distance("é", "e"), 1u);
  EXPECT_EQ(levenshtein_distance("αβγ", "αγ"), 1u);
  EXPECT_EQ(bounded_levenshtein("ωmega", "omega", 1), 1u);
}

TEST(Levenshtein, BoundedReportsOverflowAsMaxPlusOne) {
  EXPECT_EQ(bounded_levenshtein("abcdef", "azcdef", 1), 1u);
  EXPECT_EQ(bounded_levenshtein("abcdef", "azzdef", 1), 2u);
  EXPECT_EQ(bounded_levenshtein("abc", "abcdef", 2), 3u);
  EXPECT_EQ(bounded_levenshtein("", "", 0), 0u);
  EXPECT_EQ(bounded_levenshtein("a", "", 0), 1u);
}

TEST(Levenshtein, MatchesRecursiveOracle) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 3000; ++i) {
    const int alphabet = std::uniform_int_distribution<int>(2, 26)(rng);
    const auto a = fixtures::random_word(rng, 0, 30, alphabet);
    const auto b = fixtures::random_word(rng, 0, 30, alphabet);
    const std::size_t expected = oracle::levenshtein(std::u32string(a.begin(), a.end()),
                                                     std::u32string(b.begin(), b.end()));
    ASSERT_EQ(levenshtein_distance(a, b), expected) << a << " / " << b;
    ASSERT_EQ(levenshtein_distance(b, a), expected);
    for (std::size_t k : {0u, 1u, 2u, 5u}) {
      ASSERT_EQ(bounded_levenshtein(a, b, k), std::min(expected, k + 1)) << a << " / " << b << " k=" << k;
    }
  }
}

TEST(Levenshtein, TriangleInequality) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const auto a = fixtures::random_word(rng, 0, 12, 4);
    const auto b = fixtures::random_word(rng, 0, 12, 4);
    const auto c = fixtures::random_word(rng, 0, 12, 4);
    ASSERT_LE(levenshtein_distance(a, c), levenshtein_distance(a, b) + levenshtein_distance(b, c));
    ASSERT_EQ(levenshtein_distance(a, b) == 0, a == b);
  }
}

TEST(EditDistance, WorksOnTokenSequences) {
  const std::vector<std::string> a{"insuffisance", "cardiaque"};
  const std::vector<std::string> b{"insuffisance", "renale", "cardiaque"};
  EXPECT_EQ(edit_distance(a, b), 1u);
  EXPECT_EQ(bounded_edit_distance(a, b, 0), 1u);
}
