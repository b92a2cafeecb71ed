#include <gtest/gtest.h>

#include <random>

#include "freeaut/cyclic_word.hpp"
#include "freeaut/error.hpp"
#include "oracle.hpp"

using namespace freeaut;

namespace {

std::string canon(std::string_view text, int rank) { return format_word(parse_word(text, rank)); }

}  // namespace

TEST(Parse, LengthsAndCancellation) {
  EXPECT_EQ(parse_word("x1^2 x2^3", 2).length(), 5u);
  EXPECT_TRUE(parse_word("x1 x1^-1", 2).empty());
  EXPECT_EQ(canon("x2 x3^-1 x2^-1", 3), "x3^-1");
  EXPECT_EQ(parse_word("x1*x2^-2", 2).length(), 3u);
  EXPECT_TRUE(parse_word("", 3).empty());
  EXPECT_TRUE(parse_word("  ", 3).empty());
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_word("x1 x", 2), ParseError);
  EXPECT_THROW(parse_word("y1", 2), ParseError);
  EXPECT_THROW(parse_word("x1^", 2), ParseError);
  EXPECT_THROW(parse_word("x3", 2), RankError);
  EXPECT_THROW(parse_word("x0", 2), ParseError);
  EXPECT_THROW(parse_word("x1^0", 2), ParseError);
  EXPECT_THROW(parse_word("x1", 0), RankError);
  try {
    parse_word("x1 x2 z", 2);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
}

TEST(Format, CollapsesExponentsInLeastRotation) {
  EXPECT_EQ(format_word(CyclicWord(2)), "");
  EXPECT_EQ(canon("x1 x1 x2", 2), "x1^2 x2");
  EXPECT_EQ(canon("x2^3 x1^2", 2), "x1^2 x2^3");
  EXPECT_EQ(canon("x2 x1", 2), "x1 x2");
  EXPECT_EQ(canon("x3", 3), "x3");
  EXPECT_EQ(canon("x2^-1 x1^-1", 2), "x1^-1 x2^-1");
}

TEST(CyclicReduce, Examples) {
  const Letter x1 = Letter::make(1), x2 = Letter::make(2);
  std::vector<Letter> a{x1, x2, x2.inverse(), x1};
  EXPECT_EQ(format_word(cyclic_reduce(a, 2)), "x1^2");
  std::vector<Letter> b{x1, x2, x1.inverse()};
  EXPECT_EQ(format_word(cyclic_reduce(b, 2)), "x2");
  std::vector<Letter> c{x1, x1.inverse()};
  EXPECT_TRUE(cyclic_reduce(c, 2).empty());
}

TEST(CanonicalForm, RejectsUnreduced) {
  const Letter x1 = Letter::make(1);
  std::vector<Letter> w{x1, x1.inverse()};
  EXPECT_THROW(canonical_form(w, 1), DomainError);
  std::vector<Letter> wrap{x1, Letter::make(2), x1.inverse()};
  EXPECT_THROW(canonical_form(wrap, 2), DomainError);
}

TEST(CanonicalForm, RotationsAgree) {
  const auto base = parse_word("x1 x2 x1^-1 x2^-1", 2);
  std::vector<Letter> ls(base.letters().begin(), base.letters().end());
  for (std::size_t s = 0; s < ls.size(); ++s) {
    std::rotate(ls.begin(), ls.begin() + 1, ls.end());
    EXPECT_EQ(canonical_form(ls, 2), base);
  }
}

TEST(LetterCounts, Examples) {
  EXPECT_EQ(letter_counts(parse_word("x1^2 x2^3 x3^4 x4^5", 4)),
            (LetterCounts{2, 3, 4, 5}));
  EXPECT_EQ(letter_counts(parse_word("x1^2 x2^2 x3 x2^-1 x3 x2 x3^3", 3)),
            (LetterCounts{2, 4, 5}));
  EXPECT_EQ(letter_counts(CyclicWord(3)), (LetterCounts{0, 0, 0}));
}

TEST(CyclicWord, OrderIsRankThenLetters) {
  EXPECT_LT(parse_word("x1", 2), parse_word("x1^-1", 2));
  EXPECT_LT(parse_word("x2", 2), parse_word("x1", 3));
  EXPECT_EQ(parse_word("x1 x2", 2).inverse(), parse_word("x2^-1 x1^-1", 2));
}

TEST(CyclicWord, MatchesOracleOnRandomWords) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const int rank = 1 + static_cast<int>(rng() % 4);
    oracle::Word raw;
    const std::size_t len = rng() % 16;
    for (std::size_t i = 0; i < len; ++i) {
      const int g = 1 + static_cast<int>(rng() % static_cast<unsigned>(rank));
      raw.push_back(rng() % 2 ? g : -g);
    }
    std::vector<Letter> ls;
    for (int x : raw) ls.push_back(Letter::make(std::abs(x), x < 0));
    const auto w = cyclic_reduce(ls, rank);
    EXPECT_EQ(oracle::from_library(w), oracle::canonical(raw));
    EXPECT_TRUE(is_cyclically_reduced(w.letters()));
    // least_rotation on an arbitrary rotation recovers the stored form
    std::vector<Letter> rot(w.letters().begin(), w.letters().end());
    if (!rot.empty()) std::rotate(rot.begin(), rot.begin() + static_cast<long>(rng() % rot.size()), rot.end());
    canonicalize_in_place(rot);
    EXPECT_TRUE(std::equal(rot.begin(), rot.end(), w.letters().begin(), w.letters().end()));
  }
}

TEST(CyclicWord, FormatParseRoundTrip) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    const int rank = 1 + static_cast<int>(rng() % 4);
    const auto w = oracle::to_library(oracle::random_cyclic_word(rng, rank, rng() % 21), rank);
    EXPECT_EQ(parse_word(format_word(w), rank), w);
  }
}

TEST(CyclicWord, HashAgreesWithEquality) {
  CyclicWordHash h;
  EXPECT_EQ(h(parse_word("x2 x1", 2)), h(parse_word("x1 x2", 2)));
}
