#include <gtest/gtest.h>

#include <random>
#include <set>

#include "freeaut/error.hpp"
#include "freeaut/whitehead.hpp"
#include "oracle.hpp"

using namespace freeaut;

namespace {

CutAutomorphism cut_of(std::string_view text, int rank) {
  return std::get<CutAutomorphism>(parse_automorphism(text, rank));
}

oracle::Cut to_oracle(const CutAutomorphism& c) {
  oracle::Cut o;
  for (Letter l : c.cut()) o.cut.insert(l.inverted() ? -l.index() : l.index());
  const Letter a = c.multiplier();
  o.a = a.inverted() ? -a.index() : a.index();
  return o;
}

}  // namespace

TEST(Apply, ExampleMovesInRankFour) {
  const auto u = parse_word("x1^2 x2^3 x3^4 x4^5", 4);
  const auto sigma = cut_of("({x2, x2^-1}, x1)", 4);
  EXPECT_EQ(format_word(freeaut::apply(sigma, u)), "x1 x2^3 x1 x3^4 x4^5");

  const auto u7 = parse_word("x1^2 x2^3 x3^2 x4 x3^-1 x4 x3 x4^3", 4);
  const auto tau = cut_of("({x2, x2^-1}, x3^-1)", 4);
  EXPECT_EQ(freeaut::apply(AutChain{tau, tau}, u7),
            parse_word("x1^2 x3^2 x2^3 x4 x3^-1 x4 x3 x4^3", 4));
}

TEST(Apply, EmptyCutIsIdentity) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int rank = 2 + static_cast<int>(rng() % 3);
    const auto w = oracle::to_library(oracle::random_cyclic_word(rng, rank, rng() % 15), rank);
    const Letter a = Letter::make(1 + static_cast<int>(rng() % static_cast<unsigned>(rank)), rng() % 2);
    EXPECT_EQ(freeaut::apply(CutAutomorphism::make(rank, {}, a), w), w);
  }
}

TEST(CutAutomorphism, RejectsMultiplierInCut) {
  const Letter x1 = Letter::make(1);
  std::vector<Letter> cut{x1.inverse()};
  EXPECT_THROW(CutAutomorphism::make(2, cut, x1), DomainError);
  std::vector<Letter> far{Letter::make(3)};
  EXPECT_THROW(CutAutomorphism::make(2, far, x1), RankError);
}

TEST(CutAutomorphism, Degree) {
  EXPECT_EQ(cut_of("({x1}, x2)", 2).degree(), 1);
  EXPECT_EQ(cut_of("({x2, x2^-1}, x1)", 2).degree(), 0);
  EXPECT_EQ(cut_of("({x1, x3}, x2)", 3).degree(), 3);
  EXPECT_THROW(degree(WhiteheadAut{SignedPermutation(2)}), DomainError);
}

TEST(CutAutomorphism, ComplementAndInverse) {
  EXPECT_EQ(cut_of("({x1}, x2)", 2).complement(), cut_of("({x1^-1}, x2^-1)", 2));
  EXPECT_EQ(cut_of("({x2, x2^-1}, x1)", 2).complement(), cut_of("({}, x1^-1)", 2));
  EXPECT_EQ(cut_of("({x1}, x2)", 2).inverse(), cut_of("({x1}, x2^-1)", 2));
  const auto s = cut_of("({x1, x3^-1}, x2)", 3);
  EXPECT_EQ(s.complement().complement(), s);
  EXPECT_EQ(s.inverse().inverse(), s);
  const auto w = parse_word("x1^2 x2^3", 2);
  const auto t = cut_of("({x1}, x2)", 2);
  EXPECT_EQ(freeaut::apply(t.inverse(), freeaut::apply(t, w)), w);
}

TEST(CutAutomorphism, TrivialOnCyclicWords) {
  EXPECT_TRUE(cut_of("({}, x1)", 2).trivial_on_cyclic_words());
  EXPECT_TRUE(cut_of("({x2, x2^-1}, x1)", 2).trivial_on_cyclic_words());
  EXPECT_FALSE(cut_of("({x2}, x1)", 2).trivial_on_cyclic_words());
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_w2(2).size(), 16u);
  EXPECT_EQ(enumerate_w2(3).size(), 96u);
  EXPECT_EQ(enumerate_w2(2, {true, true}).size(), 8u);
  EXPECT_EQ(enumerate_w1(1).size(), 2u);
  EXPECT_EQ(enumerate_w1(2).size(), 8u);
  EXPECT_EQ(enumerate_w1(3).size(), 48u);
}

TEST(Enumerate, DistinctAndOrdered) {
  const auto all = enumerate_w2(3);
  std::set<std::pair<std::uint64_t, int>> seen;
  for (const auto& c : all) seen.insert({c.cut_mask(), c.multiplier().code()});
  EXPECT_EQ(seen.size(), all.size());
  for (std::size_t i = 1; i < all.size(); ++i) {
    EXPECT_LE(all[i - 1].multiplier(), all[i].multiplier());
  }
  const auto perms = enumerate_w1(3);
  EXPECT_EQ(perms.front(), SignedPermutation(3));
  for (std::size_t i = 0; i < perms.size(); ++i) {
    for (std::size_t j = i + 1; j < perms.size(); ++j) EXPECT_FALSE(perms[i] == perms[j]);
  }
}

TEST(SignedPermutation, ComposeAndInverse) {
  const auto ps = enumerate_w1(3);
  const auto w = parse_word("x1^2 x2 x3^-1 x2", 3);
  for (std::size_t i = 0; i < ps.size(); i += 5) {
    for (std::size_t j = 0; j < ps.size(); j += 7) {
      EXPECT_EQ(freeaut::apply(ps[i].compose(ps[j]), w),
                freeaut::apply(ps[i], freeaut::apply(ps[j], w)));
    }
    EXPECT_EQ(freeaut::apply(ps[i].inverse(), freeaut::apply(ps[i], w)), w);
  }
  EXPECT_THROW(SignedPermutation::from_images(2, {Letter::make(1), Letter::make(1)}), DomainError);
}

TEST(Conjugate, MatchesActionOfPermutedCut) {
  const auto ps = enumerate_w1(3);
  const auto cuts = enumerate_w2(3);
  const auto w = parse_word("x1^2 x2^3 x1 x3^-2 x2", 3);
  for (std::size_t i = 0; i < ps.size(); i += 3) {
    for (std::size_t j = 0; j < cuts.size(); j += 5) {
      // p σ p^-1 (p w) = p (σ w)
      const auto lhs = freeaut::apply(conjugate(ps[i], cuts[j]), freeaut::apply(ps[i], w));
      const auto rhs = freeaut::apply(ps[i], freeaut::apply(cuts[j], w));
      EXPECT_EQ(lhs, rhs);
    }
  }
}

TEST(Apply, MatchesOracleSubstitution) {
  std::mt19937_64 rng(17);
  for (int rank = 2; rank <= 4; ++rank) {
    const auto cuts = enumerate_w2(rank);
    for (int trial = 0; trial < 300; ++trial) {
      const auto raw = oracle::random_cyclic_word(rng, rank, 1 + rng() % 18);
      const auto w = oracle::to_library(raw, rank);
      const auto& c = cuts[rng() % cuts.size()];
      EXPECT_EQ(oracle::from_library(freeaut::apply(c, w)), oracle::apply(to_oracle(c), raw))
          << to_string(c) << " on " << format_word(w);
    }
  }
}

TEST(Notation, RoundTrip) {
  for (const auto& c : enumerate_w2(3)) {
    EXPECT_EQ(cut_of(to_string(c), 3), c);
  }
  for (const auto& p : enumerate_w1(3)) {
    EXPECT_EQ(std::get<SignedPermutation>(parse_automorphism(to_string(p), 3)), p);
  }
  EXPECT_EQ(to_string(cut_of("({x2^-1,x1}, x3)", 3)), "({x1, x2^-1}, x3)");
  EXPECT_EQ(std::get<SignedPermutation>(parse_automorphism("perm(1->2+, 2->1-)", 2)),
            std::get<SignedPermutation>(parse_automorphism("perm(1→2+, 2→1-)", 2)));
  EXPECT_THROW(parse_automorphism("({x1}, x1)", 2), DomainError);
  EXPECT_THROW(parse_automorphism("({x1}", 2), ParseError);
  EXPECT_THROW(parse_automorphism("({x1}, x5)", 2), RankError);
}

TEST(LengthChange, AgreesWithSubstitution) {
  std::mt19937_64 rng(23);
  AdjacencyProfile profile;
  for (int rank = 2; rank <= 4; ++rank) {
    const auto cuts = enumerate_w2(rank);
    for (int trial = 0; trial < 400; ++trial) {
      const auto w =
          oracle::to_library(oracle::random_cyclic_word(rng, rank, 1 + rng() % 20), rank);
      profile.assign(w.letters());
      const auto& c = cuts[rng() % cuts.size()];
      const long expected = static_cast<long>(freeaut::apply(c, w).length()) -
                            static_cast<long>(w.length());
      EXPECT_EQ(length_change(c, profile), expected) << to_string(c) << " on " << format_word(w);
    }
  }
}
