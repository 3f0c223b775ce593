#include <gtest/gtest.h>

#include <vector>

#include "pierce/core.hpp"
#include "pierce/random.hpp"

using namespace pierce;

TEST(CountedCompare, ReportsOrderAndCounts) {
  QueryCounter c;
  EXPECT_EQ(counted_compare(c, 3, 5), Outcome::Less);
  EXPECT_EQ(c.comparisons(), 1u);
  EXPECT_EQ(counted_compare(c, 4, 4), Outcome::Equal);
  EXPECT_EQ(c.comparisons(), 2u);
  EXPECT_EQ(counted_compare(c, 7, 2), Outcome::Greater);
  EXPECT_EQ(c.comparisons(), 3u);
  EXPECT_EQ(c.count(Outcome::Less), 1u);
  EXPECT_EQ(c.count(Outcome::Equal), 1u);
  EXPECT_EQ(c.count(Outcome::Greater), 1u);
}

TEST(CountedCompare, NeverMisreportsRandomPairs) {
  Rng rng(7);
  QueryCounter c;
  for (int i = 0; i < 10000; ++i) {
    const Rank x = rng.between(-50, 50), y = rng.between(-50, 50);
    const Outcome expected = x < y ? Outcome::Less : x == y ? Outcome::Equal : Outcome::Greater;
    ASSERT_EQ(counted_compare(c, x, y), expected);
  }
  EXPECT_EQ(c.comparisons(), 10000u);
  EXPECT_EQ(c.count(Outcome::Less) + c.count(Outcome::Equal) + c.count(Outcome::Greater),
            c.comparisons());
}

TEST(NormalizeRanks, DenseRanking) {
  const std::vector<double> a{10.5, 3, 3, 7};
  const RankMap m = normalize_ranks(a);
  EXPECT_EQ(m.ranks, (std::vector<Rank>{2, 0, 0, 1}));
  EXPECT_EQ(m.max_rank, 2);

  const std::vector<double> b{0, 1, 2};
  EXPECT_EQ(normalize_ranks(b).ranks, (std::vector<Rank>{0, 1, 2}));

  const std::vector<double> c{5};
  const RankMap mc = normalize_ranks(c);
  EXPECT_EQ(mc.ranks, (std::vector<Rank>{0}));
  EXPECT_EQ(mc.max_rank, 0);
}

TEST(NormalizeRanks, RejectsNonFinite) {
  const std::vector<double> a{1.0, std::numeric_limits<double>::quiet_NaN()};
  EXPECT_THROW(normalize_ranks(a), std::invalid_argument);
  const std::vector<double> b{std::numeric_limits<double>::infinity()};
  EXPECT_THROW(normalize_ranks(b), std::invalid_argument);
}

TEST(NormalizeRanks, PreservesOrderAndIsIdempotent) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> raw;
    const int n = static_cast<int>(rng.between(1, 40));
    for (int i = 0; i < n; ++i) raw.push_back(static_cast<double>(rng.between(-20, 20)) / 4.0);
    const RankMap m = normalize_ranks(raw);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        ASSERT_EQ(raw[i] < raw[j], m.ranks[i] < m.ranks[j]);
        ASSERT_EQ(raw[i] == raw[j], m.ranks[i] == m.ranks[j]);
      }
    }
    std::vector<double> again(m.ranks.begin(), m.ranks.end());
    EXPECT_EQ(normalize_ranks(again).ranks, m.ranks);
  }
}

TEST(Validate, Coverage) {
  CoverageInstance ok{{0, 5}, {{0, 2}, {1, 4}}};
  EXPECT_NO_THROW(validate(ok));
  EXPECT_EQ(&validate(ok), &ok);

  CoverageInstance escapes{{0, 5}, {{0, 6}}};
  EXPECT_THROW(validate(escapes), ContainmentViolation);

  CoverageInstance point{{0, 5}, {{2, 2}}};
  EXPECT_THROW(validate(point, true), DegenerateInterval);
  EXPECT_NO_THROW(validate(point, false));

  CoverageInstance inverted{{0, 5}, {{3, 2}}};
  EXPECT_THROW(validate(inverted), InvertedInterval);

  CoverageInstance flat_domain{{2, 2}, {}};
  EXPECT_THROW(validate(flat_domain), DegenerateInterval);
}

TEST(Validate, Piercing) {
  PiercingInstance ok{{0, 3}, {0, 3}, {{{0, 1}, {2, 3}}}};
  EXPECT_NO_THROW(validate(ok, true));
  PiercingInstance bad_v{{0, 3}, {0, 3}, {{{0, 1}, {2, 4}}}};
  EXPECT_THROW(validate(bad_v), ContainmentViolation);
  PiercingInstance point{{0, 3}, {0, 3}, {{{1, 1}, {2, 3}}}};
  EXPECT_NO_THROW(validate(point));
  EXPECT_THROW(validate(point, true), DegenerateInterval);
}

TEST(Permutation, Basics) {
  EXPECT_THROW(Permutation({1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 1}), std::invalid_argument);
  const Permutation p({2, 1, 3});
  EXPECT_EQ(p.at(1), 2);
  EXPECT_EQ(p.size(), 3);
  EXPECT_FALSE(p.preserves_parity());
  EXPECT_TRUE(Permutation({3, 2, 1}).preserves_parity());
  EXPECT_TRUE(Permutation::identity(5).preserves_parity());
}

TEST(Rng, ParityPermutationsPreserveParity) {
  Rng rng(3);
  for (int n = 1; n < 12; ++n) {
    EXPECT_TRUE(random_parity_permutation(n, rng).preserves_parity());
  }
}

TEST(Rng, SameSeedSameStream) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) ASSERT_EQ(a.between(0, 1000), b.between(0, 1000));
}
