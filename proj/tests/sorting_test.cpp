#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "pierce/random.hpp"
#include "pierce/sorting.hpp"

using namespace pierce;

namespace {

// Stable insertion sort on positions: the reference ordering.
std::vector<std::size_t> insertion_order(const std::vector<int>& keys) {
  std::vector<std::size_t> order(keys.size());
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = 1; i < order.size(); ++i) {
    for (std::size_t j = i; j > 0 && keys[order[j]] < keys[order[j - 1]]; --j) {
      std::swap(order[j], order[j - 1]);
    }
  }
  return order;
}

}  // namespace

TEST(MergeSortCounted, SmallExamples) {
  QueryCounter c;
  const std::vector<int> two{2, 1};
  const SortedOrder s = merge_sort_counted(two, c);
  EXPECT_EQ(s.order, (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(s.comparisons, 1u);

  QueryCounter c4;
  const std::vector<int> four{1, 2, 3, 4};
  const SortedOrder s4 = merge_sort_counted(four, c4);
  EXPECT_EQ(s4.order, (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_LE(s4.comparisons, 8u);
  EXPECT_EQ(c4.comparisons(), s4.comparisons);

  QueryCounter c0;
  EXPECT_TRUE(merge_sort_counted(std::vector<int>{}, c0).order.empty());
  EXPECT_EQ(c0.comparisons(), 0u);
}

TEST(MergeSortCounted, Random1024WithinBudget) {
  Rng rng(5);
  std::vector<int> keys(1024);
  for (int& k : keys) k = static_cast<int>(rng.between(0, 1 << 20));
  QueryCounter c;
  const SortedOrder s = merge_sort_counted(keys, c);
  for (std::size_t i = 1; i < s.order.size(); ++i) ASSERT_LE(keys[s.order[i - 1]], keys[s.order[i]]);
  EXPECT_LE(s.comparisons, 10u * 1024u);
}

TEST(MergeSortCounted, MatchesInsertionSortExhaustively) {
  // Every sequence over {0..n-1} of length n <= 6 (duplicates included),
  // plus every permutation of length 7 and 8.
  for (int n = 0; n <= 6; ++n) {
    std::vector<int> keys(static_cast<std::size_t>(n), 0);
    for (;;) {
      QueryCounter c;
      ASSERT_EQ(merge_sort_counted(keys, c).order, insertion_order(keys));
      int i = 0;
      while (i < n && ++keys[static_cast<std::size_t>(i)] == n) keys[static_cast<std::size_t>(i++)] = 0;
      if (i == n) break;
    }
  }
  for (int n : {7, 8}) {
    std::vector<int> keys(static_cast<std::size_t>(n));
    std::iota(keys.begin(), keys.end(), 0);
    do {
      QueryCounter c;
      ASSERT_EQ(merge_sort_counted(keys, c).order, insertion_order(keys));
    } while (std::next_permutation(keys.begin(), keys.end()));
  }
}

TEST(MergeSortCounted, MatchesInsertionSortRandomLarger) {
  Rng rng(17);
  for (int t = 0; t < 1000; ++t) {
    std::vector<int> keys(static_cast<std::size_t>(rng.between(9, 300)));
    for (int& k : keys) k = static_cast<int>(rng.between(0, 50));
    QueryCounter c;
    ASSERT_EQ(merge_sort_counted(keys, c).order, insertion_order(keys));
  }
}

TEST(MergeSortCounted, StableOnTies) {
  struct Item {
    int key;
    int tag;
  };
  const std::vector<Item> items{{2, 0}, {1, 1}, {2, 2}, {1, 3}, {2, 4}};
  QueryCounter c;
  const SortedOrder s = merge_sort_counted(items, c, &Item::key);
  EXPECT_EQ(s.order, (std::vector<std::size_t>{1, 3, 0, 2, 4}));
}

TEST(MergeSortCounted, PowerOfTwoBudget) {
  Rng rng(23);
  for (int n = 1; n <= 16; ++n) {
    const std::size_t size = std::size_t{1} << n;
    std::vector<int> keys(size);
    for (int& k : keys) k = static_cast<int>(rng.between(0, 1 << 30));
    QueryCounter c;
    EXPECT_LE(merge_sort_counted(keys, c).comparisons, static_cast<std::uint64_t>(n) * size)
        << "n=" << n;
  }
}
