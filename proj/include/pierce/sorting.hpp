#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ranges>
#include <span>
#include <utility>
#include <vector>

#include "pierce/core.hpp"

namespace pierce {

struct SortedOrder {
  std::vector<std::size_t> order;  // input positions, nondecreasing by key
  std::uint64_t comparisons = 0;
};

namespace detail {

// Sorts idx[first, last) by key, ceil/floor halves. The merge walks B forward
// from where the previous element of A stopped, so each comparison places
// one element. Ties go to A, which makes the sort stable.
template <class KeyAt>
void merge_sort_range(std::vector<std::size_t>& idx, std::span<std::size_t> buf,
                      std::size_t first, std::size_t last, const KeyAt& key_at,
                      QueryCounter& counter) {
  const std::size_t n = last - first;
  if (n < 2) return;
  if (n == 2) {
    if (counter.less(key_at(idx[first + 1]), key_at(idx[first]))) std::swap(idx[first], idx[first + 1]);
    return;
  }
  const std::size_t mid = first + (n + 1) / 2;
  merge_sort_range(idx, buf, first, mid, key_at, counter);
  merge_sort_range(idx, buf, mid, last, key_at, counter);

  std::size_t a = first, b = mid, out = first;
  while (a < mid && b < last) {
    if (counter.less(key_at(idx[b]), key_at(idx[a]))) {
      buf[out++] = idx[b++];
    } else {
      buf[out++] = idx[a++];
    }
  }
  while (a < mid) buf[out++] = idx[a++];
  while (b < last) buf[out++] = idx[b++];
  std::copy(buf.begin() + static_cast<std::ptrdiff_t>(first),
            buf.begin() + static_cast<std::ptrdiff_t>(last),
            idx.begin() + static_cast<std::ptrdiff_t>(first));
}

}  // namespace detail

/// Stable comparison-counted merge sort. For N = 2^n the count never exceeds
/// n*N: each of the n levels merges at most N elements with at most one
/// comparison per element placed.
///
/// `proj` maps an element to the key that is compared.
template <std::ranges::random_access_range R, class Proj = std::identity>
SortedOrder merge_sort_counted(const R& items, QueryCounter& counter, Proj proj = {}) {
  const std::size_t n = std::ranges::size(items);
  const std::uint64_t before = counter.comparisons();
  SortedOrder result;
  result.order.resize(n);
  for (std::size_t i = 0; i < n; ++i) result.order[i] = i;
  std::array<std::size_t, 32> small;
  std::vector<std::size_t> large(n > small.size() ? n : 0);
  std::span<std::size_t> buf = n > small.size() ? std::span(large) : std::span(small);
  auto key_at = [&](std::size_t i) -> decltype(auto) {
    return std::invoke(proj, std::ranges::begin(items)[static_cast<std::ptrdiff_t>(i)]);
  };
  detail::merge_sort_range(result.order, buf, 0, n, key_at, counter);
  result.comparisons = counter.comparisons() - before;
  return result;
}

}  // namespace pierce
