#include "pierce/coverage.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "pierce/random.hpp"
#include "pierce/sorting.hpp"

namespace pierce {

CoverageVerdict solve_coverage(const CoverageInstance& instance, QueryCounter& counter) {
  const std::uint64_t before = counter.comparisons();
  const Interval& domain = instance.domain;
  const auto& ivs = instance.intervals;
  const SortedOrder sorted = merge_sort_counted(ivs, counter, &Interval::lo);

  CoverageVerdict verdict;
  // Every point of [domain.lo, reach] is covered, except domain.lo itself
  // before any interval has been taken.
  Rank reach = domain.lo;
  bool started = false;
  for (std::size_t i : sorted.order) {
    const Interval& iv = ivs[i];
    if (counter.compare(iv.lo, reach) == Outcome::Greater) {
      verdict.gap = Gap{reach, iv.lo};
      break;
    }
    started = true;
    if (counter.compare(iv.hi, reach) == Outcome::Greater) reach = iv.hi;
  }
  if (!verdict.gap) {
    if (!ivs.empty() && counter.less(reach, domain.hi)) {
      verdict.gap = Gap{reach, domain.hi};
    } else if (ivs.empty() && domain.lo < domain.hi) {
      verdict.gap = Gap{domain.lo, domain.hi};
    }
  }
  verdict.covered = started && !verdict.gap;
  verdict.queries_used = counter.comparisons() - before;
  return verdict;
}

CoverageVerdict solve_coverage(const CoverageInstance& instance) {
  QueryCounter counter;
  return solve_coverage(instance, counter);
}

namespace {

// Cells of a narrow domain as bits: point r at bit 2(r - lo), the open
// stretch (r, r+1) at bit 2(r - lo) + 1.
CoverageVerdict paint_narrow(const CoverageInstance& instance) {
  const Rank lo = instance.domain.lo;
  const int cells = static_cast<int>(2 * (instance.domain.hi - lo) + 1);
  const std::uint64_t full = cells == 64 ? ~0ULL : (1ULL << cells) - 1;
  std::uint64_t painted = 0;
  for (const Interval& iv : instance.intervals) {
    const int first = static_cast<int>(2 * (iv.lo - lo));
    const int last = static_cast<int>(2 * (iv.hi - lo));
    painted |= ((last == 63 ? ~0ULL : (1ULL << (last + 1)) - 1) >> first) << first;
  }
  CoverageVerdict verdict;
  const std::uint64_t holes = ~painted & full;
  verdict.covered = holes == 0;
  // Leftmost unpainted stretch, grown across unpainted points and stretches.
  constexpr std::uint64_t kStretches = 0xAAAAAAAAAAAAAAAAULL;
  if (const std::uint64_t open = holes & kStretches) {
    int bit = std::countr_zero(open);
    const Rank gap_lo = lo + bit / 2;
    while (bit + 2 < cells && (holes >> (bit + 1) & 1) && (holes >> (bit + 2) & 1)) bit += 2;
    verdict.gap = Gap{gap_lo, lo + bit / 2 + 1};
  }
  return verdict;
}

}  // namespace

CoverageVerdict oracle_coverage(const CoverageInstance& instance) {
  if (instance.domain.hi - instance.domain.lo <= 31) return paint_narrow(instance);

  std::vector<Rank> values{instance.domain.lo, instance.domain.hi};
  for (const Interval& iv : instance.intervals) {
    values.push_back(iv.lo);
    values.push_back(iv.hi);
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  const auto first = std::lower_bound(values.begin(), values.end(), instance.domain.lo);
  const auto last = std::upper_bound(values.begin(), values.end(), instance.domain.hi);
  const std::vector<Rank> dom(first, last);

  // Same cell layout as paint_narrow, over the distinct values instead.
  const std::size_t cells = 2 * dom.size() - 1;
  std::vector<char> painted(cells, 0);
  auto cell_of = [&](Rank v) {
    return 2 * static_cast<std::size_t>(std::lower_bound(dom.begin(), dom.end(), v) - dom.begin());
  };
  for (const Interval& iv : instance.intervals) {
    std::fill(painted.begin() + static_cast<std::ptrdiff_t>(cell_of(iv.lo)),
              painted.begin() + static_cast<std::ptrdiff_t>(cell_of(iv.hi)) + 1, 1);
  }

  CoverageVerdict verdict;
  verdict.covered = std::all_of(painted.begin(), painted.end(), [](char c) { return c != 0; });
  for (std::size_t j = 1; j < cells; j += 2) {
    if (painted[j]) continue;
    std::size_t end = j;
    while (end + 2 < cells && !painted[end + 1] && !painted[end + 2]) end += 2;
    verdict.gap = Gap{dom[j / 2], dom[end / 2 + 1]};
    break;
  }
  return verdict;
}

bool gap_is_sound(const CoverageInstance& instance, const Gap& gap) {
  if (!(gap.lo < gap.hi) || gap.lo < instance.domain.lo || gap.hi > instance.domain.hi) {
    return false;
  }
  return std::none_of(instance.intervals.begin(), instance.intervals.end(),
                      [&](const Interval& iv) { return iv.lo < gap.hi && gap.lo < iv.hi; });
}

std::optional<Interval> intersect_1d(std::span<const Interval> intervals, QueryCounter& counter) {
  if (intervals.empty()) throw EmptyInput("intersect_1d needs at least one interval");
  Rank max_lo = intervals.front().lo;
  Rank min_hi = intervals.front().hi;
  for (const Interval& iv : intervals.subspan(1)) {
    if (counter.less(max_lo, iv.lo)) max_lo = iv.lo;
    if (counter.less(iv.hi, min_hi)) min_hi = iv.hi;
  }
  if (counter.compare(max_lo, min_hi) == Outcome::Greater) return std::nullopt;
  return Interval{max_lo, min_hi};
}

namespace {

// Ranks of the chain: a_{i_1} = 0, a_{i_k} = 2k-3 (k >= 2),
// b_{i_k} = 2k (k < N), b_{i_N} = 2N-1.
Rank chain_lo(int k) { return k == 1 ? 0 : 2 * k - 3; }
Rank chain_hi(int k, int n) { return k == n ? 2 * n - 1 : 2 * k; }

}  // namespace

CoverageInstance gen_chain(const Permutation& p) {
  const int n = p.size();
  if (n < 2) throw std::invalid_argument("chain needs N >= 2");
  CoverageInstance inst;
  inst.domain = {0, 2 * static_cast<Rank>(n) - 1};
  inst.intervals.resize(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    inst.intervals[static_cast<std::size_t>(p.at(k) - 1)] = {chain_lo(k), chain_hi(k, n)};
  }
  return inst;
}

CoverageInstance flip_link(const CoverageInstance& chain, const Permutation& p, int k) {
  const int n = p.size();
  if (k < 2 || k > n) {
    throw std::out_of_range("flip position " + std::to_string(k) + " outside 2.." +
                            std::to_string(n));
  }
  if (chain.intervals.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("chain and permutation sizes differ");
  }
  CoverageInstance flipped = chain;
  Rank& a = flipped.intervals[static_cast<std::size_t>(p.at(k) - 1)].lo;
  Rank& b = flipped.intervals[static_cast<std::size_t>(p.at(k - 1) - 1)].hi;
  if (a != chain_lo(k) || b != chain_hi(k - 1, n)) {
    throw std::invalid_argument("instance is not the chain of this permutation");
  }
  std::swap(a, b);
  return flipped;
}

bool check_equality_by_coverage(std::span<const Rank> values, QueryCounter& counter) {
  const Rank n = static_cast<Rank>(values.size());
  CoverageInstance inst;
  inst.domain = {0, n};
  inst.intervals.reserve(values.size());
  for (Rank m : values) {
    if (m < 0 || m >= n) {
      throw std::out_of_range("value " + std::to_string(m) + " outside 0.." +
                              std::to_string(n - 1));
    }
    inst.intervals.push_back({m, m + 1});
  }
  return solve_coverage(inst, counter).covered;
}

bool check_equality_by_coverage(std::span<const Rank> values) {
  QueryCounter counter;
  return check_equality_by_coverage(values, counter);
}

CoverageInstance random_coverage(int n, Rank max_rank, Rng& rng) {
  CoverageInstance inst;
  inst.domain = {0, std::max<Rank>(max_rank, 1)};
  inst.intervals.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) inst.intervals.push_back(rng.interval_in(inst.domain));
  return inst;
}

}  // namespace pierce
