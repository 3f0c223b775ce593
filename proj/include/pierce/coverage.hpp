#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pierce/core.hpp"

namespace pierce {

class Rng;

/// Open interval (lo, hi), lo < hi, inside the domain and disjoint from
/// every member interval.
struct Gap {
  Rank lo = 0;
  Rank hi = 0;
  friend constexpr bool operator==(const Gap&, const Gap&) = default;
};

struct CoverageVerdict {
  bool covered = false;
  std::optional<Gap> gap;  // leftmost maximal uncovered open interval
  std::uint64_t queries_used = 0;
};

/// Decides whether the closed intervals jointly cover the closed domain.
/// Sorts by left endpoint, then extends the covered reach greedily.
/// Touching intervals ([0,1] and [1,2]) count as covering [0,2].
///
/// A degenerate domain is covered iff some interval contains its point; in
/// that case no gap is reported when uncovered.
CoverageVerdict solve_coverage(const CoverageInstance& instance, QueryCounter& counter);
CoverageVerdict solve_coverage(const CoverageInstance& instance);

/// Reference answer by direct scan of every elementary cell (each endpoint
/// value and each open stretch between consecutive values). O(N^2).
CoverageVerdict oracle_coverage(const CoverageInstance& instance);

/// True when the open gap lies in the domain and meets no interval.
bool gap_is_sound(const CoverageInstance& instance, const Gap& gap);

/// [max lo, min hi], or nothing when that is empty. Uses 2(N-1) comparisons
/// to find the extremes and one more for the emptiness test.
std::optional<Interval> intersect_1d(std::span<const Interval> intervals, QueryCounter& counter);

/// Overlapping chain realizing the permutation: interval i_k overlaps
/// i_{k-1} and i_{k+1} only. Ranks 0..2N-1; intervals[i-1] is R_i.
CoverageInstance gen_chain(const Permutation& p);

/// Swaps a_{i_k} with b_{i_{k-1}} in a chain from gen_chain(p), which opens
/// a gap between links k-1 and k. k in 2..N.
CoverageInstance flip_link(const CoverageInstance& chain, const Permutation& p, int k);

/// All-distinct test for values in 0..N-1 via unit intervals [m, m+1] over
/// [0, N]: they cover iff no value repeats.
bool check_equality_by_coverage(std::span<const Rank> values, QueryCounter& counter);
bool check_equality_by_coverage(std::span<const Rank> values);

/// n random intervals (degenerate ones included) over [0, max_rank].
CoverageInstance random_coverage(int n, Rank max_rank, Rng& rng);

}  // namespace pierce
