#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pierce/core.hpp"

namespace pierce {

/// log_6(N!): the query floor for deciding coverage of N intervals.
/// Computed as sum_{k=2..N} ln k / ln 6.
double lb_union(std::int64_t n);

/// 2 log_6(floor(N/2)! / 2), clamped below at 0. N >= 2.
double lb_piercing(std::int64_t n);

/// Same value as lb_union: deciding whether N numbers are all distinct.
double lb_equality(std::int64_t n);

/// Smallest m with 6^m >= N!, by exact big-integer arithmetic. `exact`
/// tells whether 6^m == N!, i.e. whether log_6(N!) is the integer m.
struct ExactLog6 {
  std::uint64_t ceil = 0;
  bool exact = false;
};
ExactLog6 exact_log6_factorial(std::int64_t n);

struct BoundReport {
  std::int64_t n = 0;
  double lb_union = 0;
  double lb_piercing = 0;
  std::string basis;
};
BoundReport bound_report(std::int64_t n);

// ---------------------------------------------------------------------------
// Bench harness
// ---------------------------------------------------------------------------

enum class Family { Chain, Staircase, StaircaseLiteral, Disjoint, RandomCoverage, RandomPiercing };

/// Accepts the canonical names plus "random" for random-piercing. Throws
/// std::invalid_argument on anything else.
Family parse_family(std::string_view name);
std::string_view family_name(Family f);
/// Coverage families are decided by solve_coverage, the rest by solve_piercing.
bool is_coverage_family(Family f);
/// Whether the family's generator accepts size N (staircase-literal: 8 or 9).
bool family_supports(Family f, std::int64_t n);

/// Seeded instance of a family: chain and staircase-literal draw their
/// permutation from the seed, random families their intervals over
/// [0, 2N]. Throws std::invalid_argument when the size is unsupported.
Instance generate_instance(Family f, std::int64_t n, std::uint64_t seed);

struct BenchConfig {
  std::vector<Family> families;
  std::int64_t n_lo = 0;
  std::int64_t n_hi = -1;  // empty range when n_hi < n_lo
  int trials = 1;
  std::uint64_t seed = 1;
  bool timing = false;  // wall_time_ns is 0 unless set
};

struct BenchRecord {
  std::string family;
  std::int64_t n = 0;
  int trial = 0;
  std::uint64_t comparisons = 0;
  std::string verdict;  // covered / uncovered / pierceable / not-pierceable
  double lower_bound = 0;
  std::int64_t wall_time_ns = 0;

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

/// One record per (family, n, trial) in that order, skipping sizes a family
/// does not support. Each trial draws from its own seed derived from
/// (seed, family, n, trial).
std::vector<BenchRecord> run_bench(const BenchConfig& config);

void write_csv(std::ostream& os, const std::vector<BenchRecord>& records);

}  // namespace pierce
