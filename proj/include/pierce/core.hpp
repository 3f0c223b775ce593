#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace pierce {

/// Position of an endpoint in rank space. Two endpoints compare exactly as
/// their ranks do; the solvers never look at raw coordinates.
using Rank = std::int64_t;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct InstanceError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A member interval escapes its domain.
struct ContainmentViolation : InstanceError {
  using InstanceError::InstanceError;
};

/// lo == hi where strict validation requires lo < hi.
struct DegenerateInterval : InstanceError {
  using InstanceError::InstanceError;
};

/// lo > hi.
struct InvertedInterval : InstanceError {
  using InstanceError::InstanceError;
};

struct EmptyInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Geometry in rank space
// ---------------------------------------------------------------------------

/// Closed interval [lo, hi]. Degenerate intervals (lo == hi) are points.
struct Interval {
  Rank lo = 0;
  Rank hi = 0;

  constexpr bool contains(Rank r) const { return lo <= r && r <= hi; }
  constexpr bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  constexpr bool degenerate() const { return lo == hi; }

  friend constexpr bool operator==(const Interval&, const Interval&) = default;
};

/// One interval per axis. A point (x, y) lies in the cross when x is in h
/// or y is in v.
struct Cross {
  Interval h;
  Interval v;

  constexpr bool contains(Rank x, Rank y) const { return h.contains(x) || v.contains(y); }

  friend constexpr bool operator==(const Cross&, const Cross&) = default;
};

struct Point {
  Rank x = 0;
  Rank y = 0;
  friend constexpr bool operator==(const Point&, const Point&) = default;
};

struct CoverageInstance {
  Interval domain;
  std::vector<Interval> intervals;

  friend bool operator==(const CoverageInstance&, const CoverageInstance&) = default;
};

struct PiercingInstance {
  Interval xdomain;
  Interval ydomain;
  std::vector<Cross> crosses;

  friend bool operator==(const PiercingInstance&, const PiercingInstance&) = default;
};

using Instance = std::variant<CoverageInstance, PiercingInstance>;

// ---------------------------------------------------------------------------
// Comparison queries
// ---------------------------------------------------------------------------

enum class Outcome : std::uint8_t { Less = 0, Equal = 1, Greater = 2 };

const char* to_string(Outcome o);

/// Tally of comparison queries for a single solver run. Every comparison a
/// decider makes between endpoint symbols goes through compare().
class QueryCounter {
 public:
  template <class T>
  Outcome compare(const T& x, const T& y) {
    Outcome o = x < y ? Outcome::Less : (y < x ? Outcome::Greater : Outcome::Equal);
    ++histogram_[static_cast<std::size_t>(o)];
    return o;
  }

  template <class T>
  bool less(const T& x, const T& y) {
    return compare(x, y) == Outcome::Less;
  }

  std::uint64_t comparisons() const {
    return histogram_[0] + histogram_[1] + histogram_[2];
  }
  std::uint64_t count(Outcome o) const { return histogram_[static_cast<std::size_t>(o)]; }

  void reset() { histogram_ = {}; }

 private:
  std::array<std::uint64_t, 3> histogram_{};
};

inline Outcome counted_compare(QueryCounter& counter, Rank x, Rank y) {
  return counter.compare(x, y);
}

// ---------------------------------------------------------------------------
// Permutations
// ---------------------------------------------------------------------------

/// A bijection on {1..N}, stored as the sequence (i_1, ..., i_N).
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `order` is a bijection on 1..N.
  explicit Permutation(std::vector<int> order);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(order_.size()); }
  /// i_k for k in 1..N.
  int at(int k) const { return order_.at(static_cast<std::size_t>(k - 1)); }
  std::span<const int> order() const { return order_; }

  /// True when i_k has the parity of k for every k.
  bool preserves_parity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> order_;
};

// ---------------------------------------------------------------------------
// Rank normalization and validation
// ---------------------------------------------------------------------------

struct RankMap {
  std::vector<Rank> ranks;  // ranks[i] is the dense rank of coords[i]
  Rank max_rank = -1;       // K; ranks span 0..K
};

/// Dense ranking: equal inputs share a rank, ranks are 0..K. Throws
/// std::invalid_argument on NaN or infinite input.
RankMap normalize_ranks(std::span<const double> coords);

/// Checks containment, and lo < hi for every member when `strict`. Returns
/// the instance unchanged.
const CoverageInstance& validate(const CoverageInstance& instance, bool strict = false);
const PiercingInstance& validate(const PiercingInstance& instance, bool strict = false);

std::string to_string(const Interval& iv);

}  // namespace pierce
