#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "pierce/core.hpp"

namespace pierce {

class Rng;

// ---------------------------------------------------------------------------
// Corner boxes
// ---------------------------------------------------------------------------

enum class Corner : std::uint8_t { NW, NE, SW, SE };

const char* to_string(Corner c);

/// One side of a corner box: [lo, hi] with either end possibly open.
struct BoxSide {
  Rank lo = 0;
  Rank hi = 0;
  bool open_lo = false;
  bool open_hi = false;

  bool empty() const { return (open_lo || open_hi) ? !(lo < hi) : lo > hi; }
  bool contains(double t) const {
    const double l = static_cast<double>(lo), h = static_cast<double>(hi);
    return (open_lo ? l < t : l <= t) && (open_hi ? t < h : t <= h);
  }
};

/// Part of the complement of a cross in one quadrant around its hub:
///   NW = [a0,a) x (d,d0]   NE = (b,b0] x (d,d0]
///   SW = [a0,a) x [c0,c)   SE = (b,b0] x [c0,c)
struct CornerBox {
  Corner kind = Corner::NW;
  BoxSide x;
  BoxSide y;

  bool contains(double px, double py) const { return x.contains(px) && y.contains(py); }
};

/// The nonempty corner boxes of `cross`; their union is R_0 minus the cross.
std::vector<CornerBox> corner_boxes(const Cross& cross, const Interval& xdomain,
                                    const Interval& ydomain);

// ---------------------------------------------------------------------------
// Envelopes
// ---------------------------------------------------------------------------

inline constexpr Rank kNoUpperBound = std::numeric_limits<Rank>::max();
inline constexpr Rank kNoLowerBound = std::numeric_limits<Rank>::min();

/// Piecewise-constant function on the integer ranks of the x-domain.
/// Piece j covers [breakpoints[j], breakpoints[j+1] - 1]; the last piece
/// runs to the end of the domain. Values may be kNoUpperBound or
/// kNoLowerBound where no cross constrains y.
struct StepFunction {
  std::vector<Rank> breakpoints;  // strictly ascending, front() = a0
  std::vector<Rank> values;

  std::size_t pieces() const { return values.size(); }
  /// Value at x >= breakpoints.front().
  Rank operator()(Rank x) const;
  bool nondecreasing() const;
  bool nonincreasing() const;
};

/// Lower and upper boundaries of the corner-box unions, as functions of x:
///   f_nw(x) = min{d_i : a_i > x}   f_ne(x) = min{d_i : b_i < x}
///   g_sw(x) = max{c_i : a_i > x}   g_se(x) = max{c_i : b_i < x}
struct Envelopes {
  StepFunction f_nw;  // nondecreasing
  StepFunction f_ne;  // nonincreasing
  StepFunction g_sw;  // nonincreasing
  StepFunction g_se;  // nondecreasing
};

/// Sorts the crosses by a_i and by b_i, then takes running min/max of d_i and
/// c_i. O(N log N) comparisons.
Envelopes build_envelopes(const PiercingInstance& instance, QueryCounter& counter);
Envelopes build_envelopes(const PiercingInstance& instance);

// ---------------------------------------------------------------------------
// Deciders
// ---------------------------------------------------------------------------

struct PiercingVerdict {
  bool pierceable = false;
  std::optional<Point> witness;  // lies in every cross
  std::uint64_t queries_used = 0;
};

/// Decides whether all crosses share a point. Builds the four envelopes and
/// walks their pieces left to right; at each x the feasible y range is
/// [max(c0, g_sw, g_se), min(d0, f_nw, f_ne)]. The witness is the leftmost
/// feasible x with the lowest feasible y there, and is re-checked against
/// every cross before returning.
PiercingVerdict solve_piercing(const PiercingInstance& instance, QueryCounter& counter);
PiercingVerdict solve_piercing(const PiercingInstance& instance);

/// Tries every (x, y) with x among the x-endpoints and y among the
/// y-endpoints. Returns the lexicographically smallest piercing point.
PiercingVerdict oracle_piercing(const PiercingInstance& instance);

/// Every endpoint grid point that lies in all crosses.
std::vector<Point> piercing_grid_points(const PiercingInstance& instance);

bool witness_is_sound(const PiercingInstance& instance, const Point& p);

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

struct MinimalityReport {
  bool full_family_pierceable = false;
  std::vector<bool> each_deletion_pierceable;

  /// Empty intersection, but every leave-one-out subfamily pierceable.
  bool minimal_non_pierceable() const;
};

/// Runs solve_piercing on the family and on each leave-one-out subfamily.
MinimalityReport check_minimality(const PiercingInstance& instance);

/// N crosses with empty intersection whose proper subfamilies all have a
/// common point.
///   N = 3: the three diagonal point crosses over [0,2]^2.
///   N = 4: the four quadrant crosses over [0,3]^2.
///   N >= 5: a ladder over [0,N+2]^2 of an SW cap, alternating NW / SE
///   steps, and an NE cap placed before the last step.
/// The result is checked against the grid oracle for N <= 14 and via
/// check_minimality beyond; std::logic_error if the check fails.
PiercingInstance gen_staircase_minimal(int n);

/// The staircase preorders for N = 8 or 9 transcribed verbatim into rank
/// space, equalities included. Under closed semantics this family is NOT
/// empty: the corners (a0, c0) and (b0, c_{i_7}) and above stay pierceable.
PiercingInstance gen_staircase_literal(int n, const Permutation& p);

/// N point crosses ([k,k],[k,k]) on the diagonal of [0,N-1]^2.
PiercingInstance gen_disjoint(int n);

/// n random crosses over [0, max_rank]^2.
PiercingInstance random_piercing(int n, Rank max_rank, Rng& rng);

}  // namespace pierce
