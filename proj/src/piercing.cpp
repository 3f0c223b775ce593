#include "pierce/piercing.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "pierce/random.hpp"
#include "pierce/sorting.hpp"

namespace pierce {

const char* to_string(Corner c) {
  switch (c) {
    case Corner::NW: return "NW";
    case Corner::NE: return "NE";
    case Corner::SW: return "SW";
    case Corner::SE: return "SE";
  }
  return "?";
}

std::vector<CornerBox> corner_boxes(const Cross& cross, const Interval& xdomain,
                                    const Interval& ydomain) {
  const BoxSide west{xdomain.lo, cross.h.lo, false, true};
  const BoxSide east{cross.h.hi, xdomain.hi, true, false};
  const BoxSide south{ydomain.lo, cross.v.lo, false, true};
  const BoxSide north{cross.v.hi, ydomain.hi, true, false};

  std::vector<CornerBox> boxes;
  for (const CornerBox& box : {CornerBox{Corner::NW, west, north}, CornerBox{Corner::NE, east, north},
                               CornerBox{Corner::SW, west, south}, CornerBox{Corner::SE, east, south}}) {
    if (!box.x.empty() && !box.y.empty()) boxes.push_back(box);
  }
  return boxes;
}

// ---------------------------------------------------------------------------
// Step functions
// ---------------------------------------------------------------------------

Rank StepFunction::operator()(Rank x) const {
  auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), x);
  if (it == breakpoints.begin()) throw std::out_of_range("x left of the domain");
  return values[static_cast<std::size_t>(it - breakpoints.begin()) - 1];
}

bool StepFunction::nondecreasing() const {
  return std::is_sorted(values.begin(), values.end());
}

bool StepFunction::nonincreasing() const {
  return std::is_sorted(values.begin(), values.end(), std::greater<>{});
}

namespace {

enum class Fold { Min, Max };

// Combines a running extreme with a new y-value. The sentinel side of the
// running value needs no query.
Rank fold(Fold mode, Rank current, Rank value, QueryCounter& counter) {
  if (current == kNoUpperBound || current == kNoLowerBound) return value;
  const Outcome o = counter.compare(value, current);
  if (mode == Fold::Min) return o == Outcome::Less ? value : current;
  return o == Outcome::Greater ? value : current;
}

Rank sentinel(Fold mode) { return mode == Fold::Min ? kNoUpperBound : kNoLowerBound; }

// Crosses with a_i > x constrain y; the set shrinks as x passes each a_i.
// `order` sorts the crosses by a ascending. Builds both NW (min d) and
// SW (max c) in one pass.
std::pair<StepFunction, StepFunction> west_envelopes(const PiercingInstance& inst,
                                                     const std::vector<std::size_t>& order,
                                                     QueryCounter& counter) {
  const Rank x0 = inst.xdomain.lo;
  std::vector<Rank> starts, mins, maxs;
  Rank cur_min = sentinel(Fold::Min), cur_max = sentinel(Fold::Max);

  std::ptrdiff_t j = static_cast<std::ptrdiff_t>(order.size()) - 1;
  while (j >= 0) {
    const Rank a = inst.crosses[order[static_cast<std::size_t>(j)]].h.lo;
    if (counter.compare(a, x0) != Outcome::Greater) break;
    starts.push_back(a);  // from x = a on, crosses with this a no longer count
    mins.push_back(cur_min);
    maxs.push_back(cur_max);
    do {
      const Cross& c = inst.crosses[order[static_cast<std::size_t>(j)]];
      cur_min = fold(Fold::Min, cur_min, c.v.hi, counter);
      cur_max = fold(Fold::Max, cur_max, c.v.lo, counter);
      --j;
    } while (j >= 0 &&
             counter.compare(inst.crosses[order[static_cast<std::size_t>(j)]].h.lo, a) ==
                 Outcome::Equal);
  }
  starts.push_back(x0);
  mins.push_back(cur_min);
  maxs.push_back(cur_max);

  std::reverse(starts.begin(), starts.end());
  std::reverse(mins.begin(), mins.end());
  std::reverse(maxs.begin(), maxs.end());
  return {StepFunction{starts, std::move(mins)}, StepFunction{starts, std::move(maxs)}};
}

// Crosses with b_i < x constrain y; each joins at x = b_i + 1. `order`
// sorts the crosses by b ascending. Builds NE (min d) and SE (max c).
std::pair<StepFunction, StepFunction> east_envelopes(const PiercingInstance& inst,
                                                     const std::vector<std::size_t>& order,
                                                     QueryCounter& counter) {
  const Rank x0 = inst.xdomain.lo;
  const Rank x1 = inst.xdomain.hi;
  std::vector<Rank> starts{x0};
  std::vector<Rank> mins{sentinel(Fold::Min)}, maxs{sentinel(Fold::Max)};
  Rank cur_min = mins.front(), cur_max = maxs.front();

  std::size_t j = 0;
  while (j < order.size()) {
    const Rank b = inst.crosses[order[j]].h.hi;
    if (!counter.less(b, x1)) break;
    do {
      const Cross& c = inst.crosses[order[j]];
      cur_min = fold(Fold::Min, cur_min, c.v.hi, counter);
      cur_max = fold(Fold::Max, cur_max, c.v.lo, counter);
      ++j;
    } while (j < order.size() &&
             counter.compare(inst.crosses[order[j]].h.hi, b) == Outcome::Equal);
    starts.push_back(b + 1);
    mins.push_back(cur_min);
    maxs.push_back(cur_max);
  }
  return {StepFunction{starts, std::move(mins)}, StepFunction{starts, std::move(maxs)}};
}

}  // namespace

Envelopes build_envelopes(const PiercingInstance& instance, QueryCounter& counter) {
  const auto by_a = merge_sort_counted(instance.crosses, counter,
                                       [](const Cross& c) { return c.h.lo; });
  const auto by_b = merge_sort_counted(instance.crosses, counter,
                                       [](const Cross& c) { return c.h.hi; });
  Envelopes env;
  std::tie(env.f_nw, env.g_sw) = west_envelopes(instance, by_a.order, counter);
  std::tie(env.f_ne, env.g_se) = east_envelopes(instance, by_b.order, counter);
  return env;
}

Envelopes build_envelopes(const PiercingInstance& instance) {
  QueryCounter counter;
  return build_envelopes(instance, counter);
}

bool witness_is_sound(const PiercingInstance& instance, const Point& p) {
  if (!instance.xdomain.contains(p.x) || !instance.ydomain.contains(p.y)) return false;
  return std::all_of(instance.crosses.begin(), instance.crosses.end(),
                     [&](const Cross& c) { return c.contains(p.x, p.y); });
}

PiercingVerdict solve_piercing(const PiercingInstance& instance, QueryCounter& counter) {
  const std::uint64_t before = counter.comparisons();
  const Envelopes env = build_envelopes(instance, counter);
  const Rank c0 = instance.ydomain.lo;
  const Rank d0 = instance.ydomain.hi;

  // Every d_i <= d0 and c_i >= c0, so clamping only replaces sentinels.
  auto upper_of = [&](Rank u) { return u == kNoUpperBound ? d0 : u; };
  auto lower_of = [&](Rank l) { return l == kNoLowerBound ? c0 : l; };

  const std::array<const StepFunction*, 4> fns{&env.f_nw, &env.f_ne, &env.g_sw, &env.g_se};
  std::array<std::size_t, 4> at{0, 0, 0, 0};
  Rank x = instance.xdomain.lo;

  PiercingVerdict verdict;
  for (;;) {
    const Rank u1 = upper_of(env.f_nw.values[at[0]]);
    const Rank u2 = upper_of(env.f_ne.values[at[1]]);
    const Rank l1 = lower_of(env.g_sw.values[at[2]]);
    const Rank l2 = lower_of(env.g_se.values[at[3]]);
    const Rank upper = counter.less(u2, u1) ? u2 : u1;
    const Rank lower = counter.less(l1, l2) ? l2 : l1;
    if (counter.compare(lower, upper) != Outcome::Greater) {
      verdict.pierceable = true;
      verdict.witness = Point{x, lower};
      break;
    }

    // Next piece start across the four functions.
    std::optional<Rank> next;
    for (std::size_t f = 0; f < fns.size(); ++f) {
      if (at[f] + 1 >= fns[f]->pieces()) continue;
      const Rank candidate = fns[f]->breakpoints[at[f] + 1];
      if (!next || counter.less(candidate, *next)) next = candidate;
    }
    if (!next) break;
    x = *next;
    for (std::size_t f = 0; f < fns.size(); ++f) {
      if (at[f] + 1 < fns[f]->pieces() && fns[f]->breakpoints[at[f] + 1] == x) ++at[f];
    }
  }

  if (verdict.witness && !witness_is_sound(instance, *verdict.witness)) {
    throw std::logic_error("piercing witness fails a cross");
  }
  verdict.queries_used = counter.comparisons() - before;
  return verdict;
}

PiercingVerdict solve_piercing(const PiercingInstance& instance) {
  QueryCounter counter;
  return solve_piercing(instance, counter);
}

namespace {

std::pair<std::vector<Rank>, std::vector<Rank>> endpoint_grid(const PiercingInstance& inst) {
  std::vector<Rank> xs{inst.xdomain.lo, inst.xdomain.hi};
  std::vector<Rank> ys{inst.ydomain.lo, inst.ydomain.hi};
  for (const Cross& c : inst.crosses) {
    xs.insert(xs.end(), {c.h.lo, c.h.hi});
    ys.insert(ys.end(), {c.v.lo, c.v.hi});
  }
  for (auto* v : {&xs, &ys}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  return {xs, ys};
}

}  // namespace

PiercingVerdict oracle_piercing(const PiercingInstance& instance) {
  const auto [xs, ys] = endpoint_grid(instance);
  PiercingVerdict verdict;
  for (Rank x : xs) {
    for (Rank y : ys) {
      if (witness_is_sound(instance, {x, y})) {
        verdict.pierceable = true;
        verdict.witness = Point{x, y};
        return verdict;
      }
    }
  }
  return verdict;
}

std::vector<Point> piercing_grid_points(const PiercingInstance& instance) {
  const auto [xs, ys] = endpoint_grid(instance);
  std::vector<Point> points;
  for (Rank x : xs) {
    for (Rank y : ys) {
      if (witness_is_sound(instance, {x, y})) points.push_back({x, y});
    }
  }
  return points;
}

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

bool MinimalityReport::minimal_non_pierceable() const {
  return !full_family_pierceable &&
         std::all_of(each_deletion_pierceable.begin(), each_deletion_pierceable.end(),
                     [](bool b) { return b; });
}

namespace {

PiercingInstance without(const PiercingInstance& inst, std::size_t skip) {
  PiercingInstance sub{inst.xdomain, inst.ydomain, {}};
  sub.crosses.reserve(inst.crosses.size());
  for (std::size_t i = 0; i < inst.crosses.size(); ++i) {
    if (i != skip) sub.crosses.push_back(inst.crosses[i]);
  }
  return sub;
}

}  // namespace

MinimalityReport check_minimality(const PiercingInstance& instance) {
  MinimalityReport report;
  report.full_family_pierceable = solve_piercing(instance).pierceable;
  for (std::size_t i = 0; i < instance.crosses.size(); ++i) {
    report.each_deletion_pierceable.push_back(solve_piercing(without(instance, i)).pierceable);
  }
  return report;
}

PiercingInstance gen_disjoint(int n) {
  if (n < 1) throw std::invalid_argument("disjoint family needs N >= 1");
  PiercingInstance inst;
  inst.xdomain = inst.ydomain = {0, n - 1};
  for (Rank k = 0; k < n; ++k) inst.crosses.push_back({{k, k}, {k, k}});
  return inst;
}

namespace {

PiercingInstance quadrant_family() {
  PiercingInstance inst;
  inst.xdomain = inst.ydomain = {0, 3};
  inst.crosses = {{{0, 1}, {0, 1}}, {{2, 3}, {2, 3}}, {{0, 1}, {2, 3}}, {{2, 3}, {0, 1}}};
  return inst;
}

// Thresholds of the ladder. Step k (1-based) alternates NW_j for odd k and
// SE_j for even k. NW_j removes [0,s_j) x (w_j,top], SE_j removes
// (p_j,top] x [0,v_j). The SW cap removes [0,f) x [0,v_0), the NE cap
// (e,top] x (g,top]. Consecutive boxes overlap along the stairs:
//   x: p1 < f < s1 < p2 < s2 < ... with e right after s_{q-1}
//   y: w1 < v0 < w2 < v1 < w3 < ... with g right before the last v
PiercingInstance ladder_family(int n) {
  const int m = n - 2;
  const int q = (m + 1) / 2;  // NW steps
  const int r = m / 2;        // SE steps
  enum Tok { P, F, S, E, W, V, G };
  struct Slot {
    Tok tok;
    int k;
  };

  std::vector<Slot> xs{{P, 1}, {F, 0}, {S, 1}};
  for (int k = 2; k <= std::max(q, r); ++k) {
    if (k <= r) xs.push_back({P, k});
    if (k <= q) xs.push_back({S, k});
  }
  auto after_s = std::find_if(xs.begin(), xs.end(), [&](Slot s) { return s.tok == S && s.k == q - 1; });
  xs.insert(after_s + 1, {E, 0});

  std::vector<Slot> ys{{W, 1}, {V, 0}};
  for (int k = 2; k <= q; ++k) {
    ys.push_back({W, k});
    if (k - 1 <= r) ys.push_back({V, k - 1});
  }
  if (r == q) ys.push_back({V, r});
  auto last_v = std::find_if(ys.begin(), ys.end(), [&](Slot s) { return s.tok == V && s.k == r; });
  ys.insert(last_v, {G, 0});

  std::vector<Rank> p(static_cast<std::size_t>(r + 1)), s(static_cast<std::size_t>(q + 1));
  std::vector<Rank> w(static_cast<std::size_t>(q + 1)), v(static_cast<std::size_t>(r + 1));
  Rank f = 0, e = 0, g = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Rank rank = static_cast<Rank>(i) + 1;
    const auto k = static_cast<std::size_t>(xs[i].k);
    switch (xs[i].tok) {
      case P: p[k] = rank; break;
      case S: s[k] = rank; break;
      case F: f = rank; break;
      default: e = rank; break;
    }
  }
  for (std::size_t i = 0; i < ys.size(); ++i) {
    const Rank rank = static_cast<Rank>(i) + 1;
    const auto k = static_cast<std::size_t>(ys[i].k);
    switch (ys[i].tok) {
      case W: w[k] = rank; break;
      case V: v[k] = rank; break;
      default: g = rank; break;
    }
  }

  const Rank top = n + 2;
  std::vector<Cross> steps;
  for (int k = 1; k <= m; ++k) {
    const auto j = static_cast<std::size_t>((k + 1) / 2);
    if (k % 2 == 1) {
      steps.push_back({{s[j], top}, {0, w[j]}});
    } else {
      steps.push_back({{0, p[j]}, {v[j], top}});
    }
  }

  PiercingInstance inst;
  inst.xdomain = inst.ydomain = {0, top};
  inst.crosses.push_back({{f, top}, {v[0], top}});
  inst.crosses.insert(inst.crosses.end(), steps.begin(), steps.end() - 1);
  inst.crosses.push_back({{0, e}, {0, g}});
  inst.crosses.push_back(steps.back());
  return inst;
}

bool oracle_minimal(const PiercingInstance& inst) {
  if (oracle_piercing(inst).pierceable) return false;
  for (std::size_t i = 0; i < inst.crosses.size(); ++i) {
    if (!oracle_piercing(without(inst, i)).pierceable) return false;
  }
  return true;
}

}  // namespace

PiercingInstance gen_staircase_minimal(int n) {
  if (n < 3) throw std::invalid_argument("minimal non-pierceable family needs N >= 3");
  PiercingInstance inst = n == 3 ? gen_disjoint(3) : n == 4 ? quadrant_family() : ladder_family(n);
  const bool ok = n <= 14 ? oracle_minimal(inst) : check_minimality(inst).minimal_non_pierceable();
  if (!ok) {
    throw std::logic_error("staircase family for N=" + std::to_string(n) + " is not minimal");
  }
  return inst;
}

PiercingInstance gen_staircase_literal(int n, const Permutation& p) {
  if (n != 8 && n != 9) throw std::invalid_argument("literal staircase exists for N = 8 or 9 only");
  if (p.size() != n) throw std::invalid_argument("permutation size differs from N");
  if (!p.preserves_parity()) throw std::invalid_argument("permutation must preserve parity");

  // Per position k = 1..N along the stairs: a, b, c, d.
  struct Ranks {
    Rank a, b, c, d;
  };
  static constexpr std::array<Ranks, 8> kEight{{
      {0, 0, 1, 8}, {2, 7, 0, 0}, {0, 1, 3, 8}, {4, 7, 0, 2},
      {0, 3, 5, 8}, {6, 7, 0, 4}, {0, 5, 7, 8}, {7, 7, 0, 6},
  }};
  static constexpr std::array<Ranks, 9> kNine{{
      {0, 0, 1, 8}, {2, 9, 0, 0}, {0, 1, 3, 8}, {4, 9, 0, 2}, {0, 3, 5, 8},
      {6, 9, 0, 4}, {0, 5, 7, 8}, {8, 9, 0, 6}, {0, 7, 8, 8},
  }};

  PiercingInstance inst;
  inst.xdomain = {0, n == 8 ? 7 : 9};
  inst.ydomain = {0, 8};
  inst.crosses.resize(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    const Ranks& t = n == 8 ? kEight[static_cast<std::size_t>(k - 1)]
                            : kNine[static_cast<std::size_t>(k - 1)];
    inst.crosses[static_cast<std::size_t>(p.at(k) - 1)] = {{t.a, t.b}, {t.c, t.d}};
  }
  return inst;
}

PiercingInstance random_piercing(int n, Rank max_rank, Rng& rng) {
  PiercingInstance inst;
  inst.xdomain = inst.ydomain = {0, std::max<Rank>(max_rank, 1)};
  inst.crosses.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Interval h = rng.interval_in(inst.xdomain);
    const Interval v = rng.interval_in(inst.ydomain);
    inst.crosses.push_back({h, v});
  }
  return inst;
}

}  // namespace pierce
