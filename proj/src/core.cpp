#include "pierce/core.hpp"

#include <algorithm>
#include <cmath>

#include "pierce/sorting.hpp"

namespace pierce {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Less: return "<";
    case Outcome::Equal: return "=";
    case Outcome::Greater: return ">";
  }
  return "?";
}

std::string to_string(const Interval& iv) {
  return "[" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) + "]";
}

Permutation::Permutation(std::vector<int> order) : order_(std::move(order)) {
  std::vector<bool> seen(order_.size() + 1, false);
  for (int i : order_) {
    if (i < 1 || i > size() || seen[static_cast<std::size_t>(i)]) {
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(size()));
    }
    seen[static_cast<std::size_t>(i)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> order(static_cast<std::size_t>(std::max(n, 0)));
  for (int k = 0; k < n; ++k) order[static_cast<std::size_t>(k)] = k + 1;
  return Permutation(std::move(order));
}

bool Permutation::preserves_parity() const {
  for (int k = 1; k <= size(); ++k) {
    if ((at(k) - k) % 2 != 0) return false;
  }
  return true;
}

RankMap normalize_ranks(std::span<const double> coords) {
  for (double c : coords) {
    if (!std::isfinite(c)) throw std::invalid_argument("non-finite coordinate");
  }
  QueryCounter counter;
  const SortedOrder sorted = merge_sort_counted(coords, counter);

  RankMap map;
  map.ranks.resize(coords.size());
  for (std::size_t j = 0; j < sorted.order.size(); ++j) {
    const std::size_t i = sorted.order[j];
    if (j == 0 || coords[sorted.order[j - 1]] < coords[i]) ++map.max_rank;
    map.ranks[i] = map.max_rank;
  }
  return map;
}

namespace {

void check_interval(const Interval& iv, const Interval& domain, bool strict,
                    const std::string& what) {
  if (iv.lo > iv.hi) throw InvertedInterval(what + " " + to_string(iv) + " has lo > hi");
  if (!domain.contains(iv)) {
    throw ContainmentViolation(what + " " + to_string(iv) + " escapes domain " +
                               to_string(domain));
  }
  if (strict && iv.degenerate()) {
    throw DegenerateInterval(what + " " + to_string(iv) + " is degenerate");
  }
}

void check_domain(const Interval& domain, bool require_proper) {
  if (domain.lo > domain.hi) throw InvertedInterval("domain " + to_string(domain) + " has lo > hi");
  if (require_proper && domain.degenerate()) {
    throw DegenerateInterval("domain " + to_string(domain) + " is degenerate");
  }
}

}  // namespace

const CoverageInstance& validate(const CoverageInstance& instance, bool strict) {
  check_domain(instance.domain, true);
  for (std::size_t i = 0; i < instance.intervals.size(); ++i) {
    check_interval(instance.intervals[i], instance.domain, strict,
                   "interval " + std::to_string(i + 1));
  }
  return instance;
}

const PiercingInstance& validate(const PiercingInstance& instance, bool strict) {
  check_domain(instance.xdomain, strict);
  check_domain(instance.ydomain, strict);
  for (std::size_t i = 0; i < instance.crosses.size(); ++i) {
    const std::string name = "cross " + std::to_string(i + 1);
    check_interval(instance.crosses[i].h, instance.xdomain, strict, name + " h");
    check_interval(instance.crosses[i].v, instance.ydomain, strict, name + " v");
  }
  return instance;
}

}  // namespace pierce
