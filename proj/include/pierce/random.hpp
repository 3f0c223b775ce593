#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "pierce/core.hpp"

namespace pierce {

/// Reproducible generator. The engine is std::mt19937_64, whose output
/// sequence the standard fixes; bounded draws and shuffles are done here
/// rather than through <random> distributions, which differ between
/// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// SplitMix64 finalizer, used to derive independent per-trial seeds.
  static constexpr std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r;
    do {
      r = next();
    } while (r >= limit);
    return r % bound;
  }

  /// Uniform in [lo, hi].
  Rank between(Rank lo, Rank hi) {
    return lo + static_cast<Rank>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

  Interval interval_in(const Interval& domain) {
    Rank a = between(domain.lo, domain.hi);
    Rank b = between(domain.lo, domain.hi);
    if (b < a) std::swap(a, b);
    return {a, b};
  }

 private:
  std::mt19937_64 engine_;
};

inline Permutation random_permutation(int n, Rng& rng) {
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) order[static_cast<std::size_t>(k)] = k + 1;
  rng.shuffle(order);
  return Permutation(std::move(order));
}

/// Odd indices shuffled among odd positions, even among even.
inline Permutation random_parity_permutation(int n, Rng& rng) {
  std::vector<int> odd, even;
  for (int k = 1; k <= n; ++k) (k % 2 ? odd : even).push_back(k);
  rng.shuffle(odd);
  rng.shuffle(even);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    order.push_back(k % 2 ? odd[static_cast<std::size_t>(k / 2)]
                          : even[static_cast<std::size_t>(k / 2 - 1)]);
  }
  return Permutation(std::move(order));
}

}  // namespace pierce
