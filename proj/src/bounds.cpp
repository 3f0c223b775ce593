#include "pierce/bounds.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "pierce/coverage.hpp"
#include "pierce/piercing.hpp"
#include "pierce/random.hpp"

namespace pierce {

namespace {

double ln_factorial(std::int64_t n) {
  double sum = 0;
  for (std::int64_t k = 2; k <= n; ++k) sum += std::log(static_cast<double>(k));
  return sum;
}

const double kLn6 = std::log(6.0);

}  // namespace

double lb_union(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("N must be nonnegative");
  return ln_factorial(n) / kLn6;
}

double lb_piercing(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("piercing bound needs N >= 2");
  const double value = 2.0 * (ln_factorial(n / 2) - std::log(2.0)) / kLn6;
  return std::max(value, 0.0);
}

double lb_equality(std::int64_t n) { return lb_union(n); }

ExactLog6 exact_log6_factorial(std::int64_t n) {
  using boost::multiprecision::cpp_int;
  if (n < 0) throw std::invalid_argument("N must be nonnegative");
  cpp_int factorial = 1;
  for (std::int64_t k = 2; k <= n; ++k) factorial *= k;
  ExactLog6 result;
  cpp_int power = 1;
  while (power < factorial) {
    power *= 6;
    ++result.ceil;
  }
  result.exact = power == factorial;
  return result;
}

BoundReport bound_report(std::int64_t n) {
  BoundReport r;
  r.n = n;
  r.lb_union = lb_union(n);
  r.lb_piercing = n >= 2 ? lb_piercing(n) : 0.0;
  r.basis = "log base 6: each query has at most 6 answer forms, so m queries separate at most 6^m classes";
  return r;
}

// ---------------------------------------------------------------------------
// Bench
// ---------------------------------------------------------------------------

Family parse_family(std::string_view name) {
  if (name == "chain") return Family::Chain;
  if (name == "staircase") return Family::Staircase;
  if (name == "staircase-literal") return Family::StaircaseLiteral;
  if (name == "disjoint") return Family::Disjoint;
  if (name == "random-coverage") return Family::RandomCoverage;
  if (name == "random-piercing" || name == "random") return Family::RandomPiercing;
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Chain: return "chain";
    case Family::Staircase: return "staircase";
    case Family::StaircaseLiteral: return "staircase-literal";
    case Family::Disjoint: return "disjoint";
    case Family::RandomCoverage: return "random-coverage";
    case Family::RandomPiercing: return "random-piercing";
  }
  return "?";
}

bool is_coverage_family(Family f) {
  return f == Family::Chain || f == Family::RandomCoverage;
}

bool family_supports(Family f, std::int64_t n) {
  switch (f) {
    case Family::Chain: return n >= 2;
    case Family::Staircase: return n >= 3;
    case Family::StaircaseLiteral: return n == 8 || n == 9;
    case Family::Disjoint: return n >= 1;
    case Family::RandomCoverage:
    case Family::RandomPiercing: return n >= 0;
  }
  return false;
}

Instance generate_instance(Family f, std::int64_t n, std::uint64_t seed) {
  if (!family_supports(f, n) || n > (1 << 24)) {
    throw std::invalid_argument("family " + std::string(family_name(f)) +
                                " does not support N=" + std::to_string(n));
  }
  Rng rng(seed);
  const int size = static_cast<int>(n);
  switch (f) {
    case Family::Chain: return gen_chain(random_permutation(size, rng));
    case Family::Staircase: return gen_staircase_minimal(size);
    case Family::StaircaseLiteral:
      return gen_staircase_literal(size, random_parity_permutation(size, rng));
    case Family::Disjoint: return gen_disjoint(size);
    case Family::RandomCoverage: return random_coverage(size, 2 * n, rng);
    case Family::RandomPiercing: return random_piercing(size, 2 * n, rng);
  }
  throw std::invalid_argument("unknown family");
}

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
  std::vector<BenchRecord> records;
  for (Family f : config.families) {
    for (std::int64_t n = config.n_lo; n <= config.n_hi; ++n) {
      if (!family_supports(f, n)) continue;
      for (int trial = 0; trial < config.trials; ++trial) {
        std::uint64_t seed = Rng::mix(config.seed);
        seed = Rng::mix(seed ^ static_cast<std::uint64_t>(f));
        seed = Rng::mix(seed ^ static_cast<std::uint64_t>(n));
        seed = Rng::mix(seed ^ static_cast<std::uint64_t>(trial));
        const Instance inst = generate_instance(f, n, seed);

        BenchRecord rec;
        rec.family = family_name(f);
        rec.n = n;
        rec.trial = trial;
        QueryCounter counter;
        const auto start = std::chrono::steady_clock::now();
        if (const auto* cov = std::get_if<CoverageInstance>(&inst)) {
          rec.verdict = solve_coverage(*cov, counter).covered ? "covered" : "uncovered";
          rec.lower_bound = lb_union(n);
        } else {
          const auto& pierce = std::get<PiercingInstance>(inst);
          rec.verdict = solve_piercing(pierce, counter).pierceable ? "pierceable" : "not-pierceable";
          rec.lower_bound = n >= 2 ? lb_piercing(n) : 0.0;
        }
        const auto stop = std::chrono::steady_clock::now();
        rec.comparisons = counter.comparisons();
        if (config.timing) {
          rec.wall_time_ns =
              std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
        }
        records.push_back(std::move(rec));
      }
    }
  }
  return records;
}

void write_csv(std::ostream& os, const std::vector<BenchRecord>& records) {
  os << "family,n,trial,comparisons,verdict,lower_bound,wall_time_ns\n";
  char lb[64];
  for (const BenchRecord& r : records) {
    std::snprintf(lb, sizeof lb, "%.6f", r.lower_bound);
    os << r.family << ',' << r.n << ',' << r.trial << ',' << r.comparisons << ',' << r.verdict
       << ',' << lb << ',' << r.wall_time_ns << '\n';
  }
}

}  // namespace pierce
