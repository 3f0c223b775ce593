// pierce: generate, solve and verify interval coverage and piercing
// instances; benchmark query counts against the lower bounds.
//
// Exit codes: 0 success / covered / pierceable, 1 negative verdict (solve),
// 2 usage or malformed input, 3 I/O failure, 4 solver/oracle disagreement.

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pierce/bounds.hpp"
#include "pierce/coverage.hpp"
#include "pierce/io.hpp"
#include "pierce/piercing.hpp"

namespace {

using namespace pierce;
using Json = nlohmann::ordered_json;

enum Exit : int { kOk = 0, kNegative = 1, kUsage = 2, kIo = 3, kDisagree = 4 };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::int64_t parse_int(const std::string& s) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) throw UsageError("not an integer: '" + s + "'");
  return v;
}

// "N" or "A..B".
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const std::int64_t n = parse_int(s);
    return {n, n};
  }
  return {parse_int(s.substr(0, dots)), parse_int(s.substr(dots + 2))};
}

// Writes to `path`, or stdout when empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("cannot write " + path);
}

Instance load_checked(const std::string& path, bool strict) {
  Instance inst = load_instance(path);
  std::visit([&](const auto& i) { validate(i, strict); }, inst);
  return inst;
}

// ---------------------------------------------------------------------------

struct GenerateOpts {
  std::string family;
  std::int64_t n = 0;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_generate(const GenerateOpts& o) {
  Family f;
  try {
    f = parse_family(o.family);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (f == Family::RandomPiercing && o.family == "random") {
    throw UsageError("generate needs random-coverage or random-piercing");
  }
  Instance inst;
  try {
    inst = generate_instance(f, o.n, o.seed);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  emit(o.out, to_json(inst) + "\n");
  return kOk;
}

// ---------------------------------------------------------------------------

struct SolveOpts {
  std::string in;
  bool strict = false;
};

int cmd_solve(const SolveOpts& o) {
  const Instance inst = load_checked(o.in, o.strict);
  if (const auto* cov = std::get_if<CoverageInstance>(&inst)) {
    const CoverageVerdict v = solve_coverage(*cov);
    std::cout << to_json(v) << '\n';
    return v.covered ? kOk : kNegative;
  }
  const PiercingVerdict v = solve_piercing(std::get<PiercingInstance>(inst));
  std::cout << to_json(v) << '\n';
  return v.pierceable ? kOk : kNegative;
}

// ---------------------------------------------------------------------------

struct VerifyOpts {
  std::string in;
  bool strict = false;
  bool minimality = false;
  bool inject_fault = false;
};

int cmd_verify(const VerifyOpts& o) {
  const Instance inst = load_checked(o.in, o.strict);
  Json report;
  bool agree = false;
  bool sound = true;

  if (const auto* cov = std::get_if<CoverageInstance>(&inst)) {
    CoverageVerdict solver = solve_coverage(*cov);
    const CoverageVerdict oracle = oracle_coverage(*cov);
    if (o.inject_fault) {
      solver.covered = !solver.covered;
      solver.gap.reset();
    }
    agree = solver.covered == oracle.covered;
    for (const CoverageVerdict* v : {&std::as_const(solver), &oracle}) {
      if (v->gap && !gap_is_sound(*cov, *v->gap)) sound = false;
      if (!v->covered && !v->gap && cov->domain.lo < cov->domain.hi) sound = false;
    }
    report["problem"] = "coverage";
    report["solver"] = Json::parse(to_json(solver));
    report["oracle"] = Json::parse(to_json(oracle));
  } else {
    const auto& p = std::get<PiercingInstance>(inst);
    PiercingVerdict solver = solve_piercing(p);
    const PiercingVerdict oracle = oracle_piercing(p);
    if (o.inject_fault) {
      solver.pierceable = !solver.pierceable;
      solver.witness.reset();
    }
    agree = solver.pierceable == oracle.pierceable;
    for (const PiercingVerdict* v : {&std::as_const(solver), &oracle}) {
      if (v->witness && !witness_is_sound(p, *v->witness)) sound = false;
      if (v->pierceable && !v->witness) sound = false;
    }
    report["problem"] = "piercing";
    report["solver"] = Json::parse(to_json(solver));
    report["oracle"] = Json::parse(to_json(oracle));
    if (o.minimality) report["minimality"] = Json::parse(to_json(check_minimality(p)));
  }
  report["agree"] = agree;
  report["witness_sound"] = sound;
  std::cout << report.dump() << '\n';
  return agree && sound ? kOk : kDisagree;
}

// ---------------------------------------------------------------------------

struct BenchOpts {
  std::vector<std::string> families;
  std::string n = "";
  int trials = 1;
  std::uint64_t seed = 1;
  std::string out;
  bool timing = false;
};

int cmd_bench(const BenchOpts& o) {
  BenchConfig config;
  try {
    for (const std::string& name : o.families) config.families.push_back(parse_family(name));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::tie(config.n_lo, config.n_hi) = parse_range(o.n);
  if (config.n_lo < 0) throw UsageError("sizes must be nonnegative");
  if (o.trials < 0) throw UsageError("trials must be nonnegative");
  config.trials = o.trials;
  config.seed = o.seed;
  config.timing = o.timing;

  std::ostringstream csv;
  write_csv(csv, run_bench(config));
  emit(o.out, csv.str());
  return kOk;
}

// ---------------------------------------------------------------------------

int cmd_bound(std::int64_t n) {
  if (n < 0) throw UsageError("N must be nonnegative");
  const BoundReport r = bound_report(n);
  Json j;
  j["n"] = r.n;
  j["lb_union"] = r.lb_union;
  j["lb_equality"] = lb_equality(n);
  j["lb_piercing"] = r.lb_piercing;
  if (n <= 1000) j["lb_union_ceil"] = exact_log6_factorial(n).ceil;
  j["basis"] = r.basis;
  std::cout << j.dump() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interval coverage and pair-of-points piercing: solvers, oracles, generators"};
  app.require_subcommand(1);

  GenerateOpts gen;
  auto* generate = app.add_subcommand("generate", "Write a generated instance as JSON");
  generate->add_option("--family", gen.family,
                       "chain | staircase | staircase-literal | disjoint | random-coverage | "
                       "random-piercing")
      ->required();
  generate->add_option("--n", gen.n, "Instance size")->required();
  generate->add_option("--seed", gen.seed, "PRNG seed");
  generate->add_option("--out", gen.out, "Output file (stdout if omitted)");

  SolveOpts solve;
  auto* solve_cmd = app.add_subcommand("solve", "Decide an instance; exit 0 yes, 1 no");
  solve_cmd->add_option("--in", solve.in, "Instance JSON")->required();
  solve_cmd->add_flag("--strict", solve.strict, "Require lo < hi for every interval");

  VerifyOpts verify;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check solver against oracle");
  verify_cmd->add_option("--in", verify.in, "Instance JSON")->required();
  verify_cmd->add_flag("--strict", verify.strict, "Require lo < hi for every interval");
  verify_cmd->add_flag("--minimality", verify.minimality, "Also report leave-one-out piercing");
  verify_cmd->add_flag("--inject-fault", verify.inject_fault,
                       "Negate the solver verdict (tests the disagreement path)");

  BenchOpts bench;
  auto* bench_cmd = app.add_subcommand("bench", "Write query counts per family and size as CSV");
  bench_cmd->add_option("--family", bench.families, "Families (repeat or comma-separate)")
      ->required()
      ->delimiter(',');
  bench_cmd->add_option("--n", bench.n, "Size N or range A..B")->required();
  bench_cmd->add_option("--trials", bench.trials, "Trials per size");
  bench_cmd->add_option("--seed", bench.seed, "PRNG seed");
  bench_cmd->add_option("--out", bench.out, "CSV file (stdout if omitted)");
  bench_cmd->add_flag("--timing", bench.timing, "Record wall time (output no longer reproducible)");

  std::int64_t bound_n = 0;
  auto* bound_cmd = app.add_subcommand("bound", "Print the lower-bound values for N");
  bound_cmd->add_option("--n", bound_n, "Instance size")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*generate) return cmd_generate(gen);
    if (*solve_cmd) return cmd_solve(solve);
    if (*verify_cmd) return cmd_verify(verify);
    if (*bench_cmd) return cmd_bench(bench);
    if (*bound_cmd) return cmd_bound(bound_n);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
