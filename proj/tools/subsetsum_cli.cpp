// subsetsum: command-line front end.
//
//   subsetsum solve --set "-7,-3,-2,5,8" --target 0 [--trace] [--json] [--positive-fast-path]
//   subsetsum solve --file instances.txt [--json]
//   subsetsum bench --n 6..14 [--trials 100] [--seed 0] [--range -50:50] [--target-mode unreachable]
//   subsetsum selftest [--max-n 10] [--instances 10000] [--seed 0]
//
// Exit codes: 0 found / all checks passed, 1 not found / a check failed,
// 2 usage, input or capacity error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "subsetsum/bench.hpp"
#include "subsetsum/errors.hpp"
#include "subsetsum/instance.hpp"
#include "subsetsum/report.hpp"
#include "subsetsum/selftest.hpp"
#include "subsetsum/solver.hpp"

namespace {

constexpr int kExitFound = 0;
constexpr int kExitNotFound = 1;
constexpr int kExitError = 2;

struct SolveArgs {
  std::string set;
  std::string target;
  std::string file;
  bool positive = false;
  bool json = false;
  bool trace = false;
};

struct BenchArgs {
  std::string n;
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  std::string range = "-50:50";
  std::string target_mode = "random";
  bool no_timing = false;
  bool short_circuit = false;
};

// CLI11 takes "-7,-3" for a flag; rewrite "--set -7,..." as "--set=-7,...".
std::vector<std::string> join_negative_values(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const bool takes_value = args[i] == "--set" || args[i] == "--target" || args[i] == "--range";
    if (takes_value && i + 1 < args.size() && args[i + 1].size() > 1 && args[i + 1][0] == '-' &&
        args[i + 1][1] != '-') {
      out.push_back(args[i] + "=" + args[i + 1]);
      ++i;
    } else {
      out.push_back(args[i]);
    }
  }
  std::reverse(out.begin(), out.end());  // CLI11 consumes a reversed vector
  return out;
}

subsetsum::SolveOutcome run_one(const subsetsum::InputSet& input, const SolveArgs& args) {
  return args.positive ? subsetsum::solve_positive(input) : subsetsum::solve(input);
}

int cmd_solve(const SolveArgs& args) {
  std::vector<subsetsum::InputSet> instances;
  if (!args.file.empty()) {
    std::ifstream in(args.file);
    if (!in) throw subsetsum::InputError("cannot open instance file '" + args.file + "'");
    instances = subsetsum::read_instances(in);
    if (instances.empty()) throw subsetsum::InputError("instance file has no instances");
  } else {
    instances.push_back({subsetsum::parse_values(args.set), subsetsum::parse_int(args.target)});
  }

  bool all_found = true;
  for (const auto& input : instances) {
    const auto outcome = run_one(input, args);
    if (args.trace) {
      auto& trace_out = args.json ? std::cerr : std::cout;
      for (const auto& line : subsetsum::trace_lines(input, outcome)) trace_out << line << '\n';
    }
    std::cout << (args.json ? subsetsum::outcome_json(outcome) : subsetsum::outcome_text(outcome)) << '\n';
    all_found = all_found && outcome.found();
  }
  return all_found ? kExitFound : kExitNotFound;
}

int cmd_bench(const BenchArgs& args) {
  std::size_t n_lo = 0;
  std::size_t n_hi = 0;
  if (const auto dots = args.n.find(".."); dots != std::string::npos) {
    n_lo = static_cast<std::size_t>(subsetsum::parse_int(args.n.substr(0, dots)));
    n_hi = static_cast<std::size_t>(subsetsum::parse_int(args.n.substr(dots + 2)));
  } else {
    n_lo = n_hi = static_cast<std::size_t>(subsetsum::parse_int(args.n));
  }
  if (n_lo < 1 || n_hi < n_lo || n_hi > 62) throw subsetsum::InputError("--n must be N or A..B with 1 <= A <= B <= 62");

  const auto colon = args.range.find(':');
  if (colon == std::string::npos) throw subsetsum::InputError("--range must be lo:hi");

  subsetsum::BenchConfig config;
  config.trials = args.trials;
  config.seed = args.seed;
  config.lo = subsetsum::parse_int(args.range.substr(0, colon));
  config.hi = subsetsum::parse_int(args.range.substr(colon + 1));
  config.target_mode = args.target_mode == "unreachable" ? subsetsum::TargetMode::kUnreachable
                                                         : subsetsum::TargetMode::kRandom;
  config.timing = !args.no_timing;
  config.range_short_circuit = args.short_circuit;

  std::cout << subsetsum::kBenchCsvHeader << '\n';
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    config.n = n;
    subsetsum::write_bench_csv(std::cout, subsetsum::run_bench(config), false);
  }
  return 0;
}

int cmd_selftest(const subsetsum::SelftestConfig& config) {
  if (config.max_n < 1) throw subsetsum::InputError("--max-n must be at least 1");
  bool ok = true;
  for (const auto& check : subsetsum::run_selftest(config)) {
    if (check.passed) {
      std::cout << "PASS  " << check.name << " (" << check.cases << " cases)\n";
    } else {
      std::cout << "FAIL  " << check.name << ": " << check.first_failure << '\n';
      ok = false;
    }
  }
  std::cout << (ok ? "selftest passed" : "selftest FAILED") << '\n';
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subset sum solver over heap-ordered subset trees"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Solve one instance or a file of instances");
  auto* set_opt = solve->add_option("--set", solve_args.set, "Values, comma or space separated");
  auto* target_opt = solve->add_option("--target", solve_args.target, "Target sum");
  auto* file_opt = solve->add_option("--file", solve_args.file, "File of 'values ; target' lines");
  set_opt->needs(target_opt);
  target_opt->needs(set_opt);
  file_opt->excludes(set_opt)->excludes(target_opt);
  solve->add_flag("--positive-fast-path", solve_args.positive, "Single powerset-heap search (values > 0)");
  solve->add_flag("--json", solve_args.json, "Print a JSON object per instance");
  solve->add_flag("--trace", solve_args.trace, "Print the per-order search trace");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Randomized benchmark, CSV on stdout");
  bench->add_option("--n", bench_args.n, "Set size N, or a range A..B")->required();
  bench->add_option("--trials", bench_args.trials, "Trials per N")->capture_default_str();
  bench->add_option("--seed", bench_args.seed, "RNG seed")->capture_default_str();
  bench->add_option("--range", bench_args.range, "Value range lo:hi")->capture_default_str();
  bench->add_option("--target-mode", bench_args.target_mode, "random or unreachable")
      ->check(CLI::IsMember({"random", "unreachable"}))
      ->capture_default_str();
  bench->add_flag("--no-timing", bench_args.no_timing, "Write elapsed_ns as 0 (byte-reproducible output)");
  bench->add_flag("--short-circuit", bench_args.short_circuit, "Skip orders whose sum range excludes the target");

  subsetsum::SelftestConfig selftest_config;
  auto* selftest = app.add_subcommand("selftest", "Oracle-equivalence and structural checks");
  selftest->add_option("--max-n", selftest_config.max_n, "Largest set size")->capture_default_str();
  selftest->add_option("--instances", selftest_config.instances, "Random solver instances")->capture_default_str();
  selftest->add_option("--seed", selftest_config.seed, "RNG seed")->capture_default_str();

  try {
    std::vector<std::string> args = join_negative_values(argc, argv);
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*solve) {
      if (solve_args.file.empty() && solve_args.set.empty()) {
        throw subsetsum::InputError("solve needs --set and --target, or --file");
      }
      return cmd_solve(solve_args);
    }
    if (*bench) return cmd_bench(bench_args);
    return cmd_selftest(selftest_config);
  } catch (const subsetsum::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
}
