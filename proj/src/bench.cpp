#include "subsetsum/bench.hpp"

#include <algorithm>
#include <random>

#include "subsetsum/errors.hpp"
#include "subsetsum/solver.hpp"

namespace subsetsum {

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  if (config.n == 0) throw InputError("bench size must be at least 1");
  if (config.lo > config.hi) throw InputError("bench range lo must not exceed hi");
  if (config.lo == 0 && config.hi == 0) throw InputError("bench range [0, 0] only yields all-zero sets");

  std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                    static_cast<std::uint32_t>(config.n)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<std::int64_t> value_dist(config.lo, config.hi);

  SolverOptions options;
  options.range_short_circuit = config.range_short_circuit;

  std::vector<BenchRow> rows;
  rows.reserve(config.trials);
  for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
    InputSet input;
    input.values.resize(config.n);
    do {
      for (auto& v : input.values) v = value_dist(rng);
    } while (std::all_of(input.values.begin(), input.values.end(), [](std::int64_t v) { return v == 0; }));

    std::int64_t neg_total = 0;
    std::int64_t pos_total = 0;
    for (std::int64_t v : input.values) {
      auto& total = v < 0 ? neg_total : pos_total;
      total = detail::checked_add(total, v, "bench value total");
    }
    if (config.target_mode == TargetMode::kUnreachable) {
      input.target = detail::checked_add(pos_total, 1, "unreachable target");
    } else {
      input.target = std::uniform_int_distribution<std::int64_t>(neg_total, pos_total)(rng);
    }

    const SolveOutcome outcome = solve(input, options);
    BenchRow row;
    row.n = config.n;
    row.trial = trial;
    row.target = input.target;
    row.found = outcome.found();
    row.orders = outcome.stats.orders_searched;
    row.probes_total = outcome.stats.probes_total();
    row.nodes_expanded = outcome.stats.nodes_expanded;
    row.elapsed_ns = config.timing ? static_cast<std::uint64_t>(outcome.stats.elapsed.count()) : 0;
    rows.push_back(row);
  }
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows, bool header) {
  if (header) out << kBenchCsvHeader << '\n';
  for (const BenchRow& r : rows) {
    out << r.n << ',' << r.trial << ',' << r.target << ',' << (r.found ? "true" : "false") << ','
        << r.orders << ',' << r.probes_total << ',' << r.nodes_expanded << ',' << r.elapsed_ns << '\n';
  }
}

}  // namespace subsetsum
