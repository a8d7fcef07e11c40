#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <vector>

namespace subsetsum {

enum class TargetMode { kRandom, kUnreachable };

struct BenchConfig {
  std::size_t n = 8;
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  std::int64_t lo = -50;
  std::int64_t hi = 50;
  TargetMode target_mode = TargetMode::kRandom;
  /// When false, elapsed_ns is written as 0 so output is byte-reproducible.
  bool timing = true;
  /// Off by default: benches measure the plain per-order binary search.
  bool range_short_circuit = false;
};

struct BenchRow {
  std::size_t n = 0;
  std::uint64_t trial = 0;
  std::int64_t target = 0;
  bool found = false;
  std::size_t orders = 0;
  std::uint64_t probes_total = 0;
  std::uint64_t nodes_expanded = 0;
  std::uint64_t elapsed_ns = 0;
};

/// Random instances of size config.n drawn from an mt19937_64 seeded with
/// (seed, n): values uniform in [lo, hi] (redrawn if all zero), target
/// uniform in [sum of negatives, sum of positives] or, in unreachable mode,
/// sum of positives + 1.
[[nodiscard]] std::vector<BenchRow> run_bench(const BenchConfig& config);

inline constexpr const char* kBenchCsvHeader =
    "n,trial,target,found,orders,probes_total,nodes_expanded,elapsed_ns";

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows, bool header = true);

}  // namespace subsetsum
