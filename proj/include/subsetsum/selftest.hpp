#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "subsetsum/core_model.hpp"
#include "subsetsum/solver.hpp"

namespace subsetsum {

struct SelftestConfig {
  std::size_t max_n = 10;
  std::uint64_t instances = 10'000;
  std::uint64_t seed = 0;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  /// Reproduction info for the first failing case, empty when passed.
  std::string first_failure;
};

using SolveFn = std::function<SolveOutcome(const InputSet&)>;

/// Oracle-equivalence and structural sweeps. `solver` defaults to solve();
/// tests pass a corrupted one to exercise the failure path.
[[nodiscard]] std::vector<CheckResult> run_selftest(const SelftestConfig& config,
                                                    const SolveFn& solver = {});

}  // namespace subsetsum
