#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "subsetsum/core_model.hpp"
#include "subsetsum/powerset_heap.hpp"

namespace subsetsum {

struct SolverOptions {
  /// Skip an order without probing when the scaled target lies outside the
  /// [min, max] range of its n-subset sums. Does not change decisions.
  bool range_short_circuit = true;
  /// Per-order cap on popped tree nodes; exceeding it raises CapacityError.
  std::uint64_t max_expansions = kDefaultMaxExpansions;
};

/// What happened while searching one subset order.
struct OrderTrace {
  std::size_t order = 0;
  std::int64_t scaled_target = 0;
  std::vector<std::uint64_t> probed_ranks;
  std::uint64_t nodes_expanded = 0;
  bool short_circuited = false;
  bool found = false;

  [[nodiscard]] std::uint64_t probes() const noexcept { return probed_ranks.size(); }
};

struct SearchStats {
  std::size_t orders_searched = 0;
  std::vector<OrderTrace> orders;
  std::uint64_t nodes_expanded = 0;
  std::chrono::nanoseconds elapsed{0};

  [[nodiscard]] std::vector<std::uint64_t> probes_per_order() const;
  [[nodiscard]] std::uint64_t probes_total() const;
};

/// Found subset (original values, ascending) or not-found, with statistics.
struct SolveOutcome {
  std::optional<std::vector<std::int64_t>> subset;
  SearchStats stats;

  [[nodiscard]] bool found() const noexcept { return subset.has_value(); }
};

struct OrderSearch {
  std::optional<IndexSubset> subset;
  OrderTrace trace;
};

/// Lower-bound binary search of the order-n subset tree for `scaled_target`.
[[nodiscard]] OrderSearch search_order(const ScaledSet& s, std::size_t n, std::int64_t scaled_target,
                                       const SolverOptions& options = {});

/// Searches orders 1..N for target + offset * order and returns the first
/// hit, which therefore has minimum cardinality. Only nonempty subsets count.
[[nodiscard]] SolveOutcome solve(const InputSet& input, const SolverOptions& options = {});

/// All-positive fast path: a single search over the powerset heap. Throws
/// PreconditionError if any value is <= 0.
[[nodiscard]] SolveOutcome solve_positive(const InputSet& input, const SolverOptions& options = {});

}  // namespace subsetsum
