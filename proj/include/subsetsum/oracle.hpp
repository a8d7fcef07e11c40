#pragma once

// Independent references used by tests and the selftest command. Nothing in
// here shares code with the tree-based search.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "subsetsum/core_model.hpp"

namespace subsetsum::oracle {

inline constexpr std::uint64_t kDpCellCap = 10'000'000;
inline constexpr std::size_t kBruteForceMaxN = 25;
inline constexpr std::uint64_t kEnumerateCap = 1'000'000;

/// True iff some nonempty subset sums to the target, via a reachability
/// table over [sum of negatives, sum of positives]. Throws CapacityError when
/// the table would exceed `cell_cap` cells.
[[nodiscard]] bool dp_decision(const InputSet& input, std::uint64_t cell_cap = kDpCellCap);

/// Tries subsets by increasing size, then lexicographic position order, and
/// returns the first that sums to the target (values in input order).
[[nodiscard]] std::optional<std::vector<std::int64_t>> brute_force_solve(const InputSet& input);

struct SumEntry {
  std::int64_t sum;
  std::vector<std::uint32_t> indices;
};

/// All n-subsets (n == 0 means all nonempty subsets) of the scaled set,
/// sorted by sum with lexicographic order preserved within ties.
[[nodiscard]] std::vector<SumEntry> enumerate_sorted_sums(const ScaledSet& s, std::size_t n,
                                                          std::uint64_t cap = kEnumerateCap);

}  // namespace subsetsum::oracle
