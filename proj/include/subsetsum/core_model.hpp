#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace subsetsum {

/// Raw problem instance: a multiset of values and a target.
struct InputSet {
  std::vector<std::int64_t> values;
  std::int64_t target = 0;
};

/// Sorted input plus the offset that makes every element strictly positive.
///
/// scaled(i) = sorted_values()[i] + offset() >= 1 for every i, and
/// size() * max scaled value fits in int64, so no subset sum of the scaled
/// set can overflow. Immutable after construction.
class ScaledSet {
 public:
  /// Validates and adopts an already-sorted value list. Throws InputError if
  /// the list is empty, unsorted, or not strictly positive after the offset;
  /// CapacityError if the worst-case scaled sum overflows.
  ScaledSet(std::vector<std::int64_t> sorted_values, std::int64_t offset);

  [[nodiscard]] std::size_t size() const noexcept { return sorted_.size(); }
  [[nodiscard]] std::int64_t offset() const noexcept { return offset_; }
  [[nodiscard]] std::span<const std::int64_t> sorted_values() const noexcept { return sorted_; }
  [[nodiscard]] std::span<const std::int64_t> scaled_values() const noexcept { return scaled_; }
  [[nodiscard]] std::int64_t scaled(std::size_t i) const { return scaled_.at(i); }

  /// Sum of the n smallest / n largest scaled values (n <= size()).
  [[nodiscard]] std::int64_t min_sum(std::size_t n) const;
  [[nodiscard]] std::int64_t max_sum(std::size_t n) const;

 private:
  std::vector<std::int64_t> sorted_;
  std::vector<std::int64_t> scaled_;
  std::int64_t offset_;
};

/// A subset as strictly increasing positions into the sorted set, with the
/// sum of the scaled values at those positions.
struct IndexSubset {
  std::vector<std::uint32_t> indices;
  std::int64_t sum = 0;

  /// Builds a subset and computes its scaled sum. Throws InputError when the
  /// indices are not strictly increasing or fall outside the set.
  static IndexSubset from_indices(std::span<const std::uint32_t> indices, const ScaledSet& s);

  [[nodiscard]] std::size_t size() const noexcept { return indices.size(); }
  [[nodiscard]] bool empty() const noexcept { return indices.empty(); }

  /// True when the indices are strictly increasing, in range, and the cached
  /// sum matches a recomputation.
  [[nodiscard]] bool valid_for(const ScaledSet& s) const;

  friend bool operator==(const IndexSubset&, const IndexSubset&) = default;
};

/// Offset the input used for scaling: max(0, 1 - min(values)).
[[nodiscard]] std::int64_t scaling_offset(std::span<const std::int64_t> values);

/// Stable-sorts the values and applies the scaling offset.
[[nodiscard]] ScaledSet normalize(const InputSet& input);

/// Maps a subset back to original values (ascending).
[[nodiscard]] std::vector<std::int64_t> unscale(const IndexSubset& subset, const ScaledSet& s);

}  // namespace subsetsum
