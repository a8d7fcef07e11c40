#include "subsetsum/core_model.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "subsetsum/errors.hpp"

namespace subsetsum {

ScaledSet::ScaledSet(std::vector<std::int64_t> sorted_values, std::int64_t offset)
    : sorted_(std::move(sorted_values)), offset_(offset) {
  if (sorted_.empty()) throw InputError("input set is empty");
  if (!std::is_sorted(sorted_.begin(), sorted_.end())) {
    throw InputError("scaled set values must be sorted nondecreasing");
  }
  if (offset_ < 0) throw InputError("offset must be nonnegative");

  scaled_.reserve(sorted_.size());
  for (std::int64_t v : sorted_) {
    const std::int64_t x = detail::checked_add(v, offset_, "scaled value (value + offset)");
    if (x < 1) {
      throw InputError("scaled value " + std::to_string(x) + " is not strictly positive");
    }
    scaled_.push_back(x);
  }
  // Bounds every subset sum, and every target + offset * order the solver
  // compares against them.
  (void)detail::checked_mul(static_cast<std::int64_t>(scaled_.size()), scaled_.back(),
                            "N * max scaled value");
}

std::int64_t ScaledSet::min_sum(std::size_t n) const {
  n = std::min(n, scaled_.size());
  return std::accumulate(scaled_.begin(), scaled_.begin() + static_cast<std::ptrdiff_t>(n),
                         std::int64_t{0});
}

std::int64_t ScaledSet::max_sum(std::size_t n) const {
  n = std::min(n, scaled_.size());
  return std::accumulate(scaled_.end() - static_cast<std::ptrdiff_t>(n), scaled_.end(),
                         std::int64_t{0});
}

IndexSubset IndexSubset::from_indices(std::span<const std::uint32_t> indices, const ScaledSet& s) {
  IndexSubset out;
  out.indices.assign(indices.begin(), indices.end());
  for (std::size_t j = 0; j < indices.size(); ++j) {
    if (indices[j] >= s.size()) {
      throw InputError("index " + std::to_string(indices[j]) + " out of range");
    }
    if (j > 0 && indices[j] <= indices[j - 1]) {
      throw InputError("subset indices must be strictly increasing");
    }
    out.sum += s.scaled(indices[j]);
  }
  return out;
}

bool IndexSubset::valid_for(const ScaledSet& s) const {
  std::int64_t total = 0;
  for (std::size_t j = 0; j < indices.size(); ++j) {
    if (indices[j] >= s.size()) return false;
    if (j > 0 && indices[j] <= indices[j - 1]) return false;
    total += s.scaled(indices[j]);
  }
  return total == sum;
}

std::int64_t scaling_offset(std::span<const std::int64_t> values) {
  if (values.empty()) throw InputError("input set is empty");
  const std::int64_t lo = *std::min_element(values.begin(), values.end());
  if (lo > 0) return 0;
  std::int64_t offset = 0;
  if (__builtin_sub_overflow(std::int64_t{1}, lo, &offset)) {
    throw CapacityError("64-bit overflow computing offset 1 - min(values)");
  }
  return offset;
}

ScaledSet normalize(const InputSet& input) {
  if (input.values.empty()) throw InputError("input set is empty");
  std::vector<std::int64_t> sorted = input.values;
  std::stable_sort(sorted.begin(), sorted.end());
  const std::int64_t offset = scaling_offset(sorted);
  return ScaledSet(std::move(sorted), offset);
}

std::vector<std::int64_t> unscale(const IndexSubset& subset, const ScaledSet& s) {
  std::vector<std::int64_t> out;
  out.reserve(subset.size());
  for (std::uint32_t i : subset.indices) out.push_back(s.sorted_values()[i]);
  return out;
}

}  // namespace subsetsum
