#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "subsetsum/core_model.hpp"
#include "subsetsum/selection.hpp"

namespace subsetsum {

/// Node of the binary min-heap over all nonempty subsets.
struct BinHeapNode {
  IndexSubset subset;
  std::uint32_t depth = 0;

  [[nodiscard]] std::uint32_t max_index() const { return subset.indices.back(); }
};

/// Binary heap-ordered tree over every nonempty subset of a strictly positive
/// set. The root is {0}; the left child of a subset with greatest index i
/// replaces i by i + 1, the right child appends i + 1.
class PowersetHeap {
 public:
  using Node = BinHeapNode;

  /// Throws CapacityError when 2^N - 1 does not fit in 63 bits.
  explicit PowersetHeap(const ScaledSet& s);

  [[nodiscard]] const ScaledSet& scaled() const noexcept { return *set_; }
  /// Number of nonempty subsets, 2^N - 1.
  [[nodiscard]] std::uint64_t total() const noexcept { return total_; }

  [[nodiscard]] Node root() const;
  /// Appends 0, 1 or 2 children (left first).
  void children(const Node& node, std::vector<Node>& out) const;

 private:
  const ScaledSet* set_;
  std::uint64_t total_;
};


[[nodiscard]] BinHeapNode binheap_root(const ScaledSet& s);
[[nodiscard]] std::vector<BinHeapNode> binheap_children(const BinHeapNode& node, const ScaledSet& s);

/// Rank-k subset (1-based) in nondecreasing-sum order over all nonempty
/// subsets. Throws RankError for k outside [1, 2^N - 1].
[[nodiscard]] IndexSubset binheap_kth_smallest(const ScaledSet& s, std::uint64_t k);

struct BinHeapSearch {
  std::optional<IndexSubset> subset;
  std::vector<std::uint64_t> probed_ranks;
  std::uint64_t nodes_expanded = 0;
};

/// Binary search over the virtual sorted list of all nonempty subsets.
[[nodiscard]] BinHeapSearch binheap_search(const ScaledSet& s, std::int64_t target,
                                           std::uint64_t max_expansions = kDefaultMaxExpansions);

}  // namespace subsetsum
