#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "subsetsum/core_model.hpp"
#include "subsetsum/selection.hpp"

namespace subsetsum {

/// Node of an n-subset tree. `min_modified_pos` is the lowest position this
/// node changed relative to its parent (0 for the root); children may only
/// modify positions at or above it.
struct SubsetTreeNode {
  IndexSubset subset;
  std::uint32_t min_modified_pos = 0;
  std::uint32_t depth = 0;
};

/// C(N, n), or CapacityError if it exceeds uint64.
[[nodiscard]] std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Heap-ordered tree whose nodes are exactly the C(N, n) subsets of size n.
///
/// The root holds the n smallest elements. A node generates one child per
/// position i from n - 1 down to its min_modified_pos: index i moves to the
/// next index, and if that collides with the occupant of position i + 1 the
/// occupant is bumped to its own next index, cascading rightward. A child
/// whose cascade runs past the last element is not generated. Each child
/// records i as its min_modified_pos. This visits every n-subset exactly once.
class SubsetTree {
 public:
  using Node = SubsetTreeNode;

  /// Throws OrderError unless 1 <= n <= N; CapacityError if C(N, n)
  /// overflows uint64.
  SubsetTree(const ScaledSet& s, std::size_t n);

  [[nodiscard]] const ScaledSet& scaled() const noexcept { return *set_; }
  [[nodiscard]] std::size_t order() const noexcept { return n_; }
  [[nodiscard]] std::uint64_t total() const noexcept { return total_; }

  [[nodiscard]] Node root() const;
  /// Appends at most n children, highest position first.
  void children(const Node& node, std::vector<Node>& out) const;

 private:
  const ScaledSet* set_;
  std::size_t n_;
  std::uint64_t total_;
};

inline constexpr std::uint64_t kDefaultExpandCap = 1'000'000;

[[nodiscard]] SubsetTreeNode subtree_root(const ScaledSet& s, std::size_t n);
[[nodiscard]] std::vector<SubsetTreeNode> subtree_children(const SubsetTreeNode& node,
                                                           const SubsetTree& tree);

/// Rank-k n-subset (1-based) in nondecreasing-sum order.
[[nodiscard]] IndexSubset subtree_kth_smallest(const SubsetTree& tree, std::uint64_t k);

/// Every node of the tree in depth-first order. Throws CapacityError when
/// C(N, n) exceeds `cap`.
[[nodiscard]] std::vector<IndexSubset> subtree_expand_all(const SubsetTree& tree,
                                                          std::uint64_t cap = kDefaultExpandCap);

}  // namespace subsetsum
