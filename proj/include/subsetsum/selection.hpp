#pragma once

// Lazy k-th smallest selection over a heap-ordered tree of subsets.
//
// A tree supplies a root and a child generator; every child's sum must be
// >= its parent's. Popping the frontier in (sum, insertion sequence) order
// then visits the nodes in nondecreasing-sum order, so the i-th pop is the
// rank-i subset. Popped subsets are retained so later probes at lower ranks
// are answered from the cache and probes at higher ranks resume popping.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subsetsum/core_model.hpp"
#include "subsetsum/errors.hpp"

namespace subsetsum {

/// Default cap on popped nodes per selection.
inline constexpr std::uint64_t kDefaultMaxExpansions = 20'000'000;

template <class T>
concept HeapOrderedTree = requires(const T& tree, const typename T::Node& node,
                                   std::vector<typename T::Node>& out) {
  { tree.root() } -> std::same_as<typename T::Node>;
  tree.children(node, out);
  { node.subset } -> std::convertible_to<const IndexSubset&>;
  { node.depth } -> std::convertible_to<std::uint32_t>;
};

/// Min-heap of pending nodes keyed by (sum, insertion sequence).
template <class Node>
class Frontier {
 public:
  void push(Node node) {
    const std::int64_t key = node.subset.sum;
    heap_.push_back(Entry{key, next_seq_++, std::move(node)});
    std::push_heap(heap_.begin(), heap_.end(), Later{});
  }

  Node pop() {
    std::pop_heap(heap_.begin(), heap_.end(), Later{});
    Node node = std::move(heap_.back().node);
    heap_.pop_back();
    ++emitted_;
    return node;
  }

  [[nodiscard]] bool empty() const noexcept { return heap_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return heap_.size(); }
  [[nodiscard]] std::uint64_t emitted() const noexcept { return emitted_; }
  [[nodiscard]] std::uint64_t pushed() const noexcept { return next_seq_; }

 private:
  struct Entry {
    std::int64_t sum;
    std::uint64_t seq;
    Node node;
  };
  struct Later {
    bool operator()(const Entry& a, const Entry& b) const noexcept {
      return a.sum != b.sum ? a.sum > b.sum : a.seq > b.seq;
    }
  };

  std::vector<Entry> heap_;
  std::uint64_t next_seq_ = 0;
  std::uint64_t emitted_ = 0;
};

/// Rank-indexed view of a heap-ordered tree. Ranks are 1-based.
template <HeapOrderedTree Tree>
class RankedSelection {
 public:
  using Node = typename Tree::Node;

  RankedSelection(const Tree& tree, std::uint64_t total, std::uint64_t max_expansions)
      : tree_(&tree), total_(total), max_expansions_(max_expansions) {
    frontier_.push(tree.root());
  }

  [[nodiscard]] std::uint64_t total() const noexcept { return total_; }

  [[nodiscard]] std::int64_t sum_at(std::uint64_t k) {
    advance_to(k);
    return sums_[k - 1];
  }

  [[nodiscard]] IndexSubset subset_at(std::uint64_t k) {
    advance_to(k);
    IndexSubset out;
    out.indices.assign(flat_.begin() + static_cast<std::ptrdiff_t>(starts_[k - 1]),
                       flat_.begin() + static_cast<std::ptrdiff_t>(starts_[k]));
    out.sum = sums_[k - 1];
    return out;
  }

  /// Nodes popped (each pop expands that node's children).
  [[nodiscard]] std::uint64_t nodes_expanded() const noexcept { return frontier_.emitted(); }
  /// Nodes ever placed on the frontier, root included.
  [[nodiscard]] std::uint64_t nodes_generated() const noexcept { return frontier_.pushed(); }
  [[nodiscard]] std::uint32_t max_depth() const noexcept { return max_depth_; }
  [[nodiscard]] std::size_t frontier_size() const noexcept { return frontier_.size(); }

 private:
  void advance_to(std::uint64_t k) {
    if (k == 0 || k > total_) {
      throw RankError("rank " + std::to_string(k) + " outside [1, " + std::to_string(total_) + "]");
    }
    while (sums_.size() < k) {
      if (frontier_.emitted() >= max_expansions_) {
        throw CapacityError("selection would expand more than " +
                            std::to_string(max_expansions_) + " nodes");
      }
      Node node = frontier_.pop();
      max_depth_ = std::max<std::uint32_t>(max_depth_, node.depth);
      sums_.push_back(node.subset.sum);
      flat_.insert(flat_.end(), node.subset.indices.begin(), node.subset.indices.end());
      starts_.push_back(flat_.size());
      scratch_.clear();
      tree_->children(node, scratch_);
      for (Node& child : scratch_) frontier_.push(std::move(child));
    }
  }

  const Tree* tree_;
  std::uint64_t total_;
  std::uint64_t max_expansions_;
  Frontier<Node> frontier_;
  std::vector<std::int64_t> sums_;
  std::vector<std::uint32_t> flat_;
  std::vector<std::size_t> starts_{0};
  std::vector<Node> scratch_;
  std::uint32_t max_depth_ = 0;
};

/// Lower-bound binary search over ranks [1, selection.total()] for the
/// leftmost rank whose sum is >= target; returns that subset if its sum is
/// exactly target. Every probed rank is appended to `probed`.
template <class Selection>
std::optional<IndexSubset> rank_lower_bound(Selection& selection, std::int64_t target,
                                            std::vector<std::uint64_t>& probed) {
  std::uint64_t lo = 1;
  std::uint64_t hi = selection.total() + 1;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    probed.push_back(mid);
    if (selection.sum_at(mid) < target) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  // lo <= total only if it was probed, so these lookups hit the cache.
  if (lo > selection.total() || selection.sum_at(lo) != target) return std::nullopt;
  return selection.subset_at(lo);
}

/// ceil(log2(m)) for m >= 1.
[[nodiscard]] constexpr std::uint64_t ceil_log2(std::uint64_t m) noexcept {
  std::uint64_t bits = 0;
  while (bits < 64 && (std::uint64_t{1} << bits) < m) ++bits;
  return bits;
}

/// Probe budget of a lower-bound search over m ranks.
[[nodiscard]] constexpr std::uint64_t probe_bound(std::uint64_t m) noexcept {
  return ceil_log2(m) + 1;
}

}  // namespace subsetsum
