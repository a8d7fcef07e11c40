#include "subsetsum/subset_tree.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "subsetsum/errors.hpp"

namespace subsetsum {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays exact: r is C(n - k + i - 1, i - 1).
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) {
      throw CapacityError("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                          ") exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(r);
}

SubsetTree::SubsetTree(const ScaledSet& s, std::size_t n) : set_(&s), n_(n) {
  if (n == 0 || n > s.size()) {
    throw OrderError("subset order " + std::to_string(n) + " outside [1, " +
                     std::to_string(s.size()) + "]");
  }
  total_ = binomial(s.size(), n);
}

SubsetTreeNode SubsetTree::root() const {
  SubsetTreeNode node;
  node.subset.indices.resize(n_);
  std::iota(node.subset.indices.begin(), node.subset.indices.end(), std::uint32_t{0});
  node.subset.sum = set_->min_sum(n_);
  return node;
}

void SubsetTree::children(const Node& node, std::vector<Node>& out) const {
  const auto& parent = node.subset.indices;
  const auto last = static_cast<std::uint32_t>(set_->size() - 1);
  for (std::uint32_t i = static_cast<std::uint32_t>(n_) - 1;; --i) {
    // The cascade shifts the run of consecutive indices starting at i up by
    // one; the child exists only if the run's last index is not already the
    // last element.
    std::uint32_t end = i;
    while (end + 1 < n_ && parent[end + 1] == parent[end] + 1) ++end;
    if (parent[end] < last) {
      SubsetTreeNode child{node.subset, i, node.depth + 1};
      auto& idx = child.subset.indices;
      for (std::uint32_t p = i; p <= end; ++p) {
        child.subset.sum += set_->scaled(idx[p] + 1) - set_->scaled(idx[p]);
        ++idx[p];
      }
      out.push_back(std::move(child));
    }
    if (i == node.min_modified_pos) break;
  }
}

SubsetTreeNode subtree_root(const ScaledSet& s, std::size_t n) { return SubsetTree(s, n).root(); }

std::vector<SubsetTreeNode> subtree_children(const SubsetTreeNode& node, const SubsetTree& tree) {
  std::vector<SubsetTreeNode> out;
  tree.children(node, out);
  return out;
}

IndexSubset subtree_kth_smallest(const SubsetTree& tree, std::uint64_t k) {
  RankedSelection selection(tree, tree.total(), kDefaultMaxExpansions);
  return selection.subset_at(k);
}

std::vector<IndexSubset> subtree_expand_all(const SubsetTree& tree, std::uint64_t cap) {
  if (tree.total() > cap) {
    throw CapacityError("tree has " + std::to_string(tree.total()) + " nodes, cap is " +
                        std::to_string(cap));
  }
  std::vector<IndexSubset> out;
  out.reserve(tree.total());
  std::vector<SubsetTreeNode> stack{tree.root()};
  std::vector<SubsetTreeNode> kids;
  while (!stack.empty()) {
    SubsetTreeNode node = std::move(stack.back());
    stack.pop_back();
    kids.clear();
    tree.children(node, kids);
    out.push_back(std::move(node.subset));
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(std::move(*it));
    if (out.size() > cap) throw CapacityError("subset tree expansion exceeded cap");
  }
  return out;
}

}  // namespace subsetsum
