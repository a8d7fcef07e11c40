#include "subsetsum/powerset_heap.hpp"

#include <string>

#include "subsetsum/errors.hpp"

namespace subsetsum {

PowersetHeap::PowersetHeap(const ScaledSet& s) : set_(&s) {
  if (s.size() > 62) {
    throw CapacityError("powerset heap supports at most 62 elements, got " +
                        std::to_string(s.size()));
  }
  total_ = (std::uint64_t{1} << s.size()) - 1;
}

BinHeapNode PowersetHeap::root() const {
  BinHeapNode node;
  node.subset.indices = {0};
  node.subset.sum = set_->scaled(0);
  return node;
}

void PowersetHeap::children(const Node& node, std::vector<Node>& out) const {
  const std::uint32_t next = node.max_index() + 1;
  if (next >= set_->size()) return;
  const std::int64_t next_value = set_->scaled(next);

  BinHeapNode left{node.subset, node.depth + 1};
  left.subset.sum += next_value - set_->scaled(left.subset.indices.back());
  left.subset.indices.back() = next;
  out.push_back(std::move(left));

  BinHeapNode right{node.subset, node.depth + 1};
  right.subset.indices.push_back(next);
  right.subset.sum += next_value;
  out.push_back(std::move(right));
}

BinHeapNode binheap_root(const ScaledSet& s) { return PowersetHeap(s).root(); }

std::vector<BinHeapNode> binheap_children(const BinHeapNode& node, const ScaledSet& s) {
  std::vector<BinHeapNode> out;
  PowersetHeap(s).children(node, out);
  return out;
}

IndexSubset binheap_kth_smallest(const ScaledSet& s, std::uint64_t k) {
  const PowersetHeap heap(s);
  RankedSelection selection(heap, heap.total(), kDefaultMaxExpansions);
  return selection.subset_at(k);
}

BinHeapSearch binheap_search(const ScaledSet& s, std::int64_t target, std::uint64_t max_expansions) {
  const PowersetHeap heap(s);
  RankedSelection selection(heap, heap.total(), max_expansions);
  BinHeapSearch result;
  result.subset = rank_lower_bound(selection, target, result.probed_ranks);
  result.nodes_expanded = selection.nodes_expanded();
  return result;
}

}  // namespace subsetsum
