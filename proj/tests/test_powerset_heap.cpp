#include <random>
#include <set>

#include "doctest.h"
#include "subsetsum/errors.hpp"
#include "subsetsum/oracle.hpp"
#include "subsetsum/powerset_heap.hpp"
#include "test_support.hpp"

using namespace subsetsum;
using test_support::positive_set;
using test_support::scaled_of;
using V = std::vector<std::int64_t>;

TEST_CASE("binheap_root is the smallest element") {
  CHECK(scaled_of(binheap_root(positive_set({2, 5, 7})).subset, positive_set({2, 5, 7})) == V{2});
  CHECK(binheap_root(positive_set({1})).subset.sum == 1);
  const auto s = positive_set({1, 5, 6, 13, 16});
  CHECK(scaled_of(binheap_root(s).subset, s) == V{1});
}

TEST_CASE("binheap_children") {
  const auto s = positive_set({2, 5, 7});
  const auto root = binheap_root(s);
  auto kids = binheap_children(root, s);
  REQUIRE(kids.size() == 2);
  CHECK(scaled_of(kids[0].subset, s) == V{5});
  CHECK(scaled_of(kids[1].subset, s) == V{2, 5});

  auto grand = binheap_children(kids[0], s);
  REQUIRE(grand.size() == 2);
  CHECK(scaled_of(grand[0].subset, s) == V{7});
  CHECK(scaled_of(grand[1].subset, s) == V{5, 7});

  BinHeapNode full{IndexSubset{{0, 1, 2}, 14}, 0};
  CHECK(binheap_children(full, s).empty());
}

TEST_CASE("binheap_kth_smallest") {
  const auto s = positive_set({2, 5, 7});
  CHECK(binheap_kth_smallest(s, 1).sum == 2);
  CHECK(binheap_kth_smallest(s, 4).sum == 7);
  CHECK(binheap_kth_smallest(s, 7).sum == 14);
  CHECK_THROWS_AS((void)binheap_kth_smallest(s, 0), RankError);
  CHECK_THROWS_AS((void)binheap_kth_smallest(s, 8), RankError);
}

TEST_CASE("binheap_search") {
  const auto s = positive_set({2, 5, 7});
  const auto nine = binheap_search(s, 9);
  REQUIRE(nine.subset);
  CHECK(scaled_of(*nine.subset, s) == V{2, 7});
  CHECK_FALSE(binheap_search(s, 8).subset);
  const auto two = binheap_search(s, 2);
  REQUIRE(two.subset);
  CHECK(scaled_of(*two.subset, s) == V{2});
  CHECK_FALSE(binheap_search(s, 15).subset);
  CHECK_FALSE(binheap_search(s, 1).subset);
}

TEST_CASE("powerset heap rejects sets whose powerset overflows") {
  const ScaledSet big = positive_set(V(63, 1));
  CHECK_THROWS_AS(PowersetHeap{big}, CapacityError);
}

TEST_CASE("property: full expansion is complete, unique and heap-ordered") {
  std::mt19937_64 rng(3);
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto s = positive_set(test_support::random_values(rng, n, 1, 50));
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<BinHeapNode> stack{binheap_root(s)};
    while (!stack.empty()) {
      auto node = std::move(stack.back());
      stack.pop_back();
      REQUIRE(node.subset.valid_for(s));
      REQUIRE(seen.insert(node.subset.indices).second);
      for (auto& kid : binheap_children(node, s)) {
        REQUIRE(kid.subset.sum >= node.subset.sum);
        stack.push_back(std::move(kid));
      }
    }
    CHECK(seen.size() == (std::size_t{1} << n) - 1);
  }
}

TEST_CASE("property: selection matches sorted enumeration and stays lazy") {
  std::mt19937_64 rng(5);
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto s = positive_set(test_support::random_values(rng, n, 1, 30));
    const PowersetHeap heap(s);
    const auto expected = oracle::enumerate_sorted_sums(s, 0);
    REQUIRE(expected.size() == heap.total());
    RankedSelection selection(heap, heap.total(), kDefaultMaxExpansions);
    for (std::uint64_t k = 1; k <= heap.total(); ++k) {
      REQUIRE(selection.sum_at(k) == expected[k - 1].sum);
      REQUIRE(selection.nodes_expanded() == k);
      REQUIRE(selection.nodes_generated() <= 2 * k + 1);
    }
  }
}

TEST_CASE("property: search decision equals brute force, probes within bound") {
  std::mt19937_64 rng(9);
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto s = positive_set(test_support::random_values(rng, n, 1, 25));
    std::set<std::int64_t> sums;
    for (const auto& e : oracle::enumerate_sorted_sums(s, 0)) sums.insert(e.sum);
    const std::int64_t top = s.max_sum(n);
    const std::uint64_t bound = probe_bound((std::uint64_t{1} << n) - 1);
    for (std::int64_t t = 0; t <= top + 1; ++t) {
      const auto r = binheap_search(s, t);
      REQUIRE(r.subset.has_value() == sums.contains(t));
      REQUIRE(r.probed_ranks.size() <= bound);
      if (r.subset) REQUIRE(r.subset->sum == t);
    }
  }
}
