#include <random>
#include <set>

#include "doctest.h"
#include "subsetsum/errors.hpp"
#include "subsetsum/oracle.hpp"
#include "subsetsum/subset_tree.hpp"
#include "test_support.hpp"

using namespace subsetsum;
using test_support::positive_set;
using test_support::scaled_of;
using V = std::vector<std::int64_t>;

TEST_CASE("binomial") {
  CHECK(binomial(6, 4) == 15);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 4) == 0);
  CHECK(binomial(62, 31) == 465428353255261088ULL);
  CHECK_THROWS_AS((void)binomial(200, 100), CapacityError);
}

TEST_CASE("subtree_root holds the n smallest elements") {
  const auto six = positive_set({1, 2, 3, 4, 5, 6});
  const auto root = subtree_root(six, 4);
  CHECK(scaled_of(root.subset, six) == V{1, 2, 3, 4});
  CHECK(root.min_modified_pos == 0);

  const auto paper = positive_set({1, 5, 6, 13, 16});
  CHECK(scaled_of(subtree_root(paper, 3).subset, paper) == V{1, 5, 6});
  CHECK(subtree_root(paper, 3).subset.sum == 12);
  CHECK(scaled_of(subtree_root(paper, 5).subset, paper) == V{1, 5, 6, 13, 16});

  CHECK_THROWS_AS((void)subtree_root(paper, 0), OrderError);
  CHECK_THROWS_AS((void)subtree_root(paper, 6), OrderError);
}

TEST_CASE("subtree_children cascades conflicts rightward") {
  const auto six = positive_set({1, 2, 3, 4, 5, 6});
  const SubsetTree tree(six, 4);
  const auto kids = subtree_children(tree.root(), tree);
  REQUIRE(kids.size() == 4);
  CHECK(scaled_of(kids[0].subset, six) == V{1, 2, 3, 5});
  CHECK(kids[0].min_modified_pos == 3);
  CHECK(scaled_of(kids[1].subset, six) == V{1, 2, 4, 5});
  CHECK(kids[1].min_modified_pos == 2);
  CHECK(scaled_of(kids[2].subset, six) == V{1, 3, 4, 5});
  CHECK(scaled_of(kids[3].subset, six) == V{2, 3, 4, 5});
  CHECK(kids[3].min_modified_pos == 0);

  // {1,2,3,5} may only modify position 3
  const auto grand = subtree_children(kids[0], tree);
  REQUIRE(grand.size() == 1);
  CHECK(scaled_of(grand[0].subset, six) == V{1, 2, 3, 6});
  CHECK(subtree_children(grand[0], tree).empty());
}

TEST_CASE("subtree_children at the end of the set") {
  const auto six = positive_set({1, 2, 3, 4, 5, 6});
  const SubsetTree full(six, 6);
  CHECK(subtree_children(full.root(), full).empty());

  // {3,4,5,6} as a 4-subset: every cascade runs off the end
  const SubsetTree tree(six, 4);
  SubsetTreeNode last{IndexSubset{{2, 3, 4, 5}, 18}, 0, 0};
  CHECK(subtree_children(last, tree).empty());

  // {1,2,4,6}: position 3 blocked, positions 2..0 still move
  SubsetTreeNode partial{IndexSubset{{0, 1, 3, 5}, 13}, 0, 0};
  const auto kids = subtree_children(partial, tree);
  REQUIRE(kids.size() == 3);
  CHECK(scaled_of(kids[0].subset, six) == V{1, 2, 5, 6});
  CHECK(scaled_of(kids[1].subset, six) == V{1, 3, 4, 6});
  CHECK(scaled_of(kids[2].subset, six) == V{2, 3, 4, 6});
}

TEST_CASE("subtree_kth_smallest") {
  const auto paper = positive_set({1, 5, 6, 13, 16});
  const SubsetTree tree(paper, 3);
  CHECK(subtree_kth_smallest(tree, 1).sum == 12);
  const auto sixth = subtree_kth_smallest(tree, 6);
  CHECK(sixth.sum == 24);
  CHECK(scaled_of(sixth, paper) == V{5, 6, 13});
  CHECK_THROWS_AS((void)subtree_kth_smallest(tree, 0), RankError);
  CHECK_THROWS_AS((void)subtree_kth_smallest(tree, 11), RankError);

  const auto six = positive_set({1, 2, 3, 4, 5, 6});
  const auto first = subtree_kth_smallest(SubsetTree(six, 4), 1);
  CHECK(scaled_of(first, six) == V{1, 2, 3, 4});
  CHECK(first.sum == 10);
}

TEST_CASE("subtree_expand_all") {
  const auto six = positive_set({1, 2, 3, 4, 5, 6});
  const auto all = subtree_expand_all(SubsetTree(six, 4));
  CHECK(all.size() == 15);
  CHECK(std::set<std::vector<std::uint32_t>>(
            [&] {
              std::set<std::vector<std::uint32_t>> s;
              for (const auto& x : all) s.insert(x.indices);
              return s;
            }())
            .size() == 15);
  CHECK(subtree_expand_all(SubsetTree(six, 6)).size() == 1);
  const auto singles = subtree_expand_all(SubsetTree(six, 1));
  CHECK(singles.size() == 6);
  CHECK_THROWS_AS((void)subtree_expand_all(SubsetTree(six, 3), 19), CapacityError);
  CHECK(subtree_expand_all(SubsetTree(six, 3), 20).size() == 20);
}

TEST_CASE("property: complete, unique, heap-ordered for N <= 10") {
  std::mt19937_64 rng(17);
  for (std::size_t size = 1; size <= 10; ++size) {
    const auto s = positive_set(test_support::random_values(rng, size, 1, 40));
    for (std::size_t n = 1; n <= size; ++n) {
      const SubsetTree tree(s, n);
      std::set<std::vector<std::uint32_t>> seen;
      std::vector<SubsetTreeNode> stack{tree.root()};
      std::uint64_t expansions = 0;
      std::uint32_t max_depth = 0;
      while (!stack.empty()) {
        auto node = std::move(stack.back());
        stack.pop_back();
        ++expansions;
        max_depth = std::max(max_depth, node.depth);
        REQUIRE(node.subset.size() == n);
        REQUIRE(node.subset.valid_for(s));
        REQUIRE(node.min_modified_pos < n);
        REQUIRE(seen.insert(node.subset.indices).second);
        const auto kids = subtree_children(node, tree);
        REQUIRE(kids.size() <= n);
        for (auto kid : kids) {
          REQUIRE(kid.subset.sum >= node.subset.sum);
          REQUIRE(kid.subset.indices[kid.min_modified_pos] != node.subset.indices[kid.min_modified_pos]);
          REQUIRE(kid.min_modified_pos >= node.min_modified_pos);
          stack.push_back(std::move(kid));
        }
      }
      REQUIRE(seen.size() == binomial(size, n));
      REQUIRE(subtree_expand_all(tree).size() == binomial(size, n));
      CHECK(max_depth <= expansions);
    }
  }
}

TEST_CASE("property: selection matches sorted enumeration, including ties") {
  std::mt19937_64 rng(23);
  for (std::size_t size = 1; size <= 10; ++size) {
    // narrow range forces many tied sums
    const auto s = positive_set(test_support::random_values(rng, size, 1, 6));
    for (std::size_t n = 1; n <= size; ++n) {
      const SubsetTree tree(s, n);
      const auto expected = oracle::enumerate_sorted_sums(s, n);
      RankedSelection selection(tree, tree.total(), kDefaultMaxExpansions);
      for (std::uint64_t k = 1; k <= tree.total(); ++k) {
        REQUIRE(selection.sum_at(k) == expected[k - 1].sum);
        REQUIRE(selection.nodes_generated() <= k * n + 1);
      }
      CHECK(selection.max_depth() <= selection.nodes_expanded());
    }
  }
}

TEST_CASE("selection answers earlier ranks from its cache") {
  const auto s = positive_set({1, 5, 6, 13, 16});
  const SubsetTree tree(s, 3);
  RankedSelection selection(tree, tree.total(), kDefaultMaxExpansions);
  CHECK(selection.sum_at(8) == 30);
  CHECK(selection.nodes_expanded() == 8);
  CHECK(selection.sum_at(2) == 19);
  CHECK(selection.nodes_expanded() == 8);
  CHECK(scaled_of(selection.subset_at(6), s) == V{5, 6, 13});
}

TEST_CASE("selection enforces its expansion cap") {
  const auto s = positive_set({1, 2, 3, 4, 5, 6, 7, 8});
  const SubsetTree tree(s, 4);
  RankedSelection selection(tree, tree.total(), 10);
  CHECK(selection.sum_at(10) > 0);
  CHECK_THROWS_AS((void)selection.sum_at(11), CapacityError);
}
