#include "subsetsum/selftest.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "subsetsum/oracle.hpp"
#include "subsetsum/powerset_heap.hpp"
#include "subsetsum/report.hpp"
#include "subsetsum/subset_tree.hpp"

namespace subsetsum {
namespace {

void fail(CheckResult& check, const std::string& what) {
  if (check.passed) check.first_failure = what;
  check.passed = false;
}

std::vector<std::int64_t> random_values(std::mt19937_64& rng, std::size_t n, std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> dist(lo, hi);
  std::vector<std::int64_t> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

CheckResult check_solver_vs_oracle(const SelftestConfig& config, const SolveFn& solver) {
  CheckResult check;
  check.name = "solver vs dp oracle";
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<std::size_t> size_dist(1, config.max_n);
  std::uniform_int_distribution<std::int64_t> target_dist(-60, 60);

  for (std::uint64_t i = 0; i < config.instances && check.passed; ++i) {
    InputSet input;
    input.values = random_values(rng, size_dist(rng), -15, 15);
    input.target = target_dist(rng);
    ++check.cases;

    const SolveOutcome outcome = solver(input);
    const bool expected = oracle::dp_decision(input);
    const std::string where = "instance " + std::to_string(i) + ": " + instance_text(input);
    if (outcome.found() != expected) {
      fail(check, where + " (solver says " + (outcome.found() ? "found" : "not found") + ")");
      break;
    }
    if (!outcome.found()) continue;

    std::int64_t total = 0;
    for (std::int64_t v : *outcome.subset) total += v;
    if (total != input.target) {
      fail(check, where + " (returned subset sums to " + std::to_string(total) + ")");
      break;
    }
    auto remaining = input.values;
    for (std::int64_t v : *outcome.subset) {
      auto it = std::find(remaining.begin(), remaining.end(), v);
      if (it == remaining.end()) {
        fail(check, where + " (returned value " + std::to_string(v) + " not in input)");
        break;
      }
      remaining.erase(it);
    }
    const auto reference = oracle::brute_force_solve(input);
    if (reference && reference->size() != outcome.subset->size()) {
      fail(check, where + " (cardinality " + std::to_string(outcome.subset->size()) +
                      ", minimum is " + std::to_string(reference->size()) + ")");
    }
  }
  return check;
}

CheckResult check_subset_trees(const SelftestConfig& config) {
  CheckResult check;
  check.name = "subset tree completeness and heap order";
  std::mt19937_64 rng(config.seed ^ 0x5eedULL);
  for (std::size_t size = 1; size <= config.max_n; ++size) {
    const ScaledSet s = normalize({random_values(rng, size, 1, 40), 0});
    for (std::size_t n = 1; n <= size; ++n) {
      ++check.cases;
      const SubsetTree tree(s, n);
      const std::string where = "N=" + std::to_string(size) + " n=" + std::to_string(n);
      std::set<std::vector<std::uint32_t>> seen;
      std::vector<SubsetTreeNode> stack{tree.root()};
      while (!stack.empty()) {
        SubsetTreeNode node = std::move(stack.back());
        stack.pop_back();
        if (!node.subset.valid_for(s) || node.subset.size() != n) fail(check, where + " invalid node");
        if (!seen.insert(node.subset.indices).second) fail(check, where + " duplicate node");
        auto kids = subtree_children(node, tree);
        if (kids.size() > n) fail(check, where + " more than n children");
        for (auto& kid : kids) {
          if (kid.subset.sum < node.subset.sum) fail(check, where + " heap order violated");
          stack.push_back(std::move(kid));
        }
      }
      if (seen.size() != tree.total()) {
        fail(check, where + " expanded " + std::to_string(seen.size()) + " of " +
                        std::to_string(tree.total()) + " subsets");
      }
    }
  }
  return check;
}

CheckResult check_powerset_heaps(const SelftestConfig& config) {
  CheckResult check;
  check.name = "powerset heap completeness and heap order";
  std::mt19937_64 rng(config.seed ^ 0xbeefULL);
  for (std::size_t size = 1; size <= std::min<std::size_t>(config.max_n, 12); ++size) {
    ++check.cases;
    const ScaledSet s = normalize({random_values(rng, size, 1, 40), 0});
    const std::string where = "N=" + std::to_string(size);
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<BinHeapNode> stack{binheap_root(s)};
    while (!stack.empty()) {
      BinHeapNode node = std::move(stack.back());
      stack.pop_back();
      if (!node.subset.valid_for(s)) fail(check, where + " invalid node");
      if (!seen.insert(node.subset.indices).second) fail(check, where + " duplicate node");
      for (auto& kid : binheap_children(node, s)) {
        if (kid.subset.sum < node.subset.sum) fail(check, where + " heap order violated");
        stack.push_back(std::move(kid));
      }
    }
    if (seen.size() != (std::uint64_t{1} << size) - 1) fail(check, where + " incomplete expansion");
  }
  return check;
}

CheckResult check_selection(const SelftestConfig& config) {
  CheckResult check;
  check.name = "rank selection vs sorted enumeration";
  std::mt19937_64 rng(config.seed ^ 0xcafeULL);
  for (std::size_t size = 1; size <= std::min<std::size_t>(config.max_n, 8); ++size) {
    const ScaledSet s = normalize({random_values(rng, size, 1, 20), 0});
    for (std::size_t n = 1; n <= size; ++n) {
      ++check.cases;
      const SubsetTree tree(s, n);
      RankedSelection selection(tree, tree.total(), kDefaultMaxExpansions);
      const auto expected = oracle::enumerate_sorted_sums(s, n);
      for (std::uint64_t k = 1; k <= tree.total(); ++k) {
        if (selection.sum_at(k) != expected[k - 1].sum) {
          fail(check, "N=" + std::to_string(size) + " n=" + std::to_string(n) + " rank " + std::to_string(k));
          break;
        }
      }
    }
  }
  return check;
}

}  // namespace

std::vector<CheckResult> run_selftest(const SelftestConfig& config, const SolveFn& solver) {
  const SolveFn run = solver ? solver : SolveFn([](const InputSet& in) { return solve(in); });
  std::vector<CheckResult> results;
  results.push_back(check_solver_vs_oracle(config, run));
  results.push_back(check_subset_trees(config));
  results.push_back(check_powerset_heaps(config));
  results.push_back(check_selection(config));
  return results;
}

}  // namespace subsetsum
