#include <random>

#include "doctest.h"
#include "subsetsum/errors.hpp"
#include "subsetsum/oracle.hpp"
#include "test_support.hpp"

using namespace subsetsum;
using namespace subsetsum::oracle;
using V = std::vector<std::int64_t>;

namespace {
V sums_of(const std::vector<SumEntry>& entries) {
  V out;
  for (const auto& e : entries) out.push_back(e.sum);
  return out;
}
}  // namespace

TEST_CASE("dp_decision") {
  CHECK(dp_decision({{-8, -2, 5, 7, 9}, 10}));
  CHECK(dp_decision({{-7, -3, -2, 5, 8}, 0}));
  CHECK_FALSE(dp_decision({{2, 5, 7}, 8}));
  CHECK_FALSE(dp_decision({{1, 2}, 0}));  // empty subset does not count
  CHECK(dp_decision({{0, 2}, 0}));
  CHECK_FALSE(dp_decision({{-3, -1}, 1}));
  CHECK(dp_decision({{-3, -1}, -4}));
  CHECK_THROWS_AS((void)dp_decision({{1'000'000, 2}, 3}, 1000), CapacityError);
  CHECK_THROWS_AS((void)dp_decision({{}, 0}), InputError);
}

TEST_CASE("brute_force_solve") {
  CHECK(*brute_force_solve({{-8, -2, 5, 7, 9}, 10}) == V{-2, 5, 7});
  CHECK(*brute_force_solve({{5}, 5}) == V{5});
  CHECK_FALSE(brute_force_solve({{1, 2}, 4}));
  CHECK_THROWS_AS((void)brute_force_solve({V(26, 1), 3}), CapacityError);
}

TEST_CASE("enumerate_sorted_sums") {
  const ScaledSet paper = normalize({{-7, -3, -2, 5, 8}, 0});
  CHECK(sums_of(enumerate_sorted_sums(paper, 3)) == V{12, 19, 20, 22, 23, 24, 27, 30, 34, 35});
  const ScaledSet small = normalize({{2, 5, 7}, 0});
  CHECK(sums_of(enumerate_sorted_sums(small, 0)) == V{2, 5, 7, 7, 9, 12, 14});
  // {7} precedes {2,5} among the tied sums: lexicographic index order
  const auto all = enumerate_sorted_sums(small, 0);
  CHECK(all[2].indices == std::vector<std::uint32_t>{0, 1});
  CHECK(all[3].indices == std::vector<std::uint32_t>{2});
  const auto full = enumerate_sorted_sums(paper, 5);
  REQUIRE(full.size() == 1);
  CHECK(full[0].sum == 41);
  CHECK_THROWS_AS((void)enumerate_sorted_sums(paper, 3, 9), CapacityError);
  CHECK_THROWS_AS((void)enumerate_sorted_sums(paper, 0, 30), CapacityError);
}

TEST_CASE("property: dp and brute force agree") {
  std::mt19937_64 rng(41);
  for (int iter = 0; iter < 3000; ++iter) {
    const InputSet input{test_support::random_values(rng, 1 + rng() % 10, -20, 20),
                         static_cast<std::int64_t>(rng() % 121) - 60};
    const auto r = brute_force_solve(input);
    REQUIRE(dp_decision(input) == r.has_value());
    if (r) REQUIRE(test_support::total(*r) == input.target);
  }
}

TEST_CASE("property: enumeration lengths") {
  std::mt19937_64 rng(43);
  for (std::size_t size = 1; size <= 10; ++size) {
    const ScaledSet s = normalize({test_support::random_values(rng, size, -9, 9), 0});
    CHECK(enumerate_sorted_sums(s, 0).size() == (std::size_t{1} << size) - 1);
    std::size_t binom = 1;
    for (std::size_t n = 1; n <= size; ++n) {
      binom = binom * (size - n + 1) / n;
      const auto e = enumerate_sorted_sums(s, n);
      CHECK(e.size() == binom);
      CHECK(std::is_sorted(e.begin(), e.end(), [](const SumEntry& a, const SumEntry& b) { return a.sum < b.sum; }));
    }
  }
}
