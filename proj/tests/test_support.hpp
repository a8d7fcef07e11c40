#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "subsetsum/core_model.hpp"

namespace test_support {

inline std::vector<std::int64_t> random_values(std::mt19937_64& rng, std::size_t n, std::int64_t lo,
                                               std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> dist(lo, hi);
  std::vector<std::int64_t> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

inline subsetsum::ScaledSet positive_set(std::vector<std::int64_t> values) {
  return subsetsum::normalize({std::move(values), 0});
}

inline std::vector<std::int64_t> scaled_of(const subsetsum::IndexSubset& subset, const subsetsum::ScaledSet& s) {
  std::vector<std::int64_t> out;
  for (auto i : subset.indices) out.push_back(s.scaled(i));
  return out;
}

inline std::int64_t total(const std::vector<std::int64_t>& v) {
  std::int64_t t = 0;
  for (auto x : v) t += x;
  return t;
}

}  // namespace test_support
