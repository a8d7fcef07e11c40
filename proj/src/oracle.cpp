#include "subsetsum/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "subsetsum/errors.hpp"

namespace subsetsum::oracle {
namespace {

// Advances `idx` (strictly increasing, values < n) to the next combination in
// lexicographic order. Returns false after the last one.
bool next_combination(std::vector<std::uint32_t>& idx, std::size_t n) {
  const std::size_t r = idx.size();
  for (std::size_t j = r; j-- > 0;) {
    if (idx[j] < n - r + j) {
      ++idx[j];
      for (std::size_t m = j + 1; m < r; ++m) idx[m] = idx[m - 1] + 1;
      return true;
    }
  }
  return false;
}

void all_subsets_lex(const ScaledSet& s, std::vector<std::uint32_t>& prefix, std::int64_t sum,
                     std::vector<SumEntry>& out) {
  const std::uint32_t from = prefix.empty() ? 0 : prefix.back() + 1;
  for (std::uint32_t i = from; i < s.size(); ++i) {
    prefix.push_back(i);
    out.push_back({sum + s.scaled(i), prefix});
    all_subsets_lex(s, prefix, sum + s.scaled(i), out);
    prefix.pop_back();
  }
}

}  // namespace

bool dp_decision(const InputSet& input, std::uint64_t cell_cap) {
  if (input.values.empty()) throw InputError("input set is empty");
  std::int64_t neg_total = 0;
  std::int64_t pos_total = 0;
  for (std::int64_t v : input.values) {
    if (v < 0) neg_total = detail::checked_add(neg_total, v, "sum of negative values");
    else pos_total = detail::checked_add(pos_total, v, "sum of positive values");
  }
  const unsigned __int128 width = static_cast<unsigned __int128>(pos_total - static_cast<__int128>(neg_total)) + 1;
  const unsigned __int128 cells = width * (input.values.size() + 1);
  if (cells > cell_cap) {
    throw CapacityError("DP table needs more than " + std::to_string(cell_cap) + " cells");
  }
  if (input.target < neg_total || input.target > pos_total) return false;

  // reach[s - neg_total]: some nonempty subset of the prefix sums to s.
  const auto w = static_cast<std::size_t>(width);
  std::vector<char> reach(w, 0);
  std::vector<char> next(w, 0);
  for (std::int64_t v : input.values) {
    next = reach;
    next[static_cast<std::size_t>(v - neg_total)] = 1;
    for (std::size_t s = 0; s < w; ++s) {
      if (!reach[s]) continue;
      const std::int64_t shifted = static_cast<std::int64_t>(s) + v;
      if (shifted >= 0 && static_cast<std::size_t>(shifted) < w) next[static_cast<std::size_t>(shifted)] = 1;
    }
    reach.swap(next);
  }
  return reach[static_cast<std::size_t>(input.target - neg_total)] != 0;
}

std::optional<std::vector<std::int64_t>> brute_force_solve(const InputSet& input) {
  const std::size_t n = input.values.size();
  if (n == 0) throw InputError("input set is empty");
  if (n > kBruteForceMaxN) {
    throw CapacityError("brute force supports at most " + std::to_string(kBruteForceMaxN) +
                        " values, got " + std::to_string(n));
  }
  for (std::size_t r = 1; r <= n; ++r) {
    std::vector<std::uint32_t> idx(r);
    std::iota(idx.begin(), idx.end(), std::uint32_t{0});
    do {
      __int128 total = 0;
      for (std::uint32_t i : idx) total += input.values[i];
      if (total == input.target) {
        std::vector<std::int64_t> out;
        for (std::uint32_t i : idx) out.push_back(input.values[i]);
        return out;
      }
    } while (next_combination(idx, n));
  }
  return std::nullopt;
}

std::vector<SumEntry> enumerate_sorted_sums(const ScaledSet& s, std::size_t n, std::uint64_t cap) {
  const std::size_t size = s.size();
  if (n > size) throw OrderError("subset order exceeds set size");

  std::vector<SumEntry> out;
  if (n == 0) {
    if (size >= 63 || ((std::uint64_t{1} << size) - 1) > cap) {
      throw CapacityError("enumeration of all subsets exceeds cap");
    }
    std::vector<std::uint32_t> prefix;
    all_subsets_lex(s, prefix, 0, out);
  } else {
    // Count first so the cap is enforced before allocating.
    unsigned __int128 count = 1;
    for (std::size_t i = 1; i <= n; ++i) {
      count = count * (size - n + i) / i;
      if (count > cap) throw CapacityError("enumeration of n-subsets exceeds cap");
    }
    std::vector<std::uint32_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::uint32_t{0});
    do {
      std::int64_t total = 0;
      for (std::uint32_t i : idx) total += s.scaled(i);
      out.push_back({total, idx});
    } while (next_combination(idx, size));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const SumEntry& a, const SumEntry& b) { return a.sum < b.sum; });
  return out;
}

}  // namespace subsetsum::oracle
