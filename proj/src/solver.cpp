#include "subsetsum/solver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "subsetsum/errors.hpp"
#include "subsetsum/subset_tree.hpp"

namespace subsetsum {
namespace {

using Clock = std::chrono::steady_clock;

// Soundness check on every returned subset: the values must sum to the
// original target. Membership holds by construction (distinct indices).
void check_sound(const std::vector<std::int64_t>& values, std::int64_t target) {
  std::int64_t total = 0;
  for (std::int64_t v : values) total = detail::checked_add(total, v, "subset sum");
  if (values.empty() || total != target) {
    throw std::logic_error("solver returned a subset that does not sum to the target");
  }
}

}  // namespace

std::vector<std::uint64_t> SearchStats::probes_per_order() const {
  std::vector<std::uint64_t> out;
  out.reserve(orders.size());
  for (const auto& o : orders) out.push_back(o.probes());
  return out;
}

std::uint64_t SearchStats::probes_total() const {
  std::uint64_t total = 0;
  for (const auto& o : orders) total += o.probes();
  return total;
}

OrderSearch search_order(const ScaledSet& s, std::size_t n, std::int64_t scaled_target,
                         const SolverOptions& options) {
  const SubsetTree tree(s, n);
  OrderSearch result;
  result.trace.order = n;
  result.trace.scaled_target = scaled_target;

  if (options.range_short_circuit &&
      (scaled_target < s.min_sum(n) || scaled_target > s.max_sum(n))) {
    result.trace.short_circuited = true;
    return result;
  }

  RankedSelection selection(tree, tree.total(), options.max_expansions);
  result.subset = rank_lower_bound(selection, scaled_target, result.trace.probed_ranks);
  result.trace.nodes_expanded = selection.nodes_expanded();
  result.trace.found = result.subset.has_value();
  return result;
}

SolveOutcome solve(const InputSet& input, const SolverOptions& options) {
  const auto start = Clock::now();
  const ScaledSet s = normalize(input);
  SolveOutcome outcome;

  for (std::size_t order = 1; order <= s.size(); ++order) {
    const std::int64_t scaled_target = detail::checked_add(
        input.target,
        detail::checked_mul(s.offset(), static_cast<std::int64_t>(order), "offset * order"),
        "target + offset * order");

    OrderSearch hit = search_order(s, order, scaled_target, options);
    outcome.stats.nodes_expanded += hit.trace.nodes_expanded;
    outcome.stats.orders.push_back(std::move(hit.trace));
    ++outcome.stats.orders_searched;
    if (hit.subset) {
      outcome.subset = unscale(*hit.subset, s);
      check_sound(*outcome.subset, input.target);
      break;
    }
  }

  outcome.stats.elapsed = Clock::now() - start;
  return outcome;
}

SolveOutcome solve_positive(const InputSet& input, const SolverOptions& options) {
  const auto start = Clock::now();
  if (input.values.empty()) throw InputError("input set is empty");
  if (std::any_of(input.values.begin(), input.values.end(), [](std::int64_t v) { return v <= 0; })) {
    throw PreconditionError(
        "positive fast path requires every value > 0; use solve for mixed-sign input");
  }
  const ScaledSet s = normalize(input);
  SolveOutcome outcome;

  OrderTrace trace;
  trace.scaled_target = input.target;
  if (options.range_short_circuit && (input.target < s.min_sum(1) || input.target > s.max_sum(s.size()))) {
    trace.short_circuited = true;
  } else {
    BinHeapSearch found = binheap_search(s, input.target, options.max_expansions);
    trace.probed_ranks = std::move(found.probed_ranks);
    trace.nodes_expanded = found.nodes_expanded;
    trace.found = found.subset.has_value();
    if (found.subset) {
      outcome.subset = unscale(*found.subset, s);
      check_sound(*outcome.subset, input.target);
    }
  }
  outcome.stats.orders_searched = 1;
  outcome.stats.nodes_expanded = trace.nodes_expanded;
  outcome.stats.orders.push_back(std::move(trace));
  outcome.stats.elapsed = Clock::now() - start;
  return outcome;
}

}  // namespace subsetsum
