#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "subsetsum/core_model.hpp"
#include "subsetsum/solver.hpp"

namespace subsetsum {

/// "{a, b, c}"
[[nodiscard]] std::string format_set(std::span<const std::int64_t> values);

/// "FOUND: {a, b, c}" or "NOT FOUND".
[[nodiscard]] std::string outcome_text(const SolveOutcome& outcome);

/// Single-line JSON object with exactly the fields found, subset,
/// orders_searched, probes_per_order, nodes_expanded, elapsed_ns. `subset` is
/// null when nothing was found.
[[nodiscard]] std::string outcome_json(const SolveOutcome& outcome);

/// Step-by-step account of a solve: input, offset, scaled set, then one line
/// per searched order with its scaled target, probed ranks and outcome.
[[nodiscard]] std::vector<std::string> trace_lines(const InputSet& input, const SolveOutcome& outcome);

/// Same as an InstanceLine: "a,b,c ; t".
[[nodiscard]] std::string instance_text(const InputSet& input);

}  // namespace subsetsum
