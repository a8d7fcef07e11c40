#include "subsetsum/report.hpp"

#include <sstream>

#include "json.hpp"

namespace subsetsum {
namespace {

std::string format_ranks(const std::vector<std::uint64_t>& ranks) {
  std::string out = "[";
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(ranks[i]);
  }
  return out + "]";
}

}  // namespace

std::string format_set(std::span<const std::int64_t> values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(values[i]);
  }
  return out + "}";
}

std::string outcome_text(const SolveOutcome& outcome) {
  return outcome.found() ? "FOUND: " + format_set(*outcome.subset) : "NOT FOUND";
}

std::string outcome_json(const SolveOutcome& outcome) {
  nlohmann::ordered_json j;
  j["found"] = outcome.found();
  j["subset"] = outcome.found() ? nlohmann::ordered_json(*outcome.subset) : nullptr;
  j["orders_searched"] = outcome.stats.orders_searched;
  j["probes_per_order"] = outcome.stats.probes_per_order();
  j["nodes_expanded"] = outcome.stats.nodes_expanded;
  j["elapsed_ns"] = static_cast<std::int64_t>(outcome.stats.elapsed.count());
  return j.dump();
}

std::vector<std::string> trace_lines(const InputSet& input, const SolveOutcome& outcome) {
  const ScaledSet s = normalize(input);
  std::vector<std::string> lines;
  lines.push_back("input: " + format_set(input.values) + " target " + std::to_string(input.target));
  lines.push_back("sorted: " + format_set(s.sorted_values()));
  lines.push_back("offset: " + std::to_string(s.offset()));
  lines.push_back("scaled: " + format_set(s.scaled_values()));

  for (const OrderTrace& o : outcome.stats.orders) {
    std::ostringstream line;
    if (o.order == 0) {
      line << "all subsets";
    } else {
      line << "order " << o.order;
    }
    line << ": scaled target " << o.scaled_target << ", ranks probed " << format_ranks(o.probed_ranks)
         << ", ";
    if (o.found && outcome.found()) {
      std::vector<std::int64_t> scaled;
      for (std::int64_t v : *outcome.subset) scaled.push_back(v + s.offset());
      line << "hit " << format_set(scaled);
    } else if (o.short_circuited) {
      line << "miss (outside sum range)";
    } else {
      line << "miss";
    }
    lines.push_back(line.str());
  }
  return lines;
}

std::string instance_text(const InputSet& input) {
  std::string out;
  for (std::size_t i = 0; i < input.values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(input.values[i]);
  }
  return out + " ; " + std::to_string(input.target);
}

}  // namespace subsetsum
