#pragma once

#include <cstdint>
#include <istream>
#include <string_view>
#include <vector>

#include "subsetsum/core_model.hpp"

namespace subsetsum {

/// Parses comma- and/or whitespace-separated 64-bit integers. Throws
/// InputError on an empty list or any non-integer token.
[[nodiscard]] std::vector<std::int64_t> parse_values(std::string_view text);

/// Parses a single integer (surrounding whitespace allowed).
[[nodiscard]] std::int64_t parse_int(std::string_view text);

/// Parses an instance line "<values> ; <target>", e.g. "-7,-3,-2,5,8 ; 0".
[[nodiscard]] InputSet parse_instance_line(std::string_view line);

/// Reads one instance per line. Blank lines and lines starting with '#' are
/// skipped. Errors name the 1-based line number.
[[nodiscard]] std::vector<InputSet> read_instances(std::istream& in);

}  // namespace subsetsum
