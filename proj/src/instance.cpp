#include "subsetsum/instance.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "subsetsum/errors.hpp"

namespace subsetsum {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_separator(char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); }

}  // namespace

std::int64_t parse_int(std::string_view text) {
  const std::string_view t = trim(text);
  if (t.empty()) throw InputError("expected an integer, got an empty string");
  // from_chars rejects a leading '+'.
  const std::string_view digits = t.front() == '+' ? t.substr(1) : t;
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec == std::errc::result_out_of_range) {
    throw InputError("integer out of 64-bit range: '" + std::string(t) + "'");
  }
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
    throw InputError("not an integer: '" + std::string(t) + "'");
  }
  return value;
}

std::vector<std::int64_t> parse_values(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_separator(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_separator(text[j])) ++j;
    out.push_back(parse_int(text.substr(i, j - i)));
    i = j;
  }
  if (out.empty()) throw InputError("empty value list");
  return out;
}

InputSet parse_instance_line(std::string_view line) {
  const auto semi = line.find(';');
  if (semi == std::string_view::npos) {
    throw InputError("instance line is missing ';' and target: '" + std::string(line) + "'");
  }
  const std::string_view rest = line.substr(semi + 1);
  if (rest.find(';') != std::string_view::npos) throw InputError("instance line has more than one ';'");
  if (trim(rest).empty()) throw InputError("instance line is missing the target");
  InputSet input;
  input.values = parse_values(line.substr(0, semi));
  input.target = parse_int(rest);
  return input;
}

std::vector<InputSet> read_instances(std::istream& in) {
  std::vector<InputSet> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    try {
      out.push_back(parse_instance_line(t));
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace subsetsum
