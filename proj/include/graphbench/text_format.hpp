#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "graphbench/error.hpp"

// Small helpers shared by the line-oriented text formats.
namespace graphbench::text {

/// Shortest round-trip decimal form of a double.
inline void put_double(std::ostream& out, double value) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  out.write(buf, end - buf);
}

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

template <typename Int>
Int parse_int(std::string_view field, std::size_t line, const char* what) {
  Int value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(field) + "'");
  }
  return value;
}

inline double parse_double(std::string_view field, std::size_t line, const char* what,
                           bool allow_inf = false) {
  double value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size() || std::isnan(value) ||
      (!allow_inf && std::isinf(value))) {
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(field) + "'");
  }
  return value;
}

/// Reads the next line; returns false at end of stream.
inline bool next_line(std::istream& in, std::string& line, std::size_t& line_no) {
  if (!std::getline(in, line)) return false;
  ++line_no;
  return true;
}

}  // namespace graphbench::text
