#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <system_error>

#include "cnls/errors.hpp"

namespace cnls::detail {

// Shortest representation that parses back to the same double.
inline std::string format_double(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, result.ptr);
}

inline double parse_double(std::string_view text) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto result = std::from_chars(first, last, value);
  if (result.ec != std::errc() || result.ptr != last) {
    throw FormatError("not a number: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace cnls::detail
